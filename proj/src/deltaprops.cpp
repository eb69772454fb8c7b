#include "hstar/deltaprops.hpp"

#include <algorithm>
#include <set>

namespace hstar::props {

using exactla::IntMatrix;

namespace {

std::size_t top_nonzero(const IntVec& delta) {
    for (std::size_t i = delta.size(); i-- > 0;)
        if (delta[i] != 0) return i;
    return 0;
}

} // namespace

bool is_shifted_symmetric(const IntVec& delta) {
    if (delta.empty()) throw Error(ErrorKind::Shape, "empty sequence");
    const std::size_t d = delta.size() - 1;
    if (d == 0) return true;
    for (std::size_t i = 0; i <= (d - 1) / 2; ++i)
        if (delta[d - i] != delta[i + 1]) return false;
    return true;
}

bool is_symmetric(const IntVec& delta) {
    if (delta.empty()) throw Error(ErrorKind::Shape, "empty sequence");
    const std::size_t s = top_nonzero(delta);
    for (std::size_t i = 0; i <= s / 2; ++i)
        if (delta[i] != delta[s - i]) return false;
    return true;
}

bool stanley_holds(const IntVec& delta) {
    if (delta.empty()) throw Error(ErrorKind::Shape, "empty sequence");
    const std::size_t s = top_nonzero(delta);
    Int prefix = 0, suffix = 0;
    for (std::size_t i = 0; i <= s / 2; ++i) {
        prefix += delta[i];
        suffix += delta[s - i];
        if (prefix > suffix) return false;
    }
    return true;
}

bool hibi_holds(const IntVec& delta) {
    if (delta.empty()) throw Error(ErrorKind::Shape, "empty sequence");
    const std::size_t d = delta.size() - 1;
    if (d == 0) return true;
    Int tail = 0, head = 0;
    for (std::size_t i = 0; i <= (d - 1) / 2; ++i) {
        tail += delta[d - i];
        head += delta[i + 1];
        if (tail > head) return false;
    }
    return true;
}

std::vector<Int> facet_volumes(const poly::Simplex& s) {
    const std::size_t d = s.dim();
    std::vector<Int> vols;
    vols.reserve(d + 1);
    for (std::size_t omit = 0; omit <= d; ++omit) {
        if (d == 1) { // facet is a single lattice point
            vols.emplace_back(1);
            continue;
        }
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i <= d; ++i)
            if (i != omit) keep.push_back(i);
        IntMatrix edges(d - 1, d);
        for (std::size_t i = 1; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                edges(i - 1, j) =
                    s.base().vertex(keep[i])[j] - s.base().vertex(keep[0])[j];
        vols.push_back(exactla::minor_gcd(edges, d - 1));
    }
    return vols;
}

ShiftedSymmetryReport shifted_symmetry_report(const poly::Simplex& s) {
    auto delta = ehrhart::delta_from_box(s);
    ShiftedSymmetryReport rep{std::move(delta), false, true, true,
                              std::nullopt, std::nullopt};
    rep.shifted_symmetric = is_shifted_symmetric(rep.delta);

    auto vols = facet_volumes(s);
    for (std::size_t i = 0; i < vols.size(); ++i) {
        if (vols[i] != 1) {
            rep.all_facets_unimodular = false;
            rep.facet_witness = {i, vols[i]};
            break;
        }
    }

    for (const auto& bp : ehrhart::box_points(s)) {
        if (bp.degree == 0) continue; // the origin
        for (std::size_t j = 0; j < bp.coeffs.size(); ++j) {
            if (bp.coeffs[j] == 0) {
                rep.box_strictly_interior = false;
                rep.box_witness = {bp, j};
                break;
            }
        }
        if (rep.box_witness) break;
    }
    return rep;
}

PrimeVolumeReport prime_volume_criterion(const poly::Simplex& s) {
    auto delta = ehrhart::delta_from_box(s);
    const std::size_t d = s.dim();
    Int vol = delta.sum();
    if (!is_prime(vol))
        return {PrimeVolumeStatus::Inapplicable, "volume is not prime",
                std::move(delta)};

    std::size_t low = 0;
    for (std::size_t i = 1; i <= d; ++i)
        if (delta[i] != 0) {
            low = i;
            break;
        }
    if (low == 0)
        return {PrimeVolumeStatus::Inapplicable,
                "no nonzero entry past delta_0", std::move(delta)};
    if (low != d + 1 - delta.top_index())
        return {PrimeVolumeStatus::Inapplicable,
                "degree gap condition fails", std::move(delta)};
    if (is_shifted_symmetric(delta))
        return {PrimeVolumeStatus::Holds, "", std::move(delta)};
    return {PrimeVolumeStatus::Violation,
            "hypotheses hold but delta is not shifted symmetric",
            std::move(delta)};
}

HVectorReport h_vector(const poly::LatticePolytope& p) {
    const auto facets = poly::facet_enumeration(p);
    const std::size_t d = p.ambient_dim();

    // All faces of the boundary complex: subsets of facet vertex sets.
    std::set<std::vector<std::size_t>> faces;
    for (const auto& f : facets) {
        const auto& vs = f.vertex_indices; // sorted, size d
        const std::size_t m = vs.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
            std::vector<std::size_t> face;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (std::size_t(1) << i)) face.push_back(vs[i]);
            faces.insert(std::move(face));
        }
    }

    IntVec f(d, 0); // f[j] = number of j-dimensional faces = f_j
    for (const auto& face : faces) ++f[face.size() - 1];

    IntVec h(d + 1, 0);
    for (std::size_t i = 0; i <= d; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j <= i; ++j) {
            Int fj = (j == 0) ? Int(1) : f[j - 1]; // f_{-1} = 1
            Int term = binomial(static_cast<long>(d - j),
                                static_cast<long>(d - i)) *
                       fj;
            if ((i - j) % 2 == 0) acc += term;
            else acc -= term;
        }
        h[i] = acc;
    }

    HVectorReport rep{HVector{std::move(h)}, std::move(f), true};
    for (std::size_t i = 1; i + 1 <= d && rep.lower_bound_met; ++i)
        if (rep.h.entries[1] > rep.h.entries[i]) rep.lower_bound_met = false;
    return rep;
}

} // namespace hstar::props
