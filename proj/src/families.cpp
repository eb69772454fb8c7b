#include "hstar/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hstar::fam {

const char* family_id_name(FamilyId id) {
    switch (id) {
    case FamilyId::ShiftedStandard: return "shifted_standard";
    case FamilyId::AugmentedStandard: return "augmented_standard";
    case FamilyId::Circulant: return "circulant";
    case FamilyId::SimplicialLb: return "simplicial_lb";
    case FamilyId::Vol4: return "vol4";
    case FamilyId::Vol5a: return "vol5a";
    case FamilyId::Vol5b: return "vol5b";
    case FamilyId::Vol5c: return "vol5c";
    }
    return "unknown";
}

std::string FamilySpec::display_name() const {
    std::ostringstream os;
    os << family_id_name(id) << '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) os << ',';
        os << params[i].first << '=' << params[i].second;
    }
    os << ')';
    return os.str();
}

namespace {

IntVec unit_vector(long dim, long i) { // 1-based position
    IntVec v(dim, 0);
    v[i - 1] = 1;
    return v;
}

IntVec delta_from_gaps(const std::vector<long>& gaps) {
    IntVec out;
    out.push_back(1);
    for (std::size_t j = 0; j < gaps.size(); ++j) {
        for (long z = 0; z < gaps[j]; ++z) out.push_back(0);
        if (j + 1 < gaps.size()) out.push_back(1);
    }
    return out;
}

FamilyInstance finalize(FamilyInstance inst) {
    inst.polytope.set_name(inst.spec.display_name());
    return inst;
}

// Circulant vertex rows v_1..v_d (without the origin).
std::vector<IntVec> circulant_rows(long d, long m) {
    std::vector<IntVec> rows;
    for (long i = 1; i <= d; ++i) {
        IntVec v(d, 0);
        for (long t = 0; t < m; ++t) v[(i - 1 + t) % d] = 1;
        rows.push_back(std::move(v));
    }
    return rows;
}

} // namespace

FamilyInstance shifted_standard(long d, long e) {
    if (d < 1 || e < 0)
        throw Error(ErrorKind::Domain, "shifted_standard needs d >= 1, e >= 0");
    std::vector<IntVec> verts;
    verts.push_back(IntVec(d, Int(-e)));
    for (long i = 1; i <= d; ++i) verts.push_back(unit_vector(d, i));

    IntVec delta(d + 1, Int(e));
    delta[0] = 1;
    FamilySpec spec{FamilyId::ShiftedStandard,
                    {{"d", d}, {"e", e}},
                    ehrhart::DeltaVector(std::move(delta)),
                    std::nullopt,
                    "constant pattern (1,e,...,e), volume ed+1"};
    return finalize({poly::LatticePolytope(d, std::move(verts)), std::move(spec)});
}

FamilyInstance augmented_standard(long d, long e) {
    if (d < 3)
        throw Error(ErrorKind::Domain, "augmented_standard needs d >= 3");
    if (e < 1)
        throw Error(ErrorKind::Domain, "augmented_standard needs e >= 1");
    std::vector<IntVec> verts;
    verts.push_back(IntVec(d, Int(e)));
    for (long i = 1; i <= d; ++i) verts.push_back(unit_vector(d, i));

    IntVec delta(d + 1, Int(e));
    delta[0] = 1;
    delta[1] = e - 1;
    delta[d] = e - 1;
    FamilySpec spec{FamilyId::AugmentedStandard,
                    {{"d", d}, {"e", e}},
                    ehrhart::DeltaVector(std::move(delta)),
                    std::nullopt,
                    "pattern (1,e-1,e,...,e,e-1), volume ed-1"};
    return finalize({poly::LatticePolytope(d, std::move(verts)), std::move(spec)});
}

ehrhart::DeltaVector residue_delta(long d, long m) {
    if (m < 1 || m >= d)
        throw Error(ErrorKind::Domain, "residue rule needs 1 <= m < d");
    if (std::gcd(m, d) != 1)
        throw Error(ErrorKind::Domain, "residue rule needs gcd(m, d) = 1");
    IntVec delta(d + 1, 0);
    delta[0] = 1;
    for (long i = 1; i <= d; ++i) {
        long r = (i * m) % d;
        if (r >= 1 && r <= m - 1) delta[i] = 1;
    }
    return ehrhart::DeltaVector(std::move(delta));
}

FamilyInstance circulant(long d, long m) {
    if (m < 1 || m >= d)
        throw Error(ErrorKind::Domain, "circulant needs 1 <= m < d");
    if (std::gcd(m, d) != 1)
        throw Error(ErrorKind::Domain,
                    "degenerate circulant: gcd(m, d) != 1 makes the vertex "
                    "matrix singular");
    std::vector<IntVec> verts;
    verts.push_back(IntVec(d, 0));
    for (auto& row : circulant_rows(d, m)) verts.push_back(std::move(row));

    FamilySpec spec{FamilyId::Circulant,
                    {{"d", d}, {"m", m}},
                    residue_delta(d, m),
                    std::nullopt,
                    "residue rule: delta_i = 1 iff i*m mod d in {1,...,m-1}"};
    return finalize({poly::LatticePolytope(d, std::move(verts)), std::move(spec)});
}

namespace {

// Convex polygon with `nverts` vertices, zero boundary lattice points apart
// from the vertices: prefix sums of distinct primitive edge vectors with
// zero total, sorted by angle.
std::vector<IntVec> primitive_polygon(long nverts) {
    std::vector<std::pair<long, long>> edges;
    if (nverts % 2 == 0) {
        long a = nverts / 2;
        for (long t = 0; t < a; ++t) {
            edges.emplace_back(1, t);
            edges.emplace_back(-1, -t);
        }
    } else {
        long a = (nverts - 1) / 2;
        for (long t = 0; t + 1 < a; ++t) edges.emplace_back(1, t);
        edges.emplace_back(1, a);
        for (long t = 0; t < a; ++t) edges.emplace_back(-1, -t);
        edges.emplace_back(0, -1);
    }

    auto half = [](const std::pair<long, long>& v) {
        return (v.second > 0 || (v.second == 0 && v.first > 0)) ? 0 : 1;
    };
    std::sort(edges.begin(), edges.end(),
              [&](const std::pair<long, long>& u, const std::pair<long, long>& w) {
                  if (half(u) != half(w)) return half(u) < half(w);
                  return u.first * w.second - u.second * w.first > 0;
              });

    std::vector<IntVec> verts;
    long x = 0, y = 0;
    for (const auto& e : edges) {
        verts.push_back(IntVec{Int(x), Int(y)});
        x += e.first;
        y += e.second;
    }
    if (x != 0 || y != 0)
        throw Error(ErrorKind::Domain, "polygon edges do not close up");
    return verts;
}

} // namespace

FamilyInstance simplicial_lower_bound(long d, long h1) {
    if (d < 2 || h1 < 1)
        throw Error(ErrorKind::Domain,
                    "simplicial lower-bound family needs d >= 2, h1 >= 1");

    IntVec h(d + 1, Int(h1));
    h[0] = 1;
    h[d] = 1;
    FamilySpec spec{FamilyId::SimplicialLb,
                    {{"d", d}, {"h1", h1}},
                    std::nullopt,
                    props::HVector{std::move(h)},
                    "all facets unimodular; boundary h-vector (1,h1,...,h1,1)"};

    if (d == 2) {
        auto verts = primitive_polygon(h1 + 2);
        poly::LatticePolytope pg(2, std::move(verts));
        // The greedy construction is only a candidate; certify it.
        auto facets = poly::facet_enumeration(pg);
        if (static_cast<long>(facets.size()) != h1 + 2)
            throw Error(ErrorKind::Domain, "polygon construction failed");
        for (const auto& f : facets) {
            IntVec edge(2);
            for (int c = 0; c < 2; ++c)
                edge[c] = pg.vertex(f.vertex_indices[1])[c] -
                          pg.vertex(f.vertex_indices[0])[c];
            if (int_gcd(edge[0], edge[1]) != 1)
                throw Error(ErrorKind::Domain, "polygon edge is not primitive");
        }
        return finalize({std::move(pg), std::move(spec)});
    }

    if (h1 == 1) {
        std::vector<IntVec> verts;
        verts.push_back(IntVec(d, 0));
        for (long i = 1; i <= d; ++i) verts.push_back(unit_vector(d, i));
        return finalize({poly::LatticePolytope(d, std::move(verts)), std::move(spec)});
    }

    const bool odd = (h1 % 2 == 1);
    const long n = odd ? h1 - 1 : h1; // positive and even in both branches
    std::vector<IntVec> verts;
    if (odd) verts.push_back(IntVec(d, 0)); // even h1 drops v_0
    for (long i = 1; i <= d; ++i) verts.push_back(unit_vector(d, i));
    for (long j = 1; j <= n; ++j) {
        long cj = n + ((n - j) * (j - 1)) / 2;
        IntVec v(d, Int(cj));
        v[d - 1] = j;
        verts.push_back(std::move(v));
    }
    return finalize({poly::LatticePolytope(d, std::move(verts)), std::move(spec)});
}

namespace {

// Shared scaffolding for the volume-4/5 padded constructions: base circulant
// rows in R^{base_dim} extended by per-vertex pad blocks, then unit vectors
// and the origin.
FamilyInstance padded_family(long base_dim, long m, long ambient,
                             const std::vector<std::vector<int>>& pads,
                             FamilySpec spec) {
    auto base = circulant_rows(base_dim, m);
    const long pad_len = ambient - base_dim;
    std::vector<IntVec> verts;
    verts.push_back(IntVec(ambient, 0));
    for (long i = 1; i <= base_dim; ++i) {
        IntVec v = base[i - 1];
        v.resize(ambient, Int(0));
        const auto& pad = pads[static_cast<std::size_t>(i - 1)];
        for (long t = 0; t < pad_len; ++t)
            v[base_dim + t] = pad[static_cast<std::size_t>(t) % pad.size()];
        verts.push_back(std::move(v));
    }
    for (long i = base_dim + 1; i <= ambient; ++i)
        verts.push_back(unit_vector(ambient, i));
    return {poly::LatticePolytope(ambient, std::move(verts)), std::move(spec)};
}

} // namespace

FamilyInstance volume4_family(long k, long l) {
    if (k < 0 || l < 0)
        throw Error(ErrorKind::Domain, "volume-4 family needs k >= 0, l >= 0");
    std::vector<long> gaps{k + l, k, k, k + l};
    FamilySpec spec{FamilyId::Vol4,
                    {{"k", k}, {"l", l}},
                    ehrhart::DeltaVector(delta_from_gaps(gaps)),
                    std::nullopt,
                    "gap pattern (k+l, k, k, k+l), volume 4"};

    if (l == 0 && k == 0) {
        // All gaps zero: the constant-pattern simplex with d = 3, e = 1.
        auto inst = shifted_standard(3, 1);
        return finalize({std::move(inst.polytope), std::move(spec)});
    }
    if (l == 0)
        return finalize(
            {circulant(4 * k + 3, 4).polytope, std::move(spec)});
    if (l == 1)
        return finalize(
            {circulant(4 * k + 5, 4).polytope, std::move(spec)});

    const long base_dim = 4 * k + 5;
    const long ambient = 4 * k + 2 * l + 3;
    std::vector<std::vector<int>> pads(base_dim, std::vector<int>{0});
    pads[0] = {1};
    pads[1] = {0, 1};
    pads[2] = {0, 1};
    return finalize(padded_family(base_dim, 4, ambient, pads, std::move(spec)));
}

FamilyInstance volume5_family(long k, long l, Vol5Variant variant) {
    if (k < 0 || l < 0)
        throw Error(ErrorKind::Domain, "volume-5 family needs k >= 0, l >= 0");
    FamilyId id = variant == Vol5Variant::A   ? FamilyId::Vol5a
                  : variant == Vol5Variant::B ? FamilyId::Vol5b
                                              : FamilyId::Vol5c;
    std::vector<long> gaps;
    switch (variant) {
    case Vol5Variant::A: gaps = {k + l, k, k, k, k + l}; break;
    case Vol5Variant::B: gaps = {k + l, k, k + l, k, k + l}; break;
    case Vol5Variant::C: gaps = {k + l, k + l, k, k + l, k + l}; break;
    }
    FamilySpec spec{id,
                    {{"k", k}, {"l", l}},
                    ehrhart::DeltaVector(delta_from_gaps(gaps)),
                    std::nullopt,
                    "volume-5 gap pattern"};

    if (l == 0 && k == 0) {
        auto inst = shifted_standard(4, 1);
        return finalize({std::move(inst.polytope), std::move(spec)});
    }
    if (l == 0)
        return finalize(
            {circulant(5 * k + 4, 5).polytope, std::move(spec)});

    long l1_dim = 0, base_dim = 0, ambient = 0;
    std::vector<std::vector<int>> pads;
    switch (variant) {
    case Vol5Variant::A:
        l1_dim = 5 * k + 6;
        base_dim = 5 * k + 6;
        ambient = 5 * k + 2 * l + 4;
        pads.assign(base_dim, {0});
        pads[0] = {1};
        pads[1] = pads[2] = pads[3] = {0, 1};
        break;
    case Vol5Variant::B:
        l1_dim = 5 * k + 7;
        base_dim = 5 * k + 7;
        ambient = 5 * k + 3 * l + 4;
        pads.assign(base_dim, {0});
        pads[0] = pads[1] = {1};
        pads[2] = pads[3] = {0, 1, 1};
        break;
    case Vol5Variant::C:
        l1_dim = 5 * k + 8;
        base_dim = 5 * k + 8;
        ambient = 5 * k + 4 * l + 4;
        pads.assign(base_dim, {0});
        pads[0] = pads[1] = pads[2] = {1};
        pads[3] = {0, 1, 1, 1};
        break;
    }
    if (l == 1)
        return finalize({circulant(l1_dim, 5).polytope, std::move(spec)});
    return finalize(padded_family(base_dim, 5, ambient, pads, std::move(spec)));
}

} // namespace hstar::fam
