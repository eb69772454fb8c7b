#include "hstar/ehrhart.hpp"

#include <algorithm>

namespace hstar::ehrhart {

using exactla::IntMatrix;

DeltaVector::DeltaVector(IntVec entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw Error(ErrorKind::Shape, "delta vector must be nonempty");
    if (entries_.front() != 1)
        throw Error(ErrorKind::Domain, "delta_0 must equal 1");
    for (const auto& x : entries_)
        if (x < 0)
            throw Error(ErrorKind::Domain, "delta entries must be nonnegative");
    if (entries_.size() > 1 && entries_[1] < entries_.back())
        throw Error(ErrorKind::Domain, "delta_1 >= delta_d must hold");
}

Int DeltaVector::sum() const {
    Int s = 0;
    for (const auto& x : entries_) s += x;
    return s;
}

std::size_t DeltaVector::top_index() const {
    for (std::size_t i = entries_.size(); i-- > 0;)
        if (entries_[i] != 0) return i;
    return 0;
}

namespace {

constexpr unsigned long long kBoxBudget = 50'000'000ULL;

// Integer matrix from a rational one whose entries are known integral.
IntMatrix to_integer(const std::vector<RatVec>& m) {
    IntMatrix out(m.size(), m.front().size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (boost::multiprecision::denominator(m[i][j]) != 1)
                throw Error(ErrorKind::Singular, "expected a unimodular inverse");
            out(i, j) = boost::multiprecision::numerator(m[i][j]);
        }
    return out;
}

// Shared enumeration of the box lattice-point representatives. For each
// residue class y of Z^{d+1} modulo the row lattice of A, lift to an integer
// point, express it in barycentric coordinates, and reduce every coefficient
// into [0,1) (or (0,1] for the dual box).
std::vector<BoxPoint> enumerate_box(const poly::Simplex& s, bool dual) {
    const std::size_t d = s.dim();
    const IntMatrix a = s.homogeneous_rows();
    const auto snf = exactla::smith_normal_form(a);

    Int vol = 1;
    for (std::size_t i = 0; i <= d; ++i) vol *= snf.d(i, i);
    if (vol == 0)
        throw Error(ErrorKind::Domain, "degenerate simplex");
    if (vol > kBoxBudget)
        throw Error(ErrorKind::Budget, "box enumeration budget exceeded");

    const IntMatrix vinv = to_integer(exactla::inverse_rational(snf.v));
    const auto ainv = exactla::inverse_rational(a);

    std::vector<BoxPoint> out;
    out.reserve(vol.convert_to<std::size_t>());

    // Mixed-radix counter over the diagonal quotient.
    IntVec y(d + 1, 0);
    for (;;) {
        // Representative x0 = y * Vinv of the class, then r = x0 * A^{-1}.
        IntVec x0(d + 1, 0);
        for (std::size_t j = 0; j <= d; ++j)
            for (std::size_t i = 0; i <= d; ++i) x0[j] += y[i] * vinv(i, j);
        RatVec r(d + 1, Rat(0));
        for (std::size_t j = 0; j <= d; ++j)
            for (std::size_t i = 0; i <= d; ++i) r[j] += Rat(x0[i]) * ainv[i][j];

        RatVec rr(d + 1);
        IntVec shift(d + 1); // r - rr, an integer vector
        for (std::size_t j = 0; j <= d; ++j) {
            Rat f = frac(r[j]);
            if (dual && f == 0) f = 1;
            rr[j] = f;
            Rat diff = r[j] - f;
            shift[j] = boost::multiprecision::numerator(diff); // denominator 1
        }
        IntVec pt(d + 1, 0);
        for (std::size_t j = 0; j <= d; ++j) {
            pt[j] = x0[j];
            for (std::size_t i = 0; i <= d; ++i) pt[j] -= shift[i] * a(i, j);
        }
        BoxPoint bp;
        bp.point.assign(pt.begin(), pt.begin() + d);
        bp.degree = pt[d].convert_to<long>();
        bp.coeffs = std::move(rr);
        out.push_back(std::move(bp));

        // Advance the counter.
        std::size_t pos = 0;
        while (pos <= d) {
            ++y[pos];
            if (y[pos] < snf.d(pos, pos)) break;
            y[pos] = 0;
            ++pos;
        }
        if (pos > d) break;
    }

    std::sort(out.begin(), out.end(), [](const BoxPoint& x, const BoxPoint& y2) {
        if (x.degree != y2.degree) return x.degree < y2.degree;
        return x.point < y2.point;
    });
    return out;
}

} // namespace

std::vector<BoxPoint> box_points(const poly::Simplex& s) {
    return enumerate_box(s, false);
}

std::vector<BoxPoint> dual_box_points(const poly::Simplex& s) {
    return enumerate_box(s, true);
}

DeltaVector delta_from_box(const poly::Simplex& s) {
    const std::size_t d = s.dim();
    IntVec delta(d + 1, 0);
    for (const auto& bp : box_points(s)) {
        if (bp.degree < 0 || static_cast<std::size_t>(bp.degree) > d)
            throw Error(ErrorKind::Domain, "box point degree out of range");
        ++delta[static_cast<std::size_t>(bp.degree)];
    }
    return DeltaVector(std::move(delta));
}

DeltaVector delta_from_counts(const poly::LatticePolytope& p) {
    const std::size_t d = p.ambient_dim();
    if (poly::dimension(p) != d)
        throw Error(ErrorKind::Domain, "polytope must be full-dimensional");
    poly::LatticeCounter counter(p);
    std::vector<Int> counts(d + 1);
    counts[0] = 1;
    for (std::size_t n = 1; n <= d; ++n) counts[n] = counter.count(Int(n));

    IntVec delta(d + 1, 0);
    for (std::size_t i = 0; i <= d; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j <= i; ++j) {
            Int term = binomial(static_cast<long>(d) + 1, static_cast<long>(j)) *
                       counts[i - j];
            if (j % 2 == 0) acc += term;
            else acc -= term;
        }
        delta[i] = acc;
    }
    return DeltaVector(std::move(delta));
}

Int normalized_volume(const poly::Simplex& s) {
    return boost::multiprecision::abs(exactla::determinant(s.homogeneous_rows()));
}

Int normalized_volume(const poly::LatticePolytope& p) {
    if (p.vertex_count() == p.ambient_dim() + 1)
        return normalized_volume(poly::Simplex(p));
    return delta_from_counts(p).sum();
}

DegreeIdentityReport degree_identity_report(const poly::Simplex& s) {
    const auto delta = delta_from_box(s);
    const std::size_t d = s.dim();
    poly::LatticeCounter counter(s.base());
    long first = -1;
    for (long n = 1; n <= static_cast<long>(d) + 1; ++n) {
        if (counter.interior_nonempty(Int(n))) {
            first = n;
            break;
        }
    }
    DegreeIdentityReport rep;
    rep.top_index = delta.top_index();
    rep.first_interior_dilation = first;
    rep.holds = first > 0 &&
                static_cast<long>(rep.top_index) ==
                    static_cast<long>(d) + 1 - first;
    return rep;
}

} // namespace hstar::ehrhart
