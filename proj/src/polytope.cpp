#include "hstar/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <thread>

namespace hstar::poly {

using exactla::IntMatrix;

LatticePolytope::LatticePolytope(std::size_t ambient_dim,
                                 std::vector<IntVec> vertices,
                                 std::optional<std::string> name)
    : ambient_dim_(ambient_dim), vertices_(std::move(vertices)),
      name_(std::move(name)) {
    if (ambient_dim_ == 0)
        throw Error(ErrorKind::Shape, "ambient dimension must be positive");
    if (vertices_.empty())
        throw Error(ErrorKind::Shape, "polytope needs at least one vertex");
    for (const auto& v : vertices_)
        if (v.size() != ambient_dim_)
            throw Error(ErrorKind::Shape, "vertex length does not match ambient dimension");
    auto sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorKind::Shape, "vertex list contains duplicates");
}

namespace {

IntMatrix difference_matrix(const LatticePolytope& p) {
    const auto& vs = p.vertices();
    const std::size_t n = p.ambient_dim();
    IntMatrix m(std::max<std::size_t>(vs.size() - 1, 1), n);
    for (std::size_t i = 1; i < vs.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i - 1, j) = vs[i][j] - vs[0][j];
    return m;
}

} // namespace

std::size_t dimension(const LatticePolytope& p) {
    if (p.vertex_count() == 1) return 0;
    return exactla::rank(difference_matrix(p));
}

Simplex::Simplex(LatticePolytope base) : base_(std::move(base)) {
    const std::size_t d = base_.ambient_dim();
    if (base_.vertex_count() != d + 1)
        throw Error(ErrorKind::Domain, "simplex needs exactly dim+1 vertices");
    if (dimension(base_) != d)
        throw Error(ErrorKind::Domain, "degenerate simplex: vertices are affinely dependent");
}

IntMatrix Simplex::homogeneous_rows() const {
    const std::size_t d = dim();
    IntMatrix m(d + 1, d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m(i, j) = base_.vertex(i)[j];
        m(i, d) = 1;
    }
    return m;
}

namespace {

constexpr std::size_t kFacetVertexGuard = 20;

// Kernel vector of a (d-1) x d rank-(d-1) matrix via signed maximal minors;
// all-zero result means the rows are dependent.
IntVec kernel_by_minors(const IntMatrix& m, std::size_t d) {
    IntVec a(d, 0);
    if (d == 1) {
        a[0] = 1;
        return a;
    }
    for (std::size_t skip = 0; skip < d; ++skip) {
        IntMatrix sub(d - 1, d - 1);
        for (std::size_t i = 0; i < d - 1; ++i) {
            std::size_t cj = 0;
            for (std::size_t j = 0; j < d; ++j) {
                if (j == skip) continue;
                sub(i, cj++) = m(i, j);
            }
        }
        Int det = exactla::determinant(sub);
        a[skip] = (skip % 2 == 0) ? det : -det;
    }
    return a;
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void make_primitive(IntVec& a, Int& b) {
    Int g = 0;
    for (const auto& x : a) g = int_gcd(g, x);
    if (g > 1) {
        for (auto& x : a) x /= g;
        b /= g; // exact: b = a . (lattice point)
    }
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<FacetDescription> facet_enumeration(const LatticePolytope& p) {
    const std::size_t nverts = p.vertex_count();
    const std::size_t d = p.ambient_dim();
    if (nverts > kFacetVertexGuard)
        throw Error(ErrorKind::Budget, "facet enumeration guard: more than 20 vertices");
    if (dimension(p) != d)
        throw Error(ErrorKind::Domain, "polytope must be full-dimensional");

    std::vector<FacetDescription> facets;
    std::set<std::pair<IntVec, Int>> seen;

    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    do {
        // Hyperplane through the subset, if affinely independent.
        IntVec a;
        if (d == 1) {
            a = IntVec{1};
        } else {
            IntMatrix diffs(d - 1, d);
            for (std::size_t i = 1; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    diffs(i - 1, j) = p.vertex(idx[i])[j] - p.vertex(idx[0])[j];
            a = kernel_by_minors(diffs, d);
            if (std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; }))
                continue; // affinely dependent subset
        }
        Int b = dot(a, p.vertex(idx[0]));

        bool has_pos = false, has_neg = false, extra_on_plane = false;
        for (std::size_t w = 0; w < nverts; ++w) {
            if (std::binary_search(idx.begin(), idx.end(), w)) continue;
            Int s = dot(a, p.vertex(w)) - b;
            if (s > 0) has_pos = true;
            else if (s < 0) has_neg = true;
            else extra_on_plane = true;
        }
        if (has_pos && has_neg) continue; // not supporting
        if (extra_on_plane)
            throw Error(ErrorKind::Simpliciality,
                        "supporting hyperplane carries more than dim vertices");
        if (has_pos) { // flip to outward
            for (auto& x : a) x = -x;
            b = -b;
        }
        make_primitive(a, b);
        if (seen.insert({a, b}).second)
            facets.push_back(FacetDescription{idx, a, b});
    } while (next_combination(idx, nverts));

    // Every genuine vertex of a full-dimensional polytope lies on >= d facets.
    std::vector<std::size_t> incidence(nverts, 0);
    for (const auto& f : facets)
        for (auto i : f.vertex_indices) ++incidence[i];
    for (std::size_t i = 0; i < nverts; ++i)
        if (incidence[i] < d)
            throw Error(ErrorKind::Domain, "listed point is not a vertex of the hull");

    std::sort(facets.begin(), facets.end(),
              [](const FacetDescription& x, const FacetDescription& y) {
                  return x.vertex_indices < y.vertex_indices;
              });
    return facets;
}

namespace {

// Solve sum lambda_i (t_i,1) = (v,1) for an affinely independent subset;
// returns false when inconsistent.
bool affine_combination(const std::vector<const IntVec*>& pts, const IntVec& v,
                        RatVec& lambda) {
    const std::size_t d = v.size(), k = pts.size();
    std::vector<RatVec> m(d + 1, RatVec(k + 1));
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < d; ++i) m[i][j] = Rat((*pts[j])[i]);
        m[d][j] = 1;
    }
    for (std::size_t i = 0; i < d; ++i) m[i][k] = Rat(v[i]);
    m[d][k] = 1;

    std::size_t row = 0;
    std::vector<std::size_t> pivot_row(k, d + 2);
    for (std::size_t col = 0; col < k && row <= d; ++col) {
        std::size_t piv = row;
        while (piv <= d && m[piv][col] == 0) ++piv;
        if (piv > d) return false; // dependent subset; caller skips
        std::swap(m[row], m[piv]);
        Rat inv = m[row][col];
        for (std::size_t j = col; j <= k; ++j) m[row][j] /= inv;
        for (std::size_t i = 0; i <= d; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = col; j <= k; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_row[col] = row;
        ++row;
    }
    for (std::size_t i = row; i <= d; ++i)
        if (m[i][k] != 0) return false; // inconsistent
    lambda.assign(k, Rat(0));
    for (std::size_t col = 0; col < k; ++col) lambda[col] = m[pivot_row[col]][k];
    return true;
}

} // namespace

bool vertex_minimal(const LatticePolytope& p) {
    const std::size_t nverts = p.vertex_count();
    const std::size_t r = dimension(p);
    if (nverts == r + 1) return true; // affinely independent: a simplex
    if (nverts > kFacetVertexGuard)
        throw Error(ErrorKind::Budget, "vertex minimality guard: more than 20 vertices");

    for (std::size_t target = 0; target < nverts; ++target) {
        std::vector<std::size_t> others;
        for (std::size_t i = 0; i < nverts; ++i)
            if (i != target) others.push_back(i);
        const std::size_t pick = std::min(others.size(), r + 1);
        // Caratheodory: contained in the hull iff in the hull of some
        // affinely independent subset of size <= rank+1.
        for (std::size_t k = 1; k <= pick; ++k) {
            std::vector<std::size_t> sel(k);
            for (std::size_t i = 0; i < k; ++i) sel[i] = i;
            do {
                std::vector<const IntVec*> pts;
                for (auto s : sel) pts.push_back(&p.vertex(others[s]));
                RatVec lambda;
                if (!affine_combination(pts, p.vertex(target), lambda)) continue;
                bool nonneg = std::all_of(lambda.begin(), lambda.end(),
                                          [](const Rat& x) { return x >= 0; });
                if (nonneg) return false; // target is inside the others' hull
            } while (next_combination(sel, others.size()));
        }
    }
    return true;
}

void require_vertex_minimal(const LatticePolytope& p) {
    if (!vertex_minimal(p))
        throw Error(ErrorKind::Shape, "vertex list contains a redundant point");
}

RatVec barycentric(const Simplex& s, const IntVec& point, const Int& height) {
    const std::size_t d = s.dim();
    if (point.size() != d)
        throw Error(ErrorKind::Shape, "point length does not match simplex dimension");
    IntMatrix m(d + 1, d + 1);
    for (std::size_t j = 0; j <= d; ++j) {
        for (std::size_t i = 0; i < d; ++i) m(i, j) = s.base().vertex(j)[i];
        m(d, j) = 1;
    }
    IntVec rhs = point;
    rhs.push_back(height);
    return exactla::solve_exact(m, rhs);
}

// ---------------------------------------------------------------------------
// LatticeCounter

unsigned configured_threads() {
    const char* env = std::getenv("HSTAR_THREADS");
    if (!env) return 0;
    long v = std::strtol(env, nullptr, 10);
    return v > 0 ? static_cast<unsigned>(v) : 0;
}

LatticeCounter::LatticeCounter(const LatticePolytope& p, unsigned threads)
    : dim_(p.ambient_dim()), threads_(threads ? threads : configured_threads()) {
    facets_ = facet_enumeration(p); // validates full-dimensionality

    box_lo_.assign(dim_, Int(0));
    box_hi_.assign(dim_, Int(0));
    for (std::size_t j = 0; j < dim_; ++j) {
        box_lo_[j] = box_hi_[j] = p.vertex(0)[j];
        for (const auto& v : p.vertices()) {
            box_lo_[j] = std::min(box_lo_[j], v[j]);
            box_hi_[j] = std::max(box_hi_[j], v[j]);
        }
    }

    levels_.assign(dim_, {});
    for (const auto& f : facets_)
        levels_[dim_ - 1].push_back(Constraint{f.normal, f.offset});

    // Projected vertex sets, for recognizing genuine shadow facets.
    std::vector<std::vector<IntVec>> shadow_verts(dim_);
    for (std::size_t k = 1; k <= dim_; ++k) {
        std::set<IntVec> uniq;
        for (const auto& v : p.vertices())
            uniq.insert(IntVec(v.begin(), v.begin() + k));
        shadow_verts[k - 1].assign(uniq.begin(), uniq.end());
    }

    // Fourier-Motzkin cascade: eliminate x_k from the level-k system, then
    // keep only constraints tight on a (k-2)-dimensional set of projected
    // vertices -- exactly the facets of the projection.
    for (std::size_t k = dim_; k >= 2; --k) {
        const auto& sys = levels_[k - 1];
        std::vector<std::pair<IntVec, Int>> cands;
        std::vector<const Constraint*> pos, neg;
        for (const auto& c : sys) {
            const Int& last = c.a[k - 1];
            if (last == 0) {
                cands.emplace_back(IntVec(c.a.begin(), c.a.end() - 1), c.b);
            } else if (last > 0) {
                pos.push_back(&c);
            } else {
                neg.push_back(&c);
            }
        }
        for (const auto* pc : pos)
            for (const auto* nc : neg) {
                Int pm = -nc->a[k - 1]; // > 0
                Int nm = pc->a[k - 1];  // > 0
                IntVec a(k - 1);
                for (std::size_t i = 0; i + 1 < k; ++i)
                    a[i] = pm * pc->a[i] + nm * nc->a[i];
                cands.emplace_back(std::move(a), pm * pc->b + nm * nc->b);
            }

        std::set<std::pair<IntVec, Int>> kept;
        for (auto& [a, b] : cands) {
            bool zero = std::all_of(a.begin(), a.end(),
                                    [](const Int& x) { return x == 0; });
            if (zero) continue; // vacuous for a nonempty polytope
            Int g = 0;
            for (const auto& x : a) g = int_gcd(g, x);
            g = int_gcd(g, b);
            if (g > 1) {
                for (auto& x : a) x /= g;
                b /= g;
            }
            if (!kept.insert({a, b}).second) continue;
        }

        auto& out = levels_[k - 2];
        for (const auto& [a, b] : kept) {
            std::vector<const IntVec*> tight;
            for (const auto& w : shadow_verts[k - 2])
                if (dot(a, w) == b) tight.push_back(&w);
            if (tight.empty()) continue;
            std::size_t arank = 0;
            if (tight.size() > 1) {
                IntMatrix diffs(tight.size() - 1, k - 1);
                for (std::size_t i = 1; i < tight.size(); ++i)
                    for (std::size_t j = 0; j + 1 < k; ++j)
                        diffs(i - 1, j) = (*tight[i])[j] - (*tight[0])[j];
                arank = exactla::rank(diffs);
            }
            if (arank == (k - 1) - 1)
                out.push_back(Constraint{a, b});
        }
    }
}

namespace {

template <typename T> struct ConstraintT {
    std::vector<T> a;
    T b;
};

template <typename T> struct SweepSystem {
    std::vector<std::vector<ConstraintT<T>>> levels;
    std::size_t dim;
};

// Interval of x_k given the dot products of each level-k constraint over the
// fixed prefix. Returns false when empty. When `strict`, bounds enforce
// a.x < n*b (used only at the leaf with the full facet system).
template <typename T>
bool level_interval(const std::vector<ConstraintT<T>>& sys,
                    const std::vector<T>& dots, std::size_t k, const T& nb_scale,
                    bool strict, T& lo, T& hi, bool& bounded_lo, bool& bounded_hi) {
    bounded_lo = bounded_hi = false;
    for (std::size_t c = 0; c < sys.size(); ++c) {
        const T& coef = sys[c].a[k - 1];
        if (coef == 0) {
            if (strict) {
                if (!(dots[c] < nb_scale * sys[c].b)) return false;
            }
            continue;
        }
        T r = nb_scale * sys[c].b - dots[c];
        if (strict) r = r - 1;
        if (coef > 0) {
            T bound;
            if constexpr (std::is_same_v<T, Int>) bound = floor_div(r, coef);
            else bound = floor_div_i64(r, coef);
            if (!bounded_hi || bound < hi) hi = bound;
            bounded_hi = true;
        } else {
            T bound;
            if constexpr (std::is_same_v<T, Int>) bound = ceil_div(r, coef);
            else bound = ceil_div_i64(r, coef);
            if (!bounded_lo || bound > lo) lo = bound;
            bounded_lo = true;
        }
    }
    return bounded_lo && bounded_hi && lo <= hi;
}

template <typename T>
Int sweep_count(const SweepSystem<T>& s, const T& n, bool interior,
                std::size_t k, std::vector<T>& prefix,
                const std::vector<T>& dots, T forced_lo, bool has_forced_lo,
                T forced_hi, bool has_forced_hi) {
    const auto& sys = s.levels[k - 1];
    T lo{}, hi{};
    bool blo, bhi;
    const bool leaf = (k == s.dim);
    if (!level_interval(sys, dots, k, n, leaf && interior, lo, hi, blo, bhi))
        return 0;
    if (has_forced_lo && forced_lo > lo) lo = forced_lo;
    if (has_forced_hi && forced_hi < hi) hi = forced_hi;
    if (lo > hi) return 0;
    if (leaf) return Int(hi - lo + 1);

    const auto& child = s.levels[k];
    std::vector<T> base(child.size(), T(0)), cdots(child.size());
    for (std::size_t c = 0; c < child.size(); ++c)
        for (std::size_t i = 0; i < prefix.size(); ++i)
            base[c] += child[c].a[i] * prefix[i];

    Int total = 0;
    prefix.push_back(lo);
    for (T x = lo; x <= hi; ++x) {
        prefix.back() = x;
        for (std::size_t c = 0; c < child.size(); ++c)
            cdots[c] = base[c] + child[c].a[k - 1] * x;
        total += sweep_count(s, n, interior, k + 1, prefix, cdots, T(0), false,
                             T(0), false);
    }
    prefix.pop_back();
    return total;
}

template <typename T>
bool sweep_interior_nonempty(const SweepSystem<T>& s, const T& n, std::size_t k,
                             std::vector<T>& prefix, const std::vector<T>& dots) {
    const auto& sys = s.levels[k - 1];
    T lo{}, hi{};
    bool blo, bhi;
    const bool leaf = (k == s.dim);
    if (!level_interval(sys, dots, k, n, leaf, lo, hi, blo, bhi)) return false;
    if (leaf) return true;

    const auto& child = s.levels[k];
    std::vector<T> base(child.size(), T(0)), cdots(child.size());
    for (std::size_t c = 0; c < child.size(); ++c)
        for (std::size_t i = 0; i < prefix.size(); ++i)
            base[c] += child[c].a[i] * prefix[i];

    prefix.push_back(lo);
    for (T x = lo; x <= hi; ++x) {
        prefix.back() = x;
        for (std::size_t c = 0; c < child.size(); ++c)
            cdots[c] = base[c] + child[c].a[k - 1] * x;
        if (sweep_interior_nonempty(s, n, k + 1, prefix, cdots)) {
            prefix.pop_back();
            return true;
        }
    }
    prefix.pop_back();
    return false;
}

template <typename T>
Int run_sweep(const SweepSystem<T>& s, const T& n, bool interior,
              unsigned threads) {
    std::vector<T> prefix;
    std::vector<T> dots(s.levels[0].size(), T(0));
    if constexpr (std::is_same_v<T, std::int64_t>) {
        if (threads > 1 && s.dim >= 2) {
            // Partition the level-1 interval into contiguous chunks, one per
            // worker; exact integer sums make the aggregation
            // schedule-independent.
            T lo{}, hi{};
            bool blo, bhi;
            if (!level_interval(s.levels[0], dots, 1, n, false, lo, hi, blo, bhi))
                return 0;
            const std::int64_t span = hi - lo + 1;
            const unsigned nt =
                static_cast<unsigned>(std::min<std::int64_t>(threads, span));
            std::vector<Int> partial(nt, Int(0));
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < nt; ++t) {
                T clo = lo + (span * t) / nt;
                T chi = lo + (span * (t + 1)) / nt - 1;
                pool.emplace_back([&s, n, interior, &partial, t, clo, chi]() {
                    std::vector<T> pfx;
                    std::vector<T> d0(s.levels[0].size(), T(0));
                    partial[t] = sweep_count<T>(s, n, interior, 1, pfx, d0, clo,
                                                true, chi, true);
                });
            }
            for (auto& th : pool) th.join();
            Int total = 0;
            for (const auto& x : partial) total += x;
            return total;
        }
    }
    return sweep_count<T>(s, n, interior, 1, prefix, dots, T(0), false, T(0),
                          false);
}

} // namespace

bool LatticeCounter::int64_safe(const Int& n) const {
    // Certify that every partial sum the sweep can form fits comfortably in
    // int64: constraints evaluate points inside n * (vertex bounding box).
    static const Int kLimit = (Int(1) << 61);
    Int worst = 0;
    for (const auto& sys : levels_)
        for (const auto& c : sys) {
            Int w = boost::multiprecision::abs(c.b);
            for (std::size_t i = 0; i < c.a.size(); ++i) {
                Int m = std::max(boost::multiprecision::abs(box_lo_[i]),
                                 boost::multiprecision::abs(box_hi_[i]));
                w += boost::multiprecision::abs(c.a[i]) * std::max(m, Int(1));
            }
            worst = std::max(worst, w);
        }
    return n * worst * 4 < kLimit;
}

Int LatticeCounter::count(const Int& n, bool interior_only) const {
    if (n < 0) throw Error(ErrorKind::Domain, "dilation must be nonnegative");
    if (n == 0) return 1; // 0P = {origin}, for the closed and the set-interior reading
    if (int64_safe(n)) {
        SweepSystem<std::int64_t> s;
        s.dim = dim_;
        s.levels.resize(dim_);
        for (std::size_t k = 0; k < dim_; ++k)
            for (const auto& c : levels_[k]) {
                ConstraintT<std::int64_t> cc;
                cc.b = c.b.convert_to<std::int64_t>();
                for (const auto& x : c.a)
                    cc.a.push_back(x.convert_to<std::int64_t>());
                s.levels[k].push_back(std::move(cc));
            }
        return run_sweep<std::int64_t>(s, n.convert_to<std::int64_t>(),
                                       interior_only, threads_);
    }
    SweepSystem<Int> s;
    s.dim = dim_;
    s.levels.resize(dim_);
    for (std::size_t k = 0; k < dim_; ++k)
        for (const auto& c : levels_[k])
            s.levels[k].push_back(ConstraintT<Int>{c.a, c.b});
    return run_sweep<Int>(s, n, interior_only, threads_);
}

bool LatticeCounter::interior_nonempty(const Int& n) const {
    if (n <= 0) return false;
    SweepSystem<Int> s;
    s.dim = dim_;
    s.levels.resize(dim_);
    for (std::size_t k = 0; k < dim_; ++k)
        for (const auto& c : levels_[k])
            s.levels[k].push_back(ConstraintT<Int>{c.a, c.b});
    std::vector<Int> prefix;
    std::vector<Int> dots(s.levels[0].size(), Int(0));
    return sweep_interior_nonempty<Int>(s, n, 1, prefix, dots);
}

Int count_lattice_points(const LatticePolytope& p, const Int& n,
                         bool interior_only) {
    return LatticeCounter(p).count(n, interior_only);
}

} // namespace hstar::poly
