#include "hstar/exactla.hpp"

#include <algorithm>
#include <numeric>

namespace hstar::exactla {

Int determinant(const IntMatrix& m) {
    if (!m.square())
        throw Error(ErrorKind::Shape, "determinant requires a square matrix");
    const std::size_t n = m.rows();
    IntMatrix b = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (b(k, k) == 0) {
            std::size_t piv = k;
            while (piv < n && b(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            b.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = b(i, j) * b(k, k) - b(i, k) * b(k, j);
                b(i, j) = t / prev; // exact by Bareiss identity
            }
            b(i, k) = 0;
        }
        prev = b(k, k);
    }
    return sign * b(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
    IntMatrix b = m;
    const std::size_t rows = b.rows(), cols = b.cols();
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && b(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        b.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                b(i, j) = (b(i, j) * b(r, c) - b(i, c) * b(r, j)) / prev;
            b(i, c) = 0;
        }
        prev = b(r, c);
        ++r;
    }
    return r;
}

namespace {

// On return g = gcd(a,b) = x*a + y*b.
void ext_gcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
    if (b == 0) {
        if (a >= 0) {
            g = a;
            x = 1;
        } else {
            g = -a;
            x = -1;
        }
        y = 0;
        return;
    }
    Int x1, y1;
    ext_gcd(b, a % b, g, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
}

// Left-multiply rows (r1, r2) of d (and of u) by the 2x2 unimodular
// [[x, y], [-b/g, a/g]] that sends (a, b) = (d(r1,c), d(r2,c)) to (g, 0).
void row_gcd_step(IntMatrix& d, IntMatrix& u, std::size_t r1, std::size_t r2,
                  std::size_t c) {
    Int a = d(r1, c), b = d(r2, c), g, x, y;
    ext_gcd(a, b, g, x, y);
    Int p = -(b / g), q = a / g;
    for (std::size_t j = 0; j < d.cols(); ++j) {
        Int t1 = x * d(r1, j) + y * d(r2, j);
        Int t2 = p * d(r1, j) + q * d(r2, j);
        d(r1, j) = t1;
        d(r2, j) = t2;
    }
    for (std::size_t j = 0; j < u.cols(); ++j) {
        Int t1 = x * u(r1, j) + y * u(r2, j);
        Int t2 = p * u(r1, j) + q * u(r2, j);
        u(r1, j) = t1;
        u(r2, j) = t2;
    }
}

void col_gcd_step(IntMatrix& d, IntMatrix& v, std::size_t c1, std::size_t c2,
                  std::size_t r) {
    Int a = d(r, c1), b = d(r, c2), g, x, y;
    ext_gcd(a, b, g, x, y);
    Int p = -(b / g), q = a / g;
    for (std::size_t i = 0; i < d.rows(); ++i) {
        Int t1 = x * d(i, c1) + y * d(i, c2);
        Int t2 = p * d(i, c1) + q * d(i, c2);
        d(i, c1) = t1;
        d(i, c2) = t2;
    }
    for (std::size_t i = 0; i < v.rows(); ++i) {
        Int t1 = x * v(i, c1) + y * v(i, c2);
        Int t2 = p * v(i, c1) + q * v(i, c2);
        v(i, c1) = t1;
        v(i, c2) = t2;
    }
}

} // namespace

SnfDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        // Pivot: any nonzero in the trailing block.
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows && pi == rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (d(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows) break; // trailing block is zero
        if (pi != t) {
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
        }
        if (pj != t) {
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
        }

        for (;;) {
            for (std::size_t i = t + 1; i < rows; ++i)
                if (d(i, t) != 0) row_gcd_step(d, u, t, i, t);
            bool row_clear = true;
            for (std::size_t j = t + 1; j < cols; ++j)
                if (d(t, j) != 0) {
                    col_gcd_step(d, v, t, j, t);
                    row_clear = false;
                }
            if (!row_clear) continue; // column ops may have refilled column t

            // Divisibility: pivot must divide the whole trailing block.
            bool fixed = true;
            for (std::size_t i = t + 1; i < rows && fixed; ++i)
                for (std::size_t j = t + 1; j < cols && fixed; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        // Fold row i into row t and re-eliminate.
                        for (std::size_t jj = 0; jj < cols; ++jj)
                            d(t, jj) += d(i, jj);
                        for (std::size_t jj = 0; jj < rows; ++jj)
                            u(t, jj) += u(i, jj);
                        fixed = false;
                    }
            if (fixed) break;
        }
    }

    // Canonical signs: nonnegative diagonal.
    for (std::size_t t = 0; t < steps; ++t) {
        if (d(t, t) < 0) {
            for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
            for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
        }
    }
    return SnfDecomposition{u, d, v};
}

Int minor_gcd(const IntMatrix& m, std::size_t k) {
    if (k < 1 || k > std::min(m.rows(), m.cols()))
        throw Error(ErrorKind::Shape, "minor order out of range");

    std::vector<std::size_t> ri(k), ci(k);
    std::iota(ri.begin(), ri.end(), 0);
    Int g = 0;

    auto next_combination = [](std::vector<std::size_t>& idx, std::size_t n) {
        std::size_t k2 = idx.size();
        for (std::size_t i = k2; i-- > 0;) {
            if (idx[i] + (k2 - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k2; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    do {
        std::iota(ci.begin(), ci.end(), 0);
        do {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    sub(i, j) = m(ri[i], ci[j]);
            g = int_gcd(g, determinant(sub));
            if (g == 1) return g;
        } while (next_combination(ci, m.cols()));
    } while (next_combination(ri, m.rows()));
    return g;
}

namespace {

// Rational Gauss-Jordan on [M | rhs...]; returns reduced augmented columns.
std::vector<RatVec> solve_many(const IntMatrix& m, const std::vector<IntVec>& rhs) {
    if (!m.square())
        throw Error(ErrorKind::Shape, "solve requires a square matrix");
    const std::size_t n = m.rows(), w = rhs.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + w));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));
        for (std::size_t c = 0; c < w; ++c) {
            if (rhs[c].size() != n)
                throw Error(ErrorKind::Shape, "rhs length mismatch");
            a[i][n + c] = Rat(rhs[c][i]);
        }
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n)
            throw Error(ErrorKind::Singular, "singular matrix");
        std::swap(a[col], a[piv]);
        Rat inv = a[col][col];
        for (std::size_t j = col; j < n + w; ++j) a[col][j] /= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = col; j < n + w; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<RatVec> out(w, RatVec(n));
    for (std::size_t c = 0; c < w; ++c)
        for (std::size_t i = 0; i < n; ++i) out[c][i] = a[i][n + c];
    return out;
}

} // namespace

RatVec solve_exact(const IntMatrix& m, const IntVec& b) {
    return solve_many(m, {b}).front();
}

std::vector<RatVec> inverse_rational(const IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<IntVec> cols(n, IntVec(n, 0));
    for (std::size_t j = 0; j < n; ++j) cols[j][j] = 1;
    auto solved = solve_many(m, cols);
    // solved[j] is column j of the inverse; transpose to row-major.
    std::vector<RatVec> inv(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = solved[j][i];
    return inv;
}

} // namespace hstar::exactla
