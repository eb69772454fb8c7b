#pragma once

#include "hstar/ints.hpp"

#include <cstddef>
#include <initializer_list>

namespace hstar::exactla {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
  public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {
        if (rows == 0 || cols == 0)
            throw Error(ErrorKind::Shape, "matrix must have positive dimensions");
    }

    IntMatrix(std::initializer_list<std::initializer_list<Int>> init)
        : IntMatrix(init.size(), init.size() ? init.begin()->size() : 0) {
        std::size_t i = 0;
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw Error(ErrorKind::Shape, "ragged initializer");
            std::size_t j = 0;
            for (const auto& v : row) (*this)(i, j++) = v;
            ++i;
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<IntVec>& rows) {
        if (rows.empty() || rows.front().empty())
            throw Error(ErrorKind::Shape, "matrix must have positive dimensions");
        IntMatrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw Error(ErrorKind::Shape, "ragged row list");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    IntMatrix operator*(const IntMatrix& rhs) const {
        if (cols_ != rhs.rows_)
            throw Error(ErrorKind::Shape, "dimension mismatch in matrix product");
        IntMatrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    out(i, j) += a * rhs(k, j);
            }
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal, nonnegative,
/// divisibility-ordered (d1 | d2 | ...).
struct SnfDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
};

/// Exact determinant, fraction-free (Bareiss).
Int determinant(const IntMatrix& m);

/// Rank over Q, fraction-free.
std::size_t rank(const IntMatrix& m);

SnfDecomposition smith_normal_form(const IntMatrix& m);

/// gcd of all k x k minors (k-th determinantal divisor); 0 iff rank < k.
Int minor_gcd(const IntMatrix& m, std::size_t k);

/// Exact solution of M x = b for nonsingular square M.
RatVec solve_exact(const IntMatrix& m, const IntVec& b);

/// Exact inverse as rational row-major matrix; throws Singular if det = 0.
std::vector<RatVec> inverse_rational(const IntMatrix& m);

} // namespace hstar::exactla
