#pragma once

#include <optional>
#include <vector>

#include "curvlab/errors.hpp"
#include "curvlab/rational.hpp"

namespace curvlab {

/// Dense matrix of exact rationals. All elimination-based routines use plain
/// fraction-arithmetic Gauss-Jordan; sizes stay at desk scale.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {
        if (rows < 0 || cols < 0) throw argument_error("negative matrix dimension");
    }

    static RatMat identity(int n) {
        RatMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& v : a_)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const RatMat& x, const RatMat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    RatMat& operator+=(const RatMat& o) {
        check_same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    RatMat& operator-=(const RatMat& o) {
        check_same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    friend RatMat operator+(RatMat x, const RatMat& y) { return x += y; }
    friend RatMat operator-(RatMat x, const RatMat& y) { return x -= y; }
    friend RatMat operator-(const RatMat& x) {
        RatMat r(x.rows_, x.cols_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = -x.a_[i];
        return r;
    }
    friend RatMat operator*(const Rat& c, const RatMat& x) {
        RatMat r(x.rows_, x.cols_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = c * x.a_[i];
        return r;
    }

    friend RatMat operator*(const RatMat& x, const RatMat& y) {
        if (x.cols_ != y.rows_) throw argument_error("matrix product shape mismatch");
        RatMat r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                if (x(i, k) == 0) continue;
                for (int j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
            }
        return r;
    }

    friend RatMat commutator(const RatMat& x, const RatMat& y) { return x * y - y * x; }

    RatMat transpose() const {
        RatMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Rat det() const {
        if (rows_ != cols_) throw argument_error("determinant of non-square matrix");
        RatMat m = *this;
        Rat d(1);
        for (int col = 0; col < cols_; ++col) {
            int pivot = -1;
            for (int r = col; r < rows_; ++r)
                if (m(r, col) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return Rat(0);
            if (pivot != col) {
                m.swap_rows(pivot, col);
                d = -d;
            }
            d *= m(col, col);
            Rat inv = Rat(1) / m(col, col);
            for (int r = col + 1; r < rows_; ++r) {
                if (m(r, col) == 0) continue;
                Rat f = m(r, col) * inv;
                for (int j = col; j < cols_; ++j) m(r, j) -= f * m(col, j);
            }
        }
        return d;
    }

    int rank() const {
        RatMat m = *this;
        int rank = 0;
        for (int col = 0; col < cols_ && rank < rows_; ++col) {
            int pivot = -1;
            for (int r = rank; r < rows_; ++r)
                if (m(r, col) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            m.swap_rows(pivot, rank);
            Rat inv = Rat(1) / m(rank, col);
            for (int r = rank + 1; r < rows_; ++r) {
                if (m(r, col) == 0) continue;
                Rat f = m(r, col) * inv;
                for (int j = col; j < cols_; ++j) m(r, j) -= f * m(rank, j);
            }
            ++rank;
        }
        return rank;
    }

    RatMat inverse() const {
        if (rows_ != cols_) throw argument_error("inverse of non-square matrix");
        RatMat m = *this;
        RatMat inv = identity(rows_);
        for (int col = 0; col < cols_; ++col) {
            int pivot = -1;
            for (int r = col; r < rows_; ++r)
                if (m(r, col) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) throw argument_error("matrix is singular");
            m.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            Rat p = Rat(1) / m(col, col);
            for (int j = 0; j < cols_; ++j) {
                m(col, j) *= p;
                inv(col, j) *= p;
            }
            for (int r = 0; r < rows_; ++r) {
                if (r == col || m(r, col) == 0) continue;
                Rat f = m(r, col);
                for (int j = 0; j < cols_; ++j) {
                    m(r, j) -= f * m(col, j);
                    inv(r, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    /// Particular solution of A x = b with free variables set to zero;
    /// nullopt when inconsistent.
    static std::optional<std::vector<Rat>> solve_particular(const RatMat& A,
                                                            const std::vector<Rat>& b) {
        if (static_cast<int>(b.size()) != A.rows_) throw argument_error("rhs length mismatch");
        RatMat m(A.rows_, A.cols_ + 1);
        for (int i = 0; i < A.rows_; ++i) {
            for (int j = 0; j < A.cols_; ++j) m(i, j) = A(i, j);
            m(i, A.cols_) = b[i];
        }
        std::vector<int> pivot_col;
        int row = 0;
        for (int col = 0; col < A.cols_ && row < A.rows_; ++col) {
            int pivot = -1;
            for (int r = row; r < A.rows_; ++r)
                if (m(r, col) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            m.swap_rows(pivot, row);
            Rat p = Rat(1) / m(row, col);
            for (int j = col; j <= A.cols_; ++j) m(row, j) *= p;
            for (int r = 0; r < A.rows_; ++r) {
                if (r == row || m(r, col) == 0) continue;
                Rat f = m(r, col);
                for (int j = col; j <= A.cols_; ++j) m(r, j) -= f * m(row, j);
            }
            pivot_col.push_back(col);
            ++row;
        }
        for (int r = row; r < A.rows_; ++r)
            if (m(r, A.cols_) != 0) return std::nullopt;
        std::vector<Rat> x(A.cols_, Rat(0));
        for (size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = m(int(k), A.cols_);
        return x;
    }

    /// Basis of the right nullspace, columns as vectors.
    std::vector<std::vector<Rat>> nullspace() const {
        RatMat m = *this;
        std::vector<int> pivot_col;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int pivot = -1;
            for (int r = row; r < rows_; ++r)
                if (m(r, col) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            m.swap_rows(pivot, row);
            Rat p = Rat(1) / m(row, col);
            for (int j = col; j < cols_; ++j) m(row, j) *= p;
            for (int r = 0; r < rows_; ++r) {
                if (r == row || m(r, col) == 0) continue;
                Rat f = m(r, col);
                for (int j = col; j < cols_; ++j) m(r, j) -= f * m(row, j);
            }
            pivot_col.push_back(col);
            ++row;
        }
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivot_col) is_pivot[c] = true;
        std::vector<std::vector<Rat>> basis;
        for (int free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Rat> v(cols_, Rat(0));
            v[free] = 1;
            for (size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -m(int(k), free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    void check_same_shape(const RatMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw argument_error("matrix shape mismatch");
    }
    void swap_rows(int r1, int r2) {
        if (r1 == r2) return;
        for (int j = 0; j < cols_; ++j) std::swap((*this)(r1, j), (*this)(r2, j));
    }

    int rows_, cols_;
    std::vector<Rat> a_;
};

} // namespace curvlab
