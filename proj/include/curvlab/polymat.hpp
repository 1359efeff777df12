#pragma once

#include <vector>

#include "curvlab/poly.hpp"
#include "curvlab/ratmat.hpp"

namespace curvlab {

/// Dense matrix of PolyScalar entries sharing one coordinate count.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0), num_vars_(0) {}
    PolyMatrix(int rows, int cols, int num_vars)
        : rows_(rows), cols_(cols), num_vars_(num_vars),
          a_(size_t(rows) * cols, PolyScalar(num_vars)) {
        if (rows < 0 || cols < 0) throw argument_error("negative matrix dimension");
    }

    static PolyMatrix identity(int n, int num_vars) {
        PolyMatrix m(n, n, num_vars);
        for (int i = 0; i < n; ++i) m(i, i) = PolyScalar::constant(num_vars, 1);
        return m;
    }

    static PolyMatrix from_constant(const RatMat& c, int num_vars) {
        PolyMatrix m(c.rows(), c.cols(), num_vars);
        for (int i = 0; i < c.rows(); ++i)
            for (int j = 0; j < c.cols(); ++j)
                m(i, j) = PolyScalar::constant(num_vars, c(i, j));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int num_vars() const { return num_vars_; }

    PolyScalar& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const PolyScalar& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& p : a_)
            if (!p.is_zero()) return false;
        return true;
    }

    friend bool operator==(const PolyMatrix& x, const PolyMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.num_vars_ == y.num_vars_ &&
               x.a_ == y.a_;
    }

    PolyMatrix& operator+=(const PolyMatrix& o) {
        check_same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    PolyMatrix& operator-=(const PolyMatrix& o) {
        check_same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    friend PolyMatrix operator+(PolyMatrix x, const PolyMatrix& y) { return x += y; }
    friend PolyMatrix operator-(PolyMatrix x, const PolyMatrix& y) { return x -= y; }
    friend PolyMatrix operator-(const PolyMatrix& x) {
        PolyMatrix r(x.rows_, x.cols_, x.num_vars_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = -x.a_[i];
        return r;
    }

    friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
        if (x.cols_ != y.rows_ || x.num_vars_ != y.num_vars_)
            throw argument_error("matrix product shape mismatch");
        PolyMatrix r(x.rows_, y.cols_, x.num_vars_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                if (x(i, k).is_zero()) continue;
                for (int j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
            }
        return r;
    }

    friend PolyMatrix operator*(const PolyScalar& f, const PolyMatrix& x) {
        PolyMatrix r(x.rows_, x.cols_, x.num_vars_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = f * x.a_[i];
        return r;
    }
    friend PolyMatrix operator*(const Rat& c, const PolyMatrix& x) {
        PolyMatrix r(x.rows_, x.cols_, x.num_vars_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = c * x.a_[i];
        return r;
    }

    friend PolyMatrix commutator(const PolyMatrix& x, const PolyMatrix& y) {
        return x * y - y * x;
    }

    PolyMatrix partial(int var) const {
        PolyMatrix r(rows_, cols_, num_vars_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].partial(var);
        return r;
    }

    RatMat eval(const std::vector<Rat>& point) const {
        RatMat r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j).eval(point);
        return r;
    }

    PolyMatrix transpose() const {
        PolyMatrix r(cols_, rows_, num_vars_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    PolyMatrix substitute(const std::vector<PolyScalar>& subs) const {
        int out_vars = subs.empty() ? 0 : subs[0].num_vars();
        PolyMatrix r(rows_, cols_, out_vars);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j).substitute(subs);
        return r;
    }

    bool is_identity() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                const PolyScalar want =
                    PolyScalar::constant(num_vars_, i == j ? 1 : 0);
                if ((*this)(i, j) != want) return false;
            }
        return true;
    }

    /// Exact inverse for unipotent matrices (identity plus nilpotent part);
    /// the Neumann series terminates. Other inputs are rejected: general
    /// polynomial matrices have no inverse in the polynomial ring.
    PolyMatrix unipotent_inverse() const {
        if (rows_ != cols_) throw argument_error("inverse of non-square matrix");
        PolyMatrix nil = *this - identity(rows_, num_vars_);
        // Over Q[x] a nilpotent n x n matrix satisfies N^n = 0 (Cayley-Hamilton).
        PolyMatrix power = identity(rows_, num_vars_);
        PolyMatrix inv(rows_, cols_, num_vars_);
        Rat sign(1);
        for (int k = 0; k < rows_; ++k) {
            inv += sign * power;
            power = power * nil;
            sign = -sign;
        }
        if (!power.is_zero())
            throw unsupported_input_error("matrix is not unipotent: polynomial part not nilpotent");
        return inv;
    }

private:
    void check_same_shape(const PolyMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || num_vars_ != o.num_vars_)
            throw argument_error("matrix shape mismatch");
    }

    int rows_, cols_, num_vars_;
    std::vector<PolyScalar> a_;
};

} // namespace curvlab
