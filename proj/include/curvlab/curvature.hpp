#pragma once

#include <string>
#include <vector>

#include "curvlab/parse.hpp"
#include "curvlab/polymat.hpp"
#include "curvlab/tensor.hpp"

namespace curvlab {

/// Connection coefficients: A[mu] is an n x n polynomial matrix, mu < m.
using ConnectionField = std::vector<PolyMatrix>;

/// k-form with matrix fiber values, stored dense over all index tuples with
/// the weight-one antisymmetry convention (no 1/k! in components).
class FiberForm {
public:
    FiberForm() : base_dim_(0), degree_(0), rows_(0), cols_(0) {}
    FiberForm(int base_dim, int degree, int rows, int cols)
        : base_dim_(base_dim), degree_(degree), rows_(rows), cols_(cols) {
        size_t total = 1;
        for (int k = 0; k < degree; ++k) total *= size_t(base_dim);
        vals_.assign(total, PolyMatrix(rows, cols, base_dim));
    }

    static FiberForm from_section(const PolyMatrix& s, int base_dim) {
        FiberForm f(base_dim, 0, s.rows(), s.cols());
        f.vals_[0] = s;
        return f;
    }

    int base_dim() const { return base_dim_; }
    int degree() const { return degree_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    PolyMatrix& at(std::span<const int> idx) { return vals_[flatten(idx)]; }
    const PolyMatrix& at(std::span<const int> idx) const { return vals_[flatten(idx)]; }
    PolyMatrix& at(std::initializer_list<int> idx) { return at(std::span<const int>(idx)); }
    const PolyMatrix& at(std::initializer_list<int> idx) const {
        return at(std::span<const int>(idx));
    }

    bool is_zero() const {
        for (const auto& v : vals_)
            if (!v.is_zero()) return false;
        return true;
    }

    friend bool operator==(const FiberForm& a, const FiberForm& b) {
        return a.base_dim_ == b.base_dim_ && a.degree_ == b.degree_ && a.rows_ == b.rows_ &&
               a.cols_ == b.cols_ && a.vals_ == b.vals_;
    }
    friend FiberForm operator-(FiberForm a, const FiberForm& b) {
        if (a.base_dim_ != b.base_dim_ || a.degree_ != b.degree_ || a.rows_ != b.rows_ ||
            a.cols_ != b.cols_)
            throw argument_error("form shape mismatch");
        for (size_t i = 0; i < a.vals_.size(); ++i) a.vals_[i] -= b.vals_[i];
        return a;
    }

    bool is_antisymmetric() const {
        if (degree_ < 2) return true;
        std::vector<int> idx(degree_, 0);
        return antisym_rec(0, idx);
    }

private:
    size_t flatten(std::span<const int> idx) const {
        if (int(idx.size()) != degree_) throw argument_error("form index arity mismatch");
        size_t pos = 0;
        for (int k = 0; k < degree_; ++k) {
            if (idx[k] < 0 || idx[k] >= base_dim_) throw argument_error("form index out of range");
            pos = pos * size_t(base_dim_) + size_t(idx[k]);
        }
        return pos;
    }

    bool antisym_rec(int k, std::vector<int>& idx) const {
        if (k == degree_) {
            for (int a = 0; a + 1 < degree_; ++a) {
                std::vector<int> sw = idx;
                std::swap(sw[a], sw[a + 1]);
                if (!(at(std::span<const int>(idx)) ==
                      Rat(-1) * at(std::span<const int>(sw))))
                    return false;
            }
            return true;
        }
        for (int v = 0; v < base_dim_; ++v) {
            idx[k] = v;
            if (!antisym_rec(k + 1, idx)) return false;
        }
        return true;
    }

    int base_dim_, degree_, rows_, cols_;
    std::vector<PolyMatrix> vals_;
};

/// (dω)_{μ0…μk} = Σ_j (−1)^j ∂_{μj} ω_{μ0…omit j…μk}.
inline TensorPolyField exterior_derivative(const TensorPolyField& omega) {
    const int m = omega.base_dim();
    const int k = omega.order();
    for (const Slot& s : omega.slots())
        if (s.kind != SlotKind::BaseCo)
            throw argument_error("exterior derivative expects base-covariant slots");
    if (k >= 2 && !omega.is_fully_antisymmetric(0, k))
        throw invalid_section_error("form is not antisymmetric");
    std::vector<Slot> slots(size_t(k) + 1, Slot{SlotKind::BaseCo, m});
    return TensorPolyField::build(m, slots, [&](std::span<const int> idx) {
        PolyScalar sum(m);
        for (int j = 0; j <= k; ++j) {
            std::vector<int> rest;
            rest.reserve(k);
            for (int t = 0; t <= k; ++t)
                if (t != j) rest.push_back(idx[t]);
            PolyScalar term = omega.at(std::span<const int>(rest)).partial(idx[j]);
            sum += (j % 2 == 0) ? term : -term;
        }
        return sum;
    });
}

inline void check_connection(const ConnectionField& A) {
    if (A.empty()) throw argument_error("empty connection field");
    const int m = static_cast<int>(A.size());
    const int n = A[0].rows();
    for (const auto& Amu : A)
        if (Amu.rows() != n || Amu.cols() != n || Amu.num_vars() != m)
            throw argument_error("connection coefficient shape mismatch");
}

/// F_{μν} = ∂_μ A_ν − ∂_ν A_μ + [A_μ, A_ν].
inline FiberForm yang_mills_curvature(const ConnectionField& A) {
    check_connection(A);
    const int m = static_cast<int>(A.size());
    const int n = A[0].rows();
    FiberForm F(m, 2, n, n);
    for (int mu = 0; mu < m; ++mu)
        for (int nu = 0; nu < m; ++nu)
            F.at({mu, nu}) = A[nu].partial(mu) - A[mu].partial(nu) + commutator(A[mu], A[nu]);
    return F;
}

/// ∇_μ on fiber values: vector sections (cols = 1) get A_μ·X, endomorphism
/// sections (square, matching A) get [A_μ, X].
inline PolyMatrix covariant_partial(const ConnectionField& A, int mu, const PolyMatrix& X) {
    const int n = A[0].rows();
    if (X.cols() == 1 && X.rows() == n) return X.partial(mu) + A[mu] * X;
    if (X.rows() == n && X.cols() == n) return X.partial(mu) + commutator(A[mu], X);
    throw argument_error("unsupported fiber value shape for covariant derivative");
}

/// (d∇S)_{μ0…μk} = Σ_j (−1)^j ∇_{μj} S_{μ0…omit j…μk}.
inline FiberForm covariant_differential(const ConnectionField& A, const FiberForm& S) {
    check_connection(A);
    const int m = static_cast<int>(A.size());
    if (S.base_dim() != m) throw argument_error("base dimension mismatch");
    if (!S.is_antisymmetric()) throw invalid_section_error("form is not antisymmetric");
    const int k = S.degree();
    FiberForm out(m, k + 1, S.rows(), S.cols());
    std::vector<int> idx(size_t(k) + 1, 0);
    std::function<void(int)> walk = [&](int depth) {
        if (depth == k + 1) {
            PolyMatrix sum(S.rows(), S.cols(), m);
            for (int j = 0; j <= k; ++j) {
                std::vector<int> rest;
                rest.reserve(k);
                for (int t = 0; t <= k; ++t)
                    if (t != j) rest.push_back(idx[t]);
                PolyMatrix term =
                    covariant_partial(A, idx[j], S.at(std::span<const int>(rest)));
                if (j % 2 == 0)
                    sum += term;
                else
                    sum -= term;
            }
            out.at(std::span<const int>(idx)) = sum;
            return;
        }
        for (int v = 0; v < m; ++v) {
            idx[depth] = v;
            walk(depth + 1);
        }
    };
    walk(0);
    return out;
}

/// Gauge action φ*A = φ⁻¹Aφ + φ⁻¹∂φ for unipotent polynomial φ.
inline ConnectionField gauge_transform(const PolyMatrix& phi, const ConnectionField& A) {
    check_connection(A);
    const PolyMatrix inv = phi.unipotent_inverse();
    ConnectionField out;
    out.reserve(A.size());
    for (size_t mu = 0; mu < A.size(); ++mu)
        out.push_back(inv * A[mu] * phi + inv * phi.partial(static_cast<int>(mu)));
    return out;
}

/// Throws invalid_section_error naming a violating component unless J² = −1.
inline void check_acs(const PolyMatrix& J) {
    if (J.rows() != J.cols() || J.rows() != J.num_vars())
        throw argument_error("almost complex structure must be m x m over m variables");
    const int m = J.rows();
    PolyMatrix sq = J * J + PolyMatrix::identity(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (!sq(i, j).is_zero())
                throw invalid_section_error("J^2 != -1: component (" + std::to_string(i + 1) +
                                            "," + std::to_string(j + 1) + ") of J^2+1 is " +
                                            poly_to_string(sq(i, j)));
}

/// N^ρ_{μν} = J^α_μ ∂_α J^ρ_ν − J^α_ν ∂_α J^ρ_μ − J^ρ_α ∂_μ J^α_ν + J^ρ_α ∂_ν J^α_μ.
inline TensorPolyField nijenhuis(const PolyMatrix& J) {
    check_acs(J);
    const int m = J.rows();
    return TensorPolyField::build(
        m, {{SlotKind::BaseContra, m}, {SlotKind::BaseCo, m}, {SlotKind::BaseCo, m}},
        [&](std::span<const int> idx) {
            const int rho = idx[0], mu = idx[1], nu = idx[2];
            PolyScalar sum(m);
            for (int a = 0; a < m; ++a) {
                sum += J(a, mu) * J(rho, nu).partial(a);
                sum -= J(a, nu) * J(rho, mu).partial(a);
                sum -= J(rho, a) * J(a, nu).partial(mu);
                sum += J(rho, a) * J(a, mu).partial(nu);
            }
            return sum;
        });
}

using VectorField = std::vector<PolyScalar>; // components X^mu

inline VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
    const int m = static_cast<int>(X.size());
    if (Y.size() != X.size()) throw argument_error("vector field dimension mismatch");
    VectorField out(m, PolyScalar(m));
    for (int mu = 0; mu < m; ++mu)
        for (int nu = 0; nu < m; ++nu)
            out[mu] += X[nu] * Y[mu].partial(nu) - Y[nu] * X[mu].partial(nu);
    return out;
}

inline VectorField apply_j(const PolyMatrix& J, const VectorField& v) {
    const int m = J.rows();
    VectorField out(m, PolyScalar(m));
    for (int mu = 0; mu < m; ++mu)
        for (int nu = 0; nu < m; ++nu) out[mu] += J(mu, nu) * v[nu];
    return out;
}

/// [JX, JY] − J[X, JY] − J[JX, Y] − [X, Y].
inline VectorField nijenhuis_vector_form(const PolyMatrix& J, const VectorField& X,
                                         const VectorField& Y) {
    check_acs(J);
    const int m = J.rows();
    if (int(X.size()) != m || int(Y.size()) != m)
        throw argument_error("vector field dimension mismatch");
    VectorField JX = apply_j(J, X), JY = apply_j(J, Y);
    VectorField out = lie_bracket(JX, JY);
    VectorField t1 = apply_j(J, lie_bracket(X, JY));
    VectorField t2 = apply_j(J, lie_bracket(JX, Y));
    VectorField t3 = lie_bracket(X, Y);
    for (int mu = 0; mu < m; ++mu) out[mu] -= t1[mu] + t2[mu] + t3[mu];
    return out;
}

/// Canonical constant complex structure on even m, acting on interleaved
/// pairs: J0 e_{2i+1} = e_{2i+2}, J0 e_{2i+2} = -e_{2i+1}.
inline RatMat canonical_j0(int m) {
    if (m % 2 != 0 || m <= 0) throw argument_error("canonical J0 needs even dimension");
    RatMat J(m, m);
    for (int i = 0; i < m / 2; ++i) {
        J(2 * i + 1, 2 * i) = Rat(1);
        J(2 * i, 2 * i + 1) = Rat(-1);
    }
    return J;
}

} // namespace curvlab
