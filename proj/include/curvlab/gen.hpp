#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "curvlab/curvature.hpp"
#include "curvlab/jets.hpp"
#include "curvlab/metric.hpp"
#include "curvlab/supergeometry.hpp"

namespace curvlab::gen {

using Rng = std::mt19937_64;

inline Rat random_rat(Rng& rng, int max_num = 3, int max_den = 3) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rat(num(rng)) / Rat(den(rng));
}

inline std::vector<Rat> random_point(Rng& rng, int m) {
    std::vector<Rat> p(m);
    for (auto& v : p) v = random_rat(rng, 2, 3);
    return p;
}

/// Sparse polynomial with a handful of monomials of total degree <= max_deg.
inline PolyScalar random_poly(Rng& rng, int m, int max_deg, int terms = 3) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> var(0, m - 1);
    PolyScalar p(m);
    for (int t = 0; t < terms; ++t) {
        PolyScalar mono = PolyScalar::constant(m, random_rat(rng));
        int d = deg(rng);
        for (int k = 0; k < d; ++k) mono = mono * PolyScalar::variable(m, var(rng));
        p += mono;
    }
    return p;
}

inline PolyMatrix random_poly_matrix(Rng& rng, int rows, int cols, int m, int max_deg) {
    PolyMatrix x(rows, cols, m);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) x(i, j) = random_poly(rng, m, max_deg, 2);
    return x;
}

/// I + strictly upper triangular polynomial part: exactly invertible.
inline PolyMatrix random_unipotent(Rng& rng, int n, int m, int max_deg) {
    PolyMatrix u = PolyMatrix::identity(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) u(i, j) = random_poly(rng, m, max_deg, 2);
    return u;
}

inline ConnectionField random_connection(Rng& rng, int m, int n, int max_deg) {
    ConnectionField A;
    for (int mu = 0; mu < m; ++mu) A.push_back(random_poly_matrix(rng, n, n, m, max_deg));
    return A;
}

/// Valid polynomial almost complex structure: U·J0·U⁻¹ for unipotent U.
inline PolyMatrix random_acs(Rng& rng, int m, int max_deg) {
    PolyMatrix u = random_unipotent(rng, m, m, max_deg);
    return u * PolyMatrix::from_constant(canonical_j0(m), m) * u.unipotent_inverse();
}

/// Determinant-one polynomial metric: UᵀU for unipotent U.
inline MetricField random_unimodular_metric(Rng& rng, int m, int max_deg) {
    PolyMatrix u = random_unipotent(rng, m, m, max_deg);
    return MetricField(u.transpose() * u);
}

/// General symmetric polynomial perturbation of the flat metric; typically
/// only pointwise-invertible.
inline PolyMatrix random_metric_matrix(Rng& rng, int m, int max_deg) {
    PolyMatrix g = PolyMatrix::identity(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            PolyScalar p = random_poly(rng, m, max_deg, 2);
            // Keep the perturbation free of constant terms so g(0) = identity.
            p -= PolyScalar::constant(m, p.constant_term());
            g(i, j) += p;
            if (j != i) g(j, i) = g(i, j);
        }
    return g;
}

/// Polynomial diffeomorphism fixing 0 with unipotent Jacobian:
/// φ^μ = x^μ + (polynomial in x^{>μ} without constant or linear terms in a
/// triangular pattern keeps Dφ unitriangular).
inline std::vector<PolyScalar> random_unipotent_diffeo(Rng& rng, int m, int max_deg) {
    std::vector<PolyScalar> phi;
    for (int mu = 0; mu < m; ++mu) {
        PolyScalar f = PolyScalar::variable(m, mu);
        if (mu + 1 < m) {
            // Terms built only from later variables.
            std::uniform_int_distribution<int> var(mu + 1, m - 1);
            std::uniform_int_distribution<int> deg(1, std::max(1, max_deg));
            for (int t = 0; t < 2; ++t) {
                PolyScalar mono = PolyScalar::constant(m, random_rat(rng));
                int d = deg(rng);
                for (int k = 0; k < d; ++k) mono = mono * PolyScalar::variable(m, var(rng));
                f += mono;
            }
        }
        phi.push_back(f);
    }
    return phi;
}

inline PolyMatrix jacobian(const std::vector<PolyScalar>& phi, int m) {
    PolyMatrix d(m, m, m);
    for (int mu = 0; mu < m; ++mu)
        for (int nu = 0; nu < m; ++nu) d(mu, nu) = phi[mu].partial(nu);
    return d;
}

/// Pullback of a constant structure J0 by φ: (Dφ)⁻¹ · J0 · Dφ.
inline PolyMatrix pullback_constant_acs(const std::vector<PolyScalar>& phi, const RatMat& J0) {
    const int m = J0.rows();
    PolyMatrix d = jacobian(phi, m);
    return d.unipotent_inverse() * PolyMatrix::from_constant(J0, m) * d;
}

inline Jet1Connection random_connection_jet(Rng& rng, int m, int n) {
    Jet1Connection j = Jet1Connection::zero(m, n);
    for (int mu = 0; mu < m; ++mu) {
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) j.A[mu](i, k) = random_rat(rng);
        for (int a = 0; a < m; ++a)
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) j.dA[mu][a](i, k) = random_rat(rng);
    }
    return j;
}

inline Jet2VertAut random_vert_aut(Rng& rng, int m, int n) {
    Jet2VertAut a = Jet2VertAut::identity(m, n);
    for (int mu = 0; mu < m; ++mu)
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) a.B[mu](i, k) = random_rat(rng);
    for (int mu = 0; mu < m; ++mu)
        for (int nu = mu; nu < m; ++nu) {
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) a.B2[mu][nu](i, k) = random_rat(rng);
            a.B2[nu][mu] = a.B2[mu][nu];
        }
    return a;
}

inline Jet2Diffeo random_diffeo_jet(Rng& rng, int m) {
    Jet2Diffeo d = Jet2Diffeo::identity(m);
    // B2[rho](mu, nu) = B^mu_{nu rho}, symmetric under (nu, rho) swap.
    for (int mu = 0; mu < m; ++mu)
        for (int nu = 0; nu < m; ++nu)
            for (int rho = nu; rho < m; ++rho) {
                Rat v = random_rat(rng);
                d.B2[rho](mu, nu) = v;
                d.B2[nu](mu, rho) = v;
            }
    return d;
}

inline Jet1ACS random_acs_jet(Rng& rng, int m, int max_deg = 2) {
    return prolong_acs(random_acs(rng, m, max_deg), std::vector<Rat>(m, Rat(0)));
}

inline SuperconnectionField random_superconnection(Rng& rng, int m, int np, int nm,
                                                   int max_deg) {
    SuperconnectionField s = SuperconnectionField::zero({m, np, nm});
    s.A_plus = random_connection(rng, m, np, max_deg);
    s.A_minus = random_connection(rng, m, nm, max_deg);
    s.chi_pm = random_poly_matrix(rng, np, nm, m, max_deg);
    s.chi_mp = random_poly_matrix(rng, nm, np, m, max_deg);
    return s;
}

inline Jet1Super random_super_jet(Rng& rng, int m, int np, int nm) {
    return prolong_super(random_superconnection(rng, m, np, nm, 2),
                         std::vector<Rat>(m, Rat(0)));
}

/// Fully antisymmetric scalar k-form with random polynomial components.
inline TensorPolyField random_form(Rng& rng, int m, int k, int max_deg) {
    std::vector<Slot> slots(size_t(k), Slot{SlotKind::BaseCo, m});
    TensorPolyField f(m, slots);
    if (k == 0) {
        f.at(std::span<const int>{}) = random_poly(rng, m, max_deg);
        return f;
    }
    // Fill strictly increasing tuples, then spread by permutation sign.
    std::vector<int> idx(k, 0);
    std::function<void(int, int)> fill = [&](int depth, int start) {
        if (depth == k) {
            PolyScalar val = random_poly(rng, m, max_deg, 2);
            std::vector<int> perm = idx;
            std::sort(perm.begin(), perm.end());
            do {
                int sign = 1;
                for (size_t a = 0; a < perm.size(); ++a)
                    for (size_t b = a + 1; b < perm.size(); ++b)
                        if (perm[a] > perm[b]) sign = -sign;
                f.at(std::span<const int>(perm)) = sign == 1 ? val : -val;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return;
        }
        for (int v = start; v < m; ++v) {
            idx[depth] = v;
            fill(depth + 1, v + 1);
        }
    };
    fill(0, 0);
    return f;
}

/// Matrix-valued antisymmetric k-form.
inline FiberForm random_fiber_form(Rng& rng, int m, int k, int rows, int cols, int max_deg) {
    FiberForm f(m, k, rows, cols);
    if (k == 0) {
        f.at(std::initializer_list<int>{}) = random_poly_matrix(rng, rows, cols, m, max_deg);
        return f;
    }
    std::vector<int> idx(k, 0);
    std::function<void(int, int)> fill = [&](int depth, int start) {
        if (depth == k) {
            PolyMatrix val = random_poly_matrix(rng, rows, cols, m, max_deg);
            std::vector<int> perm = idx;
            std::sort(perm.begin(), perm.end());
            do {
                int sign = 1;
                for (size_t a = 0; a < perm.size(); ++a)
                    for (size_t b = a + 1; b < perm.size(); ++b)
                        if (perm[a] > perm[b]) sign = -sign;
                f.at(std::span<const int>(perm)) = sign == 1 ? val : Rat(-1) * val;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return;
        }
        for (int v = start; v < m; ++v) {
            idx[depth] = v;
            fill(depth + 1, v + 1);
        }
    };
    fill(0, 0);
    return f;
}

} // namespace curvlab::gen
