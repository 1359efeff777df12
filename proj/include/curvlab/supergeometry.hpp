#pragma once

#include <vector>

#include "curvlab/curvature.hpp"
#include "curvlab/jets.hpp"
#include "curvlab/polymat.hpp"

namespace curvlab {

struct GradedBundleSpec {
    int base_dim = 0;
    int n_plus = 0;
    int n_minus = 0;

    void validate() const {
        if (base_dim < 1 || n_plus < 1 || n_minus < 1)
            throw argument_error("graded bundle needs base_dim, n_plus, n_minus >= 1");
    }
    friend bool operator==(const GradedBundleSpec&, const GradedBundleSpec&) = default;
};

/// ∇ + χ: even part a direct-sum connection (A_plus, A_minus), odd part the
/// off-diagonal blocks chi_pm: ξ₋ → ξ₊ and chi_mp: ξ₊ → ξ₋.
struct SuperconnectionField {
    GradedBundleSpec bundle;
    ConnectionField A_plus;  // m matrices, n+ x n+
    ConnectionField A_minus; // m matrices, n- x n-
    PolyMatrix chi_pm;       // n+ x n-
    PolyMatrix chi_mp;       // n- x n+

    void validate() const {
        bundle.validate();
        const int m = bundle.base_dim, np = bundle.n_plus, nm = bundle.n_minus;
        if (int(A_plus.size()) != m || int(A_minus.size()) != m)
            throw argument_error("superconnection: wrong number of connection blocks");
        for (const auto& a : A_plus)
            if (a.rows() != np || a.cols() != np || a.num_vars() != m)
                throw argument_error("superconnection: A_plus shape mismatch");
        for (const auto& a : A_minus)
            if (a.rows() != nm || a.cols() != nm || a.num_vars() != m)
                throw argument_error("superconnection: A_minus shape mismatch");
        if (chi_pm.rows() != np || chi_pm.cols() != nm || chi_pm.num_vars() != m)
            throw argument_error("superconnection: chi_pm shape mismatch");
        if (chi_mp.rows() != nm || chi_mp.cols() != np || chi_mp.num_vars() != m)
            throw argument_error("superconnection: chi_mp shape mismatch");
    }

    static SuperconnectionField zero(const GradedBundleSpec& b) {
        b.validate();
        SuperconnectionField s;
        s.bundle = b;
        s.A_plus.assign(b.base_dim, PolyMatrix(b.n_plus, b.n_plus, b.base_dim));
        s.A_minus.assign(b.base_dim, PolyMatrix(b.n_minus, b.n_minus, b.base_dim));
        s.chi_pm = PolyMatrix(b.n_plus, b.n_minus, b.base_dim);
        s.chi_mp = PolyMatrix(b.n_minus, b.n_plus, b.base_dim);
        return s;
    }
};

enum class Parity { Even, Odd };

/// The three wedge degrees of a supercurvature, kept as separate graded
/// slots. deg0 holds two blocks whose meaning depends on the variant:
/// (χ_{+-}, χ_{-+}) for the obstruction variant (odd), (χ², diagonal blocks)
/// for Quillen's (even). deg1 is ∇χ, deg2 the block-diagonal (F₊, F₋).
struct SuperCurvatureValue {
    GradedBundleSpec bundle;
    Parity deg0_parity = Parity::Odd;
    PolyMatrix deg0_first;  // chi_pm (odd) or chi_pm*chi_mp (even, n+ x n+)
    PolyMatrix deg0_second; // chi_mp (odd) or chi_mp*chi_pm (even, n- x n-)
    std::vector<PolyMatrix> deg1_pm, deg1_mp; // index mu: (∇_mu chi)_{+-}, _{-+}
    FiberForm deg2_plus, deg2_minus;          // F(A+), F(A-)

    bool is_zero() const {
        if (!deg0_first.is_zero() || !deg0_second.is_zero()) return false;
        for (const auto& v : deg1_pm)
            if (!v.is_zero()) return false;
        for (const auto& v : deg1_mp)
            if (!v.is_zero()) return false;
        return deg2_plus.is_zero() && deg2_minus.is_zero();
    }
};

/// ∇_μχ blocks: (∇_μχ)_{+-} = ∂_μχ_{+-} + A_{+μ}χ_{+-} − χ_{+-}A_{-μ} and the
/// mirrored law for the other block.
inline void super_nabla_chi(const SuperconnectionField& s, std::vector<PolyMatrix>& pm,
                            std::vector<PolyMatrix>& mp) {
    const int m = s.bundle.base_dim;
    pm.clear();
    mp.clear();
    for (int mu = 0; mu < m; ++mu) {
        pm.push_back(s.chi_pm.partial(mu) + s.A_plus[mu] * s.chi_pm -
                     s.chi_pm * s.A_minus[mu]);
        mp.push_back(s.chi_mp.partial(mu) + s.A_minus[mu] * s.chi_mp -
                     s.chi_mp * s.A_plus[mu]);
    }
}

/// Quillen's algebraic supercurvature χ² + d∇χ + F∇.
inline SuperCurvatureValue quillen_supercurvature(const SuperconnectionField& s) {
    s.validate();
    SuperCurvatureValue v;
    v.bundle = s.bundle;
    v.deg0_parity = Parity::Even;
    v.deg0_first = s.chi_pm * s.chi_mp;
    v.deg0_second = s.chi_mp * s.chi_pm;
    super_nabla_chi(s, v.deg1_pm, v.deg1_mp);
    v.deg2_plus = yang_mills_curvature(s.A_plus);
    v.deg2_minus = yang_mills_curvature(s.A_minus);
    return v;
}

/// The obstruction supercurvature (χ, ∇χ, F∇): same degree-1 and degree-2
/// parts as Quillen's, but degree 0 is χ itself (odd), which separates more
/// superconnections.
inline SuperCurvatureValue obstruction_supercurvature(const SuperconnectionField& s) {
    s.validate();
    SuperCurvatureValue v;
    v.bundle = s.bundle;
    v.deg0_parity = Parity::Odd;
    v.deg0_first = s.chi_pm;
    v.deg0_second = s.chi_mp;
    super_nabla_chi(s, v.deg1_pm, v.deg1_mp);
    v.deg2_plus = yang_mills_curvature(s.A_plus);
    v.deg2_minus = yang_mills_curvature(s.A_minus);
    return v;
}

/// Graded section and the result of applying ∇ + χ to it: a 0-form part (the
/// χ swap) plus a 1-form part (the connection derivative).
struct GradedSection {
    PolyMatrix plus;  // n+ x 1
    PolyMatrix minus; // n- x 1
};

struct SuperconnectionImage {
    GradedSection deg0;              // (χ_{+-}ψ₋, χ_{-+}ψ₊)
    std::vector<GradedSection> deg1; // index mu: (∇_μψ₊, ∇_μψ₋)
};

inline SuperconnectionImage apply_superconnection(const SuperconnectionField& s,
                                                  const GradedSection& psi) {
    s.validate();
    const int m = s.bundle.base_dim;
    if (psi.plus.rows() != s.bundle.n_plus || psi.plus.cols() != 1 ||
        psi.minus.rows() != s.bundle.n_minus || psi.minus.cols() != 1)
        throw argument_error("graded section shape mismatch");
    SuperconnectionImage out;
    out.deg0 = GradedSection{s.chi_pm * psi.minus, s.chi_mp * psi.plus};
    for (int mu = 0; mu < m; ++mu)
        out.deg1.push_back(GradedSection{psi.plus.partial(mu) + s.A_plus[mu] * psi.plus,
                                         psi.minus.partial(mu) + s.A_minus[mu] * psi.minus});
    return out;
}

/// Vertical gauge action by a pair of unipotent automorphisms:
/// χ_{+-} → φ₊⁻¹χ_{+-}φ₋, χ_{-+} → φ₋⁻¹χ_{-+}φ₊, A± → φ±*A±.
inline SuperconnectionField super_gauge_transform(const PolyMatrix& phi_plus,
                                                  const PolyMatrix& phi_minus,
                                                  const SuperconnectionField& s) {
    s.validate();
    PolyMatrix inv_p = phi_plus.unipotent_inverse();
    PolyMatrix inv_m = phi_minus.unipotent_inverse();
    SuperconnectionField out = s;
    out.chi_pm = inv_p * s.chi_pm * phi_minus;
    out.chi_mp = inv_m * s.chi_mp * phi_plus;
    out.A_plus = gauge_transform(phi_plus, s.A_plus);
    out.A_minus = gauge_transform(phi_minus, s.A_minus);
    return out;
}

/// Jet lifting of a superconnection at a point.
inline Jet1Super prolong_super(const SuperconnectionField& s, const std::vector<Rat>& point) {
    s.validate();
    const int m = s.bundle.base_dim;
    if (int(point.size()) != m) throw argument_error("point dimension mismatch");
    Jet1Super j = Jet1Super::zero(m, s.bundle.n_plus, s.bundle.n_minus);
    j.chi_pm = s.chi_pm.eval(point);
    j.chi_mp = s.chi_mp.eval(point);
    for (int rho = 0; rho < m; ++rho) {
        j.dchi_pm[rho] = s.chi_pm.partial(rho).eval(point);
        j.dchi_mp[rho] = s.chi_mp.partial(rho).eval(point);
    }
    for (int mu = 0; mu < m; ++mu) {
        j.Ap[mu] = s.A_plus[mu].eval(point);
        j.Am[mu] = s.A_minus[mu].eval(point);
        for (int rho = 0; rho < m; ++rho) {
            j.dAp[mu][rho] = s.A_plus[mu].partial(rho).eval(point);
            j.dAm[mu][rho] = s.A_minus[mu].partial(rho).eval(point);
        }
    }
    return j;
}

} // namespace curvlab
