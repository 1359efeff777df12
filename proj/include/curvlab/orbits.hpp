#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "curvlab/jets.hpp"
#include "curvlab/metric.hpp"
#include "curvlab/polymat.hpp"
#include "curvlab/supergeometry.hpp"

namespace curvlab {

// ---------------------------------------------------------------------------
// Jet-group helpers
// ---------------------------------------------------------------------------

/// Pointwise product of 2-jets of vertical automorphisms: (p·q)(x) = p(x)q(x)
/// truncated at order 2. Acting by p first and then by q equals acting by
/// vert_aut_product(p, q).
inline Jet2VertAut vert_aut_product(const Jet2VertAut& p, const Jet2VertAut& q) {
    const int m = p.base_dim();
    if (q.base_dim() != m || q.fiber_dim() != p.fiber_dim())
        throw argument_error("automorphism jet shape mismatch");
    Jet2VertAut r;
    r.B0 = p.B0 * q.B0;
    r.B.resize(m);
    r.B2.assign(m, std::vector<RatMat>(m));
    for (int a = 0; a < m; ++a) r.B[a] = p.B0 * q.B[a] + p.B[a] * q.B0;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            r.B2[a][b] = p.B0 * q.B2[a][b] + p.B[a] * q.B[b] + p.B[b] * q.B[a] +
                         p.B2[a][b] * q.B0;
    return r;
}

/// Inverse of a normalized (B0 = 1) 2-jet.
inline Jet2VertAut vert_aut_inverse(const Jet2VertAut& p) {
    const int m = p.base_dim();
    const int n = p.fiber_dim();
    if (!(p.B0 == RatMat::identity(n)))
        throw unsupported_input_error("jet inverse implemented for normalized B0 = 1 only");
    Jet2VertAut r = Jet2VertAut::identity(m, n);
    for (int a = 0; a < m; ++a) r.B[a] = -p.B[a];
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            r.B2[a][b] = -p.B2[a][b] + p.B[a] * p.B[b] + p.B[b] * p.B[a];
    return r;
}

/// Composition of 2-jets of diffeomorphisms with identity linear part is
/// additive in the quadratic coefficients.
inline Jet2Diffeo diffeo_product(const Jet2Diffeo& p, const Jet2Diffeo& q) {
    const int m = p.dim();
    const RatMat id = RatMat::identity(m);
    if (!(p.B == id) || !(q.B == id))
        throw unsupported_input_error("diffeo jet product implemented for identity linear part");
    Jet2Diffeo r = Jet2Diffeo::identity(m);
    for (int rho = 0; rho < m; ++rho) r.B2[rho] = p.B2[rho] + q.B2[rho];
    return r;
}

// ---------------------------------------------------------------------------
// Connection-jet orbit
// ---------------------------------------------------------------------------

/// Normalized vertical-automorphism action on a connection 1-jet:
/// A_μ → A_μ + B_μ ; A_{μα} → A_{μα} + A_μB_α − B_αA_μ − B_αB_μ + B_{μα}.
inline Jet1Connection act_on_connection_jet(const Jet2VertAut& aut, const Jet1Connection& j) {
    aut.validate();
    if (aut.base_dim() != j.m || aut.fiber_dim() != j.n)
        throw argument_error("automorphism/jet shape mismatch");
    if (!(aut.B0 == RatMat::identity(j.n)))
        throw unsupported_input_error(
            "action implemented for normalized jets (B0 = 1); conjugate by the constant "
            "part separately");
    Jet1Connection out = j;
    for (int mu = 0; mu < j.m; ++mu) {
        out.A[mu] = j.A[mu] + aut.B[mu];
        for (int a = 0; a < j.m; ++a)
            out.dA[mu][a] = j.dA[mu][a] + j.A[mu] * aut.B[a] - aut.B[a] * j.A[mu] -
                            aut.B[a] * aut.B[mu] + aut.B2[mu][a];
    }
    return out;
}

/// Constant-conjugation wrapper for non-normalized automorphisms: the B0 part
/// acts separately as A ↦ B0⁻¹AB0 (value and derivative coefficients alike).
inline Jet1Connection conjugate_connection_jet(const RatMat& B0, const Jet1Connection& j) {
    if (B0.det() == 0) throw argument_error("singular conjugation");
    RatMat inv = B0.inverse();
    Jet1Connection out = j;
    for (int mu = 0; mu < j.m; ++mu) {
        out.A[mu] = inv * j.A[mu] * B0;
        for (int a = 0; a < j.m; ++a) out.dA[mu][a] = inv * j.dA[mu][a] * B0;
    }
    return out;
}

struct ConnectionReduction {
    Jet1Connection normal_form;
    Jet2VertAut witness;
    std::vector<std::vector<RatMat>> invariant; // F[mu][alpha], antisymmetric
};

/// Two-stage reduction: B_μ = −A_μ kills the value part and turns the
/// derivative part into Ã_{μα} = A_{μα} − A_μA_α; a symmetric B_{μα} then
/// kills sym(Ã). The antisymmetrization Ã_{αμ} − Ã_{μα} = F_{μα}(0) survives
/// as the orbit invariant.
inline ConnectionReduction reduce_connection_jet(const Jet1Connection& j) {
    const int m = j.m, n = j.n;
    Jet2VertAut stage1 = Jet2VertAut::identity(m, n);
    for (int mu = 0; mu < m; ++mu) stage1.B[mu] = -j.A[mu];
    Jet1Connection mid = act_on_connection_jet(stage1, j);

    Jet2VertAut stage2 = Jet2VertAut::identity(m, n);
    const Rat half = Rat(1) / 2;
    for (int mu = 0; mu < m; ++mu)
        for (int a = 0; a < m; ++a)
            stage2.B2[mu][a] = -half * (mid.dA[mu][a] + mid.dA[a][mu]);

    ConnectionReduction red;
    red.witness = vert_aut_product(stage1, stage2);
    red.normal_form = act_on_connection_jet(stage2, mid);
    red.invariant.assign(m, std::vector<RatMat>(m));
    for (int mu = 0; mu < m; ++mu)
        for (int a = 0; a < m; ++a) red.invariant[mu][a] = mid.dA[a][mu] - mid.dA[mu][a];
    return red;
}

// ---------------------------------------------------------------------------
// Almost-complex-structure jet orbit
// ---------------------------------------------------------------------------

/// Normalized diffeomorphism action on an ACS 1-jet: J fixed,
/// C^μ_{νρ} → C^μ_{νρ} + J^μ_α B^α_{νρ} − B^μ_{αρ} J^α_ν, i.e. C_ρ += [J, B_ρ].
inline Jet1ACS act_on_acs_jet(const Jet2Diffeo& d, const Jet1ACS& j) {
    d.validate();
    const int m = j.dim();
    if (d.dim() != m) throw argument_error("diffeomorphism/jet dimension mismatch");
    if (!(d.B == RatMat::identity(m)))
        throw unsupported_input_error("action implemented for normalized jets (B = 1)");
    Jet1ACS out = j;
    for (int rho = 0; rho < m; ++rho)
        out.C[rho] = j.C[rho] + (j.J * d.B2[rho] - d.B2[rho] * j.J);
    return out;
}

/// K(B)(u, v) = J·B(u, v) − B(Ju, v); with (B_ρ)^μ_ν = B^μ_{νρ} this is the
/// commutator family [J, B_ρ] — exactly the C-shift of the jet action.
inline std::vector<RatMat> k_map(const std::vector<RatMat>& B, const RatMat& J) {
    const int m = J.rows();
    if (int(B.size()) != m) throw argument_error("bilinear coefficient family size mismatch");
    for (int rho = 0; rho < m; ++rho)
        for (int mu = 0; mu < m; ++mu)
            for (int nu = 0; nu < m; ++nu)
                if (B[rho](mu, nu) != B[nu](mu, rho))
                    throw argument_error("k_map requires symmetric bilinear coefficients");
    if (!(J * J + RatMat::identity(m)).is_zero()) throw argument_error("k_map: J^2 != -1");
    std::vector<RatMat> out(m);
    for (int rho = 0; rho < m; ++rho) out[rho] = J * B[rho] - B[rho] * J;
    return out;
}

/// Nijenhuis value at the jet point, assembled from first-derivative data:
/// N^ρ_{μν} = Σ_α J^α_μ C^ρ_{να} − J^α_ν C^ρ_{μα} − J^ρ_α C^α_{νμ} + J^ρ_α C^α_{μν}
/// with C^μ_{νρ} = C[ρ](μ,ν).
inline std::vector<RatMat> nijenhuis_from_jet(const Jet1ACS& j) {
    const int m = j.dim();
    std::vector<RatMat> N(m, RatMat(m, m)); // N[nu](rho, mu) ... stored as N_rho_mu_nu
    // Store as family indexed by second lower index: N[nu](rho, mu) = N^rho_{mu nu}.
    for (int nu = 0; nu < m; ++nu)
        for (int rho = 0; rho < m; ++rho)
            for (int mu = 0; mu < m; ++mu) {
                Rat sum(0);
                for (int a = 0; a < m; ++a)
                    sum += j.J(a, mu) * j.C[a](rho, nu) - j.J(a, nu) * j.C[a](rho, mu) -
                           j.J(rho, a) * j.C[mu](a, nu) + j.J(rho, a) * j.C[nu](a, mu);
                N[nu](rho, mu) = sum;
            }
    return N;
}

struct AcsProjection {
    std::vector<RatMat> ker_s_part;     // (1 − P)(C), the orbit invariant
    std::vector<RatMat> gauge_part;     // P(C) = K(B) for the solved B
    std::vector<RatMat> half_jn;        // −½ J·N(J)(0), the printed comparison value
    std::vector<RatMat> quarter_jn;     // −¼ J·N(J)(0)
    std::vector<RatMat> closed_form;    // ¼(C(u,v) − C(v,u) + JC(u,Jv) − JC(v,Ju))
    int a_rank = 0;                     // rank of A = s∘K on S²L*⊗L
    int a_dim = 0;                      // dim S²L*⊗L
};

/// Splits C ∈ W along W = K(S²L*⊗L) ⊕ ker(s): solves sym(K(B)) = s(C) for a
/// symmetric B over ℚ and returns the complementary part together with the
/// reference quantities used by the cross-checks.
inline AcsProjection acs_projection(const Jet1ACS& j) {
    j.validate();
    const int m = j.dim();
    const RatMat& J = j.J;

    // s(C)^μ_{νρ} = ½(C^μ_{νρ} + C^μ_{ρν}), as the family S[rho](mu, nu).
    const Rat half = Rat(1) / 2;
    std::vector<RatMat> S(m, RatMat(m, m));
    for (int rho = 0; rho < m; ++rho)
        for (int mu = 0; mu < m; ++mu)
            for (int nu = 0; nu < m; ++nu)
                S[rho](mu, nu) = half * (j.C[rho](mu, nu) + j.C[nu](mu, rho));

    // Unknowns: B^μ_{νρ} with ν ≤ ρ. Equations: sym(K(B))^μ_{νρ} = S^μ_{νρ}.
    auto unknown_id = [&](int mu, int nu, int rho) {
        if (nu > rho) std::swap(nu, rho);
        int pair = nu * m - nu * (nu - 1) / 2 + (rho - nu);
        return mu * (m * (m + 1) / 2) + pair;
    };
    const int n_unknowns = m * m * (m + 1) / 2;
    const int n_eqs = m * m * m;
    RatMat A(n_eqs, n_unknowns);
    std::vector<Rat> rhs(n_eqs, Rat(0));
    int eq = 0;
    for (int mu = 0; mu < m; ++mu)
        for (int nu = 0; nu < m; ++nu)
            for (int rho = 0; rho < m; ++rho, ++eq) {
                // K(B)^μ_{νρ} = Σ_α J^μ_α B^α_{νρ} − B^μ_{αρ} J^α_ν; symmetrize ν↔ρ.
                for (int a = 0; a < m; ++a) {
                    A(eq, unknown_id(a, nu, rho)) += half * J(mu, a);
                    A(eq, unknown_id(mu, a, rho)) -= half * J(a, nu);
                    A(eq, unknown_id(a, rho, nu)) += half * J(mu, a);
                    A(eq, unknown_id(mu, a, nu)) -= half * J(a, rho);
                }
                rhs[eq] = S[rho](mu, nu);
            }
    auto sol = RatMat::solve_particular(A, rhs);
    if (!sol)
        throw internal_error("splitting system inconsistent: s(C) outside image of s∘K");

    std::vector<RatMat> B(m, RatMat(m, m));
    for (int rho = 0; rho < m; ++rho)
        for (int mu = 0; mu < m; ++mu)
            for (int nu = 0; nu < m; ++nu) B[rho](mu, nu) = (*sol)[unknown_id(mu, nu, rho)];

    AcsProjection out;
    out.gauge_part = k_map(B, J);
    out.ker_s_part.resize(m);
    for (int rho = 0; rho < m; ++rho) out.ker_s_part[rho] = j.C[rho] - out.gauge_part[rho];

    // Reference values. N family indexed as N[nu](rho, mu) = N^rho_{mu nu}.
    std::vector<RatMat> N = nijenhuis_from_jet(j);
    out.half_jn.assign(m, RatMat(m, m));
    out.quarter_jn.assign(m, RatMat(m, m));
    const Rat quarter = Rat(1) / 4;
    for (int rho = 0; rho < m; ++rho)
        for (int mu = 0; mu < m; ++mu)
            for (int nu = 0; nu < m; ++nu) {
                Rat jn(0);
                for (int a = 0; a < m; ++a) jn += J(mu, a) * N[rho](a, nu);
                out.half_jn[rho](mu, nu) = -half * jn;
                out.quarter_jn[rho](mu, nu) = -quarter * jn;
            }

    // ¼(C(u,v) − C(v,u) + JC(u,Jv) − JC(v,Ju)) with u = e_ν, v = e_ρ; expanding
    // −¼ J·N(J) in terms of C and using J² = −1 gives exactly this expression.
    out.closed_form.assign(m, RatMat(m, m));
    const Rat quarter_c = Rat(1) / 4;
    for (int rho = 0; rho < m; ++rho)
        for (int mu = 0; mu < m; ++mu)
            for (int nu = 0; nu < m; ++nu) {
                Rat v = j.C[rho](mu, nu) - j.C[nu](mu, rho);
                for (int a = 0; a < m; ++a)
                    for (int l = 0; l < m; ++l)
                        v += J(mu, a) * j.C[l](a, nu) * J(l, rho) -
                             J(mu, a) * j.C[l](a, rho) * J(l, nu);
                out.closed_form[rho](mu, nu) = quarter_c * v;
            }

    out.a_dim = n_unknowns;
    // Rank of A restricted to the domain (the full system matrix has the
    // codomain W ⊂ all coefficient families; rank as a map S²L*⊗L → S²L*⊗L
    // equals the system matrix rank since sym(K(·)) lands in the symmetric
    // family space).
    out.a_rank = A.rank();
    return out;
}

// ---------------------------------------------------------------------------
// Superconnection-jet orbit
// ---------------------------------------------------------------------------

/// Pair of normalized vertical-automorphism 2-jets acting on the two graded
/// summands.
struct SuperAutJet {
    Jet2VertAut plus;
    Jet2VertAut minus;

    static SuperAutJet identity(int m, int np, int nm) {
        return SuperAutJet{Jet2VertAut::identity(m, np), Jet2VertAut::identity(m, nm)};
    }
};

/// Blockwise action per the graded analogue of the connection law:
/// χ_{±∓} fixed, χ_{±∓μ} → χ_{±∓μ} − φ_{±μ}χ_{±∓} + χ_{±∓}φ_{∓μ}, and each
/// connection block transforms like a connection jet.
inline Jet1Super act_on_super_jet(const SuperAutJet& aut, const Jet1Super& j) {
    aut.plus.validate();
    aut.minus.validate();
    if (aut.plus.base_dim() != j.m || aut.minus.base_dim() != j.m ||
        aut.plus.fiber_dim() != j.np || aut.minus.fiber_dim() != j.nm)
        throw argument_error("automorphism/jet shape mismatch");
    if (!(aut.plus.B0 == RatMat::identity(j.np)) ||
        !(aut.minus.B0 == RatMat::identity(j.nm)))
        throw unsupported_input_error("action implemented for identity-leading jets");
    Jet1Super out = j;
    for (int mu = 0; mu < j.m; ++mu) {
        out.dchi_pm[mu] =
            j.dchi_pm[mu] - aut.plus.B[mu] * j.chi_pm + j.chi_pm * aut.minus.B[mu];
        out.dchi_mp[mu] =
            j.dchi_mp[mu] - aut.minus.B[mu] * j.chi_mp + j.chi_mp * aut.plus.B[mu];
        out.Ap[mu] = j.Ap[mu] + aut.plus.B[mu];
        out.Am[mu] = j.Am[mu] + aut.minus.B[mu];
        for (int rho = 0; rho < j.m; ++rho) {
            out.dAp[mu][rho] = j.dAp[mu][rho] - aut.plus.B[rho] * j.Ap[mu] +
                               j.Ap[mu] * aut.plus.B[rho] -
                               aut.plus.B[rho] * aut.plus.B[mu] + aut.plus.B2[mu][rho];
            out.dAm[mu][rho] = j.dAm[mu][rho] - aut.minus.B[rho] * j.Am[mu] +
                               j.Am[mu] * aut.minus.B[rho] -
                               aut.minus.B[rho] * aut.minus.B[mu] + aut.minus.B2[mu][rho];
        }
    }
    return out;
}

struct SuperInvariant {
    RatMat chi_pm, chi_mp;
    std::vector<RatMat> nabla_chi_pm, nabla_chi_mp;    // index mu
    std::vector<std::vector<RatMat>> F_plus, F_minus;  // [mu][rho], antisymmetric

    friend bool operator==(const SuperInvariant&, const SuperInvariant&) = default;
};

struct SuperReduction {
    Jet1Super normal_form;
    SuperAutJet witness;
    SuperInvariant invariant;
};

/// Two-stage reduction exactly as in the connection case, applied blockwise:
/// φ_{±μ} = −A_{±μ} kills the connection values and produces the tilded
/// quantities (χ̃_{±∓μ} = ∇_μχ(0), Ã_{±μρ} = A_{±μρ} − A_{±μ}A_{±ρ}); a
/// symmetric φ_{±μρ} then removes sym(Ã), leaving F_{±}(0).
inline SuperReduction reduce_super_jet(const Jet1Super& j) {
    const int m = j.m;
    SuperAutJet stage1 = SuperAutJet::identity(m, j.np, j.nm);
    for (int mu = 0; mu < m; ++mu) {
        stage1.plus.B[mu] = -j.Ap[mu];
        stage1.minus.B[mu] = -j.Am[mu];
    }
    Jet1Super mid = act_on_super_jet(stage1, j);

    SuperAutJet stage2 = SuperAutJet::identity(m, j.np, j.nm);
    const Rat half = Rat(1) / 2;
    for (int mu = 0; mu < m; ++mu)
        for (int rho = 0; rho < m; ++rho) {
            stage2.plus.B2[mu][rho] = -half * (mid.dAp[mu][rho] + mid.dAp[rho][mu]);
            stage2.minus.B2[mu][rho] = -half * (mid.dAm[mu][rho] + mid.dAm[rho][mu]);
        }

    SuperReduction red;
    red.witness = SuperAutJet{vert_aut_product(stage1.plus, stage2.plus),
                              vert_aut_product(stage1.minus, stage2.minus)};
    red.normal_form = act_on_super_jet(stage2, mid);
    red.invariant.chi_pm = mid.chi_pm;
    red.invariant.chi_mp = mid.chi_mp;
    red.invariant.nabla_chi_pm = mid.dchi_pm;
    red.invariant.nabla_chi_mp = mid.dchi_mp;
    red.invariant.F_plus.assign(m, std::vector<RatMat>(m));
    red.invariant.F_minus.assign(m, std::vector<RatMat>(m));
    for (int mu = 0; mu < m; ++mu)
        for (int rho = 0; rho < m; ++rho) {
            red.invariant.F_plus[mu][rho] = mid.dAp[rho][mu] - mid.dAp[mu][rho];
            red.invariant.F_minus[mu][rho] = mid.dAm[rho][mu] - mid.dAm[mu][rho];
        }
    return red;
}

// ---------------------------------------------------------------------------
// Equivalence verdicts
// ---------------------------------------------------------------------------

struct NamedBlock {
    std::string name;
    RatMat value;
};

struct ObstructionReport {
    std::string case_tag; // connection | acs | superconnection
    std::vector<NamedBlock> invariant_a;
    std::vector<NamedBlock> invariant_b;
    std::vector<std::string> differing; // names of unequal blocks
    double sup_norm = 0.0;              // derived metadata only
    std::string verdict; // equivalent-at-order-1 | obstructed | undecided-higher-order
};

namespace detail {
inline void note_block(ObstructionReport& rep, const std::string& name, const RatMat& a,
                       const RatMat& b) {
    rep.invariant_a.push_back({name, a});
    rep.invariant_b.push_back({name, b});
    if (!(a == b)) rep.differing.push_back(name);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            double va = std::abs(to_double(a(i, j)));
            double vb = std::abs(to_double(b(i, j)));
            if (va > rep.sup_norm) rep.sup_norm = va;
            if (vb > rep.sup_norm) rep.sup_norm = vb;
        }
}

/// Is there an invertible X with X·F1_k = F2_k·X for every k? Exact over ℚ:
/// nullspace of the intertwiner equations, then a symbolic determinant of a
/// general nullspace combination.
inline std::optional<bool> simultaneously_similar(const std::vector<RatMat>& F1,
                                                  const std::vector<RatMat>& F2, int n) {
    if (n > 4) return std::nullopt; // documented desk-scale bound
    const int k = static_cast<int>(F1.size());
    RatMat sys(k * n * n, n * n);
    int eq = 0;
    for (int t = 0; t < k; ++t)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j, ++eq)
                for (int l = 0; l < n; ++l) {
                    sys(eq, i * n + l) += F1[t](l, j);
                    sys(eq, l * n + j) -= F2[t](i, l);
                }
    auto basis = sys.nullspace();
    if (basis.empty()) return false;
    const int d = static_cast<int>(basis.size());
    PolyMatrix X(n, n, d);
    for (int b = 0; b < d; ++b)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (basis[b][i * n + j] != 0)
                    X(i, j) += basis[b][i * n + j] * PolyScalar::variable(d, b);
    return !poly_det(X).is_zero();
}
} // namespace detail

/// Connection case: invariants compared up to the residual constant-GL(n)
/// conjugation left by non-normalized automorphisms.
inline ObstructionReport decide_equivalence(const Jet1Connection& j1,
                                            const Jet1Connection& j2) {
    if (j1.m != j2.m || j1.n != j2.n)
        throw argument_error("jet dimension mismatch");
    ObstructionReport rep;
    rep.case_tag = "connection";
    ConnectionReduction r1 = reduce_connection_jet(j1);
    ConnectionReduction r2 = reduce_connection_jet(j2);
    std::vector<RatMat> f1, f2;
    for (int mu = 0; mu < j1.m; ++mu)
        for (int a = mu + 1; a < j1.m; ++a) {
            detail::note_block(rep, "F_" + std::to_string(mu + 1) + std::to_string(a + 1),
                               r1.invariant[mu][a], r2.invariant[mu][a]);
            f1.push_back(r1.invariant[mu][a]);
            f2.push_back(r2.invariant[mu][a]);
        }
    if (rep.differing.empty()) {
        rep.verdict = "equivalent-at-order-1";
        return rep;
    }
    auto similar = detail::simultaneously_similar(f1, f2, j1.n);
    if (!similar)
        rep.verdict = "undecided-higher-order";
    else
        rep.verdict = *similar ? "equivalent-at-order-1" : "obstructed";
    return rep;
}

/// Witness for the completeness property: a normalized 2-jet h with
/// act(h, j1) = j2 whenever the reduced invariants agree exactly.
inline std::optional<Jet2VertAut> connection_equivalence_witness(const Jet1Connection& j1,
                                                                 const Jet1Connection& j2) {
    ConnectionReduction r1 = reduce_connection_jet(j1);
    ConnectionReduction r2 = reduce_connection_jet(j2);
    if (!(r1.normal_form == r2.normal_form)) return std::nullopt;
    return vert_aut_product(r1.witness, vert_aut_inverse(r2.witness));
}

inline ObstructionReport decide_equivalence(const Jet1ACS& j1, const Jet1ACS& j2) {
    if (j1.dim() != j2.dim()) throw argument_error("jet dimension mismatch");
    ObstructionReport rep;
    rep.case_tag = "acs";
    detail::note_block(rep, "J", j1.J, j2.J);
    if (!rep.differing.empty()) {
        // Normalized diffeomorphism jets fix J; different J means the jets
        // are outside the scope of the order-1 comparison.
        rep.verdict = "obstructed";
        return rep;
    }
    AcsProjection p1 = acs_projection(j1);
    AcsProjection p2 = acs_projection(j2);
    for (int rho = 0; rho < j1.dim(); ++rho)
        detail::note_block(rep, "kerS_C_" + std::to_string(rho + 1), p1.ker_s_part[rho],
                           p2.ker_s_part[rho]);
    rep.verdict = rep.differing.empty() ? "equivalent-at-order-1" : "obstructed";
    return rep;
}

inline ObstructionReport decide_equivalence(const Jet1Super& j1, const Jet1Super& j2) {
    if (j1.m != j2.m || j1.np != j2.np || j1.nm != j2.nm)
        throw argument_error("jet dimension mismatch");
    ObstructionReport rep;
    rep.case_tag = "superconnection";
    SuperReduction r1 = reduce_super_jet(j1);
    SuperReduction r2 = reduce_super_jet(j2);
    detail::note_block(rep, "chi_pm", r1.invariant.chi_pm, r2.invariant.chi_pm);
    detail::note_block(rep, "chi_mp", r1.invariant.chi_mp, r2.invariant.chi_mp);
    for (int mu = 0; mu < j1.m; ++mu) {
        detail::note_block(rep, "nabla_chi_pm_" + std::to_string(mu + 1),
                           r1.invariant.nabla_chi_pm[mu], r2.invariant.nabla_chi_pm[mu]);
        detail::note_block(rep, "nabla_chi_mp_" + std::to_string(mu + 1),
                           r1.invariant.nabla_chi_mp[mu], r2.invariant.nabla_chi_mp[mu]);
    }
    for (int mu = 0; mu < j1.m; ++mu)
        for (int rho = mu + 1; rho < j1.m; ++rho) {
            detail::note_block(rep, "Fplus_" + std::to_string(mu + 1) + std::to_string(rho + 1),
                               r1.invariant.F_plus[mu][rho], r2.invariant.F_plus[mu][rho]);
            detail::note_block(rep,
                               "Fminus_" + std::to_string(mu + 1) + std::to_string(rho + 1),
                               r1.invariant.F_minus[mu][rho], r2.invariant.F_minus[mu][rho]);
        }
    rep.verdict = rep.differing.empty() ? "equivalent-at-order-1" : "obstructed";
    return rep;
}

} // namespace curvlab
