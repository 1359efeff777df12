#pragma once

#include <string>
#include <vector>

#include "curvlab/curvature.hpp"
#include "curvlab/polymat.hpp"
#include "curvlab/ratmat.hpp"

namespace curvlab {

/// 1-jet of a connection at a point: A[mu] = value, dA[mu][alpha] = ∂_α A_μ.
struct Jet1Connection {
    int m = 0;
    int n = 0;
    std::vector<RatMat> A;
    std::vector<std::vector<RatMat>> dA;

    static Jet1Connection zero(int m, int n) {
        Jet1Connection j;
        j.m = m;
        j.n = n;
        j.A.assign(m, RatMat(n, n));
        j.dA.assign(m, std::vector<RatMat>(m, RatMat(n, n)));
        return j;
    }

    friend bool operator==(const Jet1Connection&, const Jet1Connection&) = default;
};

/// 2-jet of a vertical automorphism: B0 + B_α x^α + ½ B_{αβ} x^α x^β,
/// B2 symmetric in its two base indices.
struct Jet2VertAut {
    RatMat B0;
    std::vector<RatMat> B;
    std::vector<std::vector<RatMat>> B2;

    static Jet2VertAut identity(int m, int n) {
        Jet2VertAut a;
        a.B0 = RatMat::identity(n);
        a.B.assign(m, RatMat(n, n));
        a.B2.assign(m, std::vector<RatMat>(m, RatMat(n, n)));
        return a;
    }

    int base_dim() const { return static_cast<int>(B.size()); }
    int fiber_dim() const { return B0.rows(); }

    void validate() const {
        if (B0.det() == 0) throw argument_error("vertical automorphism jet: singular B0");
        const int m = base_dim();
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < a; ++b)
                if (!(B2[a][b] == B2[b][a]))
                    throw argument_error("vertical automorphism jet: B2 not symmetric");
    }

    friend bool operator==(const Jet2VertAut&, const Jet2VertAut&) = default;
};

/// 1-jet of an almost complex structure: J constant, C[rho](mu,nu) = ∂_ρ J^μ_ν(0).
struct Jet1ACS {
    RatMat J;
    std::vector<RatMat> C;

    int dim() const { return J.rows(); }

    /// Enforces J² = −1 and its first-derivative consequence JC_ρ + C_ρJ = 0.
    void validate() const {
        const int m = dim();
        RatMat sq = J * J + RatMat::identity(m);
        if (!sq.is_zero()) throw invalid_section_error("ACS jet: J^2 != -1");
        for (int rho = 0; rho < m; ++rho) {
            RatMat anti = J * C[rho] + C[rho] * J;
            if (!anti.is_zero())
                throw invalid_section_error("ACS jet: J C_" + std::to_string(rho + 1) +
                                            " + C_" + std::to_string(rho + 1) +
                                            " J != 0");
        }
    }

    friend bool operator==(const Jet1ACS&, const Jet1ACS&) = default;
};

/// 2-jet of a diffeomorphism fixing the origin: B^μ_α x^α + ½ B^μ_{αβ} x^α x^β.
/// B2[rho](mu, nu) = B^μ_{νρ}, symmetric in the two lower indices.
struct Jet2Diffeo {
    RatMat B;
    std::vector<RatMat> B2;

    int dim() const { return B.rows(); }

    void validate() const {
        if (B.det() == 0) throw argument_error("diffeomorphism jet: singular linear part");
        const int m = dim();
        for (int rho = 0; rho < m; ++rho)
            for (int mu = 0; mu < m; ++mu)
                for (int nu = 0; nu < m; ++nu)
                    if (B2[rho](mu, nu) != B2[nu](mu, rho))
                        throw argument_error("diffeomorphism jet: B2 not symmetric");
    }

    static Jet2Diffeo identity(int m) {
        Jet2Diffeo d;
        d.B = RatMat::identity(m);
        d.B2.assign(m, RatMat(m, m));
        return d;
    }

    friend bool operator==(const Jet2Diffeo&, const Jet2Diffeo&) = default;
};

/// 1-jet of a superconnection: odd blocks chi with first derivatives, even
/// connection blocks with first derivatives.
struct Jet1Super {
    int m = 0;
    int np = 0;
    int nm = 0;
    RatMat chi_pm, chi_mp;
    std::vector<RatMat> dchi_pm, dchi_mp;          // index: rho
    std::vector<RatMat> Ap, Am;                    // index: mu
    std::vector<std::vector<RatMat>> dAp, dAm;     // index: mu, rho

    static Jet1Super zero(int m, int np, int nm) {
        Jet1Super j;
        j.m = m;
        j.np = np;
        j.nm = nm;
        j.chi_pm = RatMat(np, nm);
        j.chi_mp = RatMat(nm, np);
        j.dchi_pm.assign(m, RatMat(np, nm));
        j.dchi_mp.assign(m, RatMat(nm, np));
        j.Ap.assign(m, RatMat(np, np));
        j.Am.assign(m, RatMat(nm, nm));
        j.dAp.assign(m, std::vector<RatMat>(m, RatMat(np, np)));
        j.dAm.assign(m, std::vector<RatMat>(m, RatMat(nm, nm)));
        return j;
    }

    friend bool operator==(const Jet1Super&, const Jet1Super&) = default;
};

/// Jet lifting of a polynomial connection at a point.
inline Jet1Connection prolong_connection(const ConnectionField& A,
                                         const std::vector<Rat>& point) {
    check_connection(A);
    const int m = static_cast<int>(A.size());
    const int n = A[0].rows();
    if (int(point.size()) != m) throw argument_error("point dimension mismatch");
    Jet1Connection j = Jet1Connection::zero(m, n);
    for (int mu = 0; mu < m; ++mu) {
        j.A[mu] = A[mu].eval(point);
        for (int a = 0; a < m; ++a) j.dA[mu][a] = A[mu].partial(a).eval(point);
    }
    return j;
}

/// Jet lifting of an almost complex structure (validates J² = −1 as
/// polynomials; reports a violating component otherwise).
inline Jet1ACS prolong_acs(const PolyMatrix& J, const std::vector<Rat>& point) {
    check_acs(J);
    const int m = J.rows();
    if (int(point.size()) != m) throw argument_error("point dimension mismatch");
    Jet1ACS j;
    j.J = J.eval(point);
    j.C.resize(m);
    for (int rho = 0; rho < m; ++rho) j.C[rho] = J.partial(rho).eval(point);
    return j;
}

} // namespace curvlab
