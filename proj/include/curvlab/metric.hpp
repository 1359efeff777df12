#pragma once

#include <optional>
#include <vector>

#include "curvlab/curvature.hpp"
#include "curvlab/polymat.hpp"
#include "curvlab/tensor.hpp"

namespace curvlab {

inline PolyScalar poly_det(const PolyMatrix& g) {
    const int n = g.rows();
    if (n != g.cols()) throw argument_error("determinant needs a square matrix");
    if (n == 1) return g(0, 0);
    // Laplace expansion along the first row; fine at desk scale.
    PolyScalar d(g.num_vars());
    for (int j = 0; j < n; ++j) {
        if (g(0, j).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1, g.num_vars());
        for (int r = 1; r < n; ++r)
            for (int c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = g(r, c);
            }
        PolyScalar term = g(0, j) * poly_det(minor);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

inline PolyMatrix poly_adjugate(const PolyMatrix& g) {
    const int n = g.rows();
    PolyMatrix adj(n, n, g.num_vars());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            PolyMatrix minor(n - 1, n - 1, g.num_vars());
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(rr, cc++) = g(r, c);
                }
                ++rr;
            }
            PolyScalar cof = (n == 1) ? PolyScalar::constant(g.num_vars(), Rat(1))
                                      : poly_det(minor);
            adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return adj;
}

class MetricField {
public:
    explicit MetricField(PolyMatrix g) : g_(std::move(g)) {
        const int m = g_.rows();
        if (g_.cols() != m || g_.num_vars() != m)
            throw argument_error("metric must be m x m over m variables");
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < i; ++j)
                if (!(g_(i, j) == g_(j, i)))
                    throw invalid_section_error("metric is not symmetric");
        PolyScalar det = poly_det(g_);
        if (det.is_constant()) {
            const Rat d = det.constant_term();
            if (d == 0) throw degenerate_metric_error("metric has identically zero determinant");
            inverse_ = Rat(1) / d * poly_adjugate(g_);
        }
    }

    static MetricField flat(int m) { return MetricField(PolyMatrix::identity(m, m)); }

    int dim() const { return g_.rows(); }
    const PolyMatrix& g() const { return g_; }
    bool has_polynomial_inverse() const { return inverse_.has_value(); }
    const PolyMatrix& inverse() const {
        if (!inverse_)
            throw unsupported_input_error(
                "metric inverse is not polynomial (det g not a nonzero constant); "
                "use the pointwise pipeline");
        return *inverse_;
    }

    /// Exact rational inverse at a point; throws on degeneracy there.
    RatMat inverse_at(const std::vector<Rat>& point) const {
        RatMat gx = g_.eval(point);
        if (gx.det() == 0) throw degenerate_metric_error("metric degenerate at requested point");
        return gx.inverse();
    }

private:
    PolyMatrix g_;
    std::optional<PolyMatrix> inverse_;
};

struct CurvaturePack {
    TensorPolyField riemann; // R^rho_{sigma mu nu}
    TensorPolyField ricci;   // Ric_{sigma nu} = R^mu_{sigma mu nu}
    PolyScalar scalar;       // r = g^{sigma nu} Ric_{sigma nu}
};

namespace detail {
/// Christoffel symbols as polynomials times a polynomial inverse metric.
inline std::vector<PolyMatrix> christoffel(const PolyMatrix& g, const PolyMatrix& ginv) {
    const int m = g.rows();
    // Gamma[rho](mu, nu) = Gamma^rho_{mu nu}
    std::vector<PolyMatrix> Gamma(m, PolyMatrix(m, m, m));
    const Rat half = Rat(1) / 2;
    for (int rho = 0; rho < m; ++rho)
        for (int mu = 0; mu < m; ++mu)
            for (int nu = 0; nu < m; ++nu) {
                PolyScalar sum(m);
                for (int lam = 0; lam < m; ++lam)
                    sum += ginv(rho, lam) * (g(nu, lam).partial(mu) + g(mu, lam).partial(nu) -
                                             g(mu, nu).partial(lam));
                Gamma[rho](mu, nu) = half * sum;
            }
    return Gamma;
}
} // namespace detail

/// Exact polynomial pipeline; requires det g to be a nonzero constant.
inline CurvaturePack metric_curvature(const MetricField& g) {
    const int m = g.dim();
    const auto Gamma = detail::christoffel(g.g(), g.inverse());
    TensorPolyField R = TensorPolyField::build(
        m,
        {{SlotKind::BaseContra, m}, {SlotKind::BaseCo, m}, {SlotKind::BaseCo, m},
         {SlotKind::BaseCo, m}},
        [&](std::span<const int> idx) {
            const int rho = idx[0], sig = idx[1], mu = idx[2], nu = idx[3];
            PolyScalar sum =
                Gamma[rho](nu, sig).partial(mu) - Gamma[rho](mu, sig).partial(nu);
            for (int lam = 0; lam < m; ++lam)
                sum += Gamma[rho](mu, lam) * Gamma[lam](nu, sig) -
                       Gamma[rho](nu, lam) * Gamma[lam](mu, sig);
            return sum;
        });
    TensorPolyField Ric = TensorPolyField::build(
        m, {{SlotKind::BaseCo, m}, {SlotKind::BaseCo, m}}, [&](std::span<const int> idx) {
            PolyScalar sum(m);
            for (int mu = 0; mu < m; ++mu) sum += R.at({mu, idx[0], mu, idx[1]});
            return sum;
        });
    PolyScalar r(m);
    for (int s = 0; s < m; ++s)
        for (int n = 0; n < m; ++n) r += g.inverse()(s, n) * Ric.at({s, n});
    return CurvaturePack{std::move(R), std::move(Ric), std::move(r)};
}

/// Curvature data evaluated exactly at one rational point; works for any
/// nondegenerate-at-the-point polynomial metric.
struct PointCurvature {
    int m = 0;
    std::vector<Rat> riemann;     // R^rho_{sigma mu nu}, dense m^4
    std::vector<Rat> riemann_low; // R_{rho sigma mu nu}
    RatMat ricci;
    Rat scalar;
    RatMat ginv;

    Rat& up(int r, int s, int mu, int nu) {
        return riemann[size_t(((r * m + s) * m + mu) * m + nu)];
    }
    const Rat& up(int r, int s, int mu, int nu) const {
        return riemann[size_t(((r * m + s) * m + mu) * m + nu)];
    }
    Rat& low(int r, int s, int mu, int nu) {
        return riemann_low[size_t(((r * m + s) * m + mu) * m + nu)];
    }
    const Rat& low(int r, int s, int mu, int nu) const {
        return riemann_low[size_t(((r * m + s) * m + mu) * m + nu)];
    }
};

inline PointCurvature metric_curvature_at(const MetricField& gf, const std::vector<Rat>& x0) {
    const int m = gf.dim();
    const PolyMatrix& g = gf.g();
    RatMat gx = g.eval(x0);
    if (gx.det() == 0) throw degenerate_metric_error("metric degenerate at requested point");
    RatMat ginv = gx.inverse();

    // dg[a] = (d_a g)(x0); ddg[a][b] = (d_a d_b g)(x0); dginv from the
    // inverse-derivative identity d(g^{-1}) = -g^{-1} (dg) g^{-1}.
    std::vector<RatMat> dg(m);
    std::vector<std::vector<RatMat>> ddg(m, std::vector<RatMat>(m));
    for (int a = 0; a < m; ++a) {
        PolyMatrix da = g.partial(a);
        dg[a] = da.eval(x0);
        for (int b = 0; b < m; ++b) ddg[a][b] = da.partial(b).eval(x0);
    }
    std::vector<RatMat> dginv(m);
    for (int a = 0; a < m; ++a) dginv[a] = -(ginv * dg[a] * ginv);

    const Rat half = Rat(1) / 2;
    auto gamma_of = [&](const RatMat& gi, const std::vector<RatMat>& dgm, int rho, int mu,
                        int nu) {
        Rat sum(0);
        for (int lam = 0; lam < m; ++lam)
            sum += gi(rho, lam) * (dgm[mu](nu, lam) + dgm[nu](mu, lam) - dgm[lam](mu, nu));
        return half * sum;
    };
    // Gamma and its first derivatives at x0.
    std::vector<std::vector<std::vector<Rat>>> Gam(
        m, std::vector<std::vector<Rat>>(m, std::vector<Rat>(m)));
    std::vector<std::vector<std::vector<std::vector<Rat>>>> dGam(
        m, std::vector<std::vector<std::vector<Rat>>>(
               m, std::vector<std::vector<Rat>>(m, std::vector<Rat>(m))));
    for (int rho = 0; rho < m; ++rho)
        for (int mu = 0; mu < m; ++mu)
            for (int nu = 0; nu < m; ++nu) {
                Gam[rho][mu][nu] = gamma_of(ginv, dg, rho, mu, nu);
                for (int a = 0; a < m; ++a) {
                    Rat s(0);
                    for (int lam = 0; lam < m; ++lam)
                        s += dginv[a](rho, lam) *
                                 (dg[mu](nu, lam) + dg[nu](mu, lam) - dg[lam](mu, nu)) +
                             ginv(rho, lam) * (ddg[mu][a](nu, lam) + ddg[nu][a](mu, lam) -
                                               ddg[lam][a](mu, nu));
                    dGam[a][rho][mu][nu] = half * s;
                }
            }

    PointCurvature out;
    out.m = m;
    out.riemann.assign(size_t(m) * m * m * m, Rat(0));
    out.riemann_low.assign(size_t(m) * m * m * m, Rat(0));
    out.ricci = RatMat(m, m);
    out.ginv = ginv;
    for (int rho = 0; rho < m; ++rho)
        for (int sig = 0; sig < m; ++sig)
            for (int mu = 0; mu < m; ++mu)
                for (int nu = 0; nu < m; ++nu) {
                    Rat sum = dGam[mu][rho][nu][sig] - dGam[nu][rho][mu][sig];
                    for (int lam = 0; lam < m; ++lam)
                        sum += Gam[rho][mu][lam] * Gam[lam][nu][sig] -
                               Gam[rho][nu][lam] * Gam[lam][mu][sig];
                    out.up(rho, sig, mu, nu) = sum;
                }
    for (int rho = 0; rho < m; ++rho)
        for (int sig = 0; sig < m; ++sig)
            for (int mu = 0; mu < m; ++mu)
                for (int nu = 0; nu < m; ++nu) {
                    Rat sum(0);
                    for (int lam = 0; lam < m; ++lam)
                        sum += gx(rho, lam) * out.up(lam, sig, mu, nu);
                    out.low(rho, sig, mu, nu) = sum;
                }
    for (int sig = 0; sig < m; ++sig)
        for (int nu = 0; nu < m; ++nu) {
            Rat sum(0);
            for (int mu = 0; mu < m; ++mu) sum += out.up(mu, sig, mu, nu);
            out.ricci(sig, nu) = sum;
        }
    Rat r(0);
    for (int s = 0; s < m; ++s)
        for (int n = 0; n < m; ++n) r += ginv(s, n) * out.ricci(s, n);
    out.scalar = r;
    return out;
}

struct WeylValue {
    int m = 0;
    std::vector<Rat> low; // W_{rho sigma mu nu}
    std::vector<Rat> up;  // W^rho_{sigma mu nu}
    Rat& w_low(int r, int s, int mu, int nu) {
        return low[size_t(((r * m + s) * m + mu) * m + nu)];
    }
    const Rat& w_low(int r, int s, int mu, int nu) const {
        return low[size_t(((r * m + s) * m + mu) * m + nu)];
    }
    Rat& w_up(int r, int s, int mu, int nu) {
        return up[size_t(((r * m + s) * m + mu) * m + nu)];
    }
    const Rat& w_up(int r, int s, int mu, int nu) const {
        return up[size_t(((r * m + s) * m + mu) * m + nu)];
    }
    bool is_zero() const {
        for (const Rat& v : low)
            if (v != 0) return false;
        return true;
    }
};

/// W = R − 1/(m−2) (Ric − r/(2(m−1)) g) ∧ g with the Kulkarni–Nomizu product
/// (h∧k)_{ρσμν} = h_{ρμ}k_{σν} + h_{σν}k_{ρμ} − h_{ρν}k_{σμ} − h_{σμ}k_{ρν}.
inline WeylValue weyl_at(const MetricField& gf, const std::vector<Rat>& x0) {
    const int m = gf.dim();
    if (m <= 2) throw argument_error("Weyl tensor needs m >= 3");
    PointCurvature pc = metric_curvature_at(gf, x0);
    RatMat gx = gf.g().eval(x0);
    RatMat S = pc.ricci - (pc.scalar / Rat(2 * (m - 1))) * gx; // Schouten-type trace shift
    const Rat c = Rat(1) / Rat(m - 2);
    WeylValue w;
    w.m = m;
    w.low.assign(size_t(m) * m * m * m, Rat(0));
    w.up.assign(size_t(m) * m * m * m, Rat(0));
    for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s)
            for (int mu = 0; mu < m; ++mu)
                for (int nu = 0; nu < m; ++nu) {
                    Rat kn = S(r, mu) * gx(s, nu) + S(s, nu) * gx(r, mu) -
                             S(r, nu) * gx(s, mu) - S(s, mu) * gx(r, nu);
                    w.w_low(r, s, mu, nu) = pc.low(r, s, mu, nu) - c * kn;
                }
    for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s)
            for (int mu = 0; mu < m; ++mu)
                for (int nu = 0; nu < m; ++nu) {
                    Rat sum(0);
                    for (int lam = 0; lam < m; ++lam)
                        sum += pc.ginv(r, lam) * w.w_low(lam, s, mu, nu);
                    w.w_up(r, s, mu, nu) = sum;
                }
    return w;
}

/// Polynomial Weyl for metrics with polynomial inverse; same formula with
/// PolyScalar entries.
struct WeylField {
    TensorPolyField low;
    TensorPolyField up;
};

inline WeylField weyl(const MetricField& gf) {
    const int m = gf.dim();
    if (m <= 2) throw argument_error("Weyl tensor needs m >= 3");
    CurvaturePack pack = metric_curvature(gf);
    const PolyMatrix& g = gf.g();
    const PolyMatrix& ginv = gf.inverse();
    // Lowered Riemann.
    std::vector<Slot> s4(4, Slot{SlotKind::BaseCo, m});
    TensorPolyField Rlow = TensorPolyField::build(m, s4, [&](std::span<const int> idx) {
        PolyScalar sum(m);
        for (int lam = 0; lam < m; ++lam)
            sum += g(idx[0], lam) * pack.riemann.at({lam, idx[1], idx[2], idx[3]});
        return sum;
    });
    const Rat c = Rat(1) / Rat(m - 2);
    const Rat sc = Rat(1) / Rat(2 * (m - 1));
    PolyMatrix S(m, m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            S(i, j) = pack.ricci.at({i, j}) - sc * (pack.scalar * g(i, j));
    WeylField w;
    w.low = TensorPolyField::build(m, s4, [&](std::span<const int> idx) {
        const int r = idx[0], si = idx[1], mu = idx[2], nu = idx[3];
        PolyScalar kn = S(r, mu) * g(si, nu) + S(si, nu) * g(r, mu) - S(r, nu) * g(si, mu) -
                        S(si, mu) * g(r, nu);
        return Rlow.at(idx) - c * kn;
    });
    std::vector<Slot> s13 = {{SlotKind::BaseContra, m},
                             {SlotKind::BaseCo, m},
                             {SlotKind::BaseCo, m},
                             {SlotKind::BaseCo, m}};
    w.up = TensorPolyField::build(m, s13, [&](std::span<const int> idx) {
        PolyScalar sum(m);
        for (int lam = 0; lam < m; ++lam)
            sum += ginv(idx[0], lam) * w.low.at({lam, idx[1], idx[2], idx[3]});
        return sum;
    });
    return w;
}

} // namespace curvlab
