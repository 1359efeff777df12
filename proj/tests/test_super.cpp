#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvlab/gen.hpp"
#include "curvlab/supergeometry.hpp"

using namespace curvlab;

TEST_CASE("distinguishing instance: Quillen flat but obstruction nonzero") {
    const int m = 2;
    SuperconnectionField s = SuperconnectionField::zero({m, 1, 1});
    s.chi_pm(0, 0) = PolyScalar::constant(m, Rat(3));

    SuperCurvatureValue q = quillen_supercurvature(s);
    CHECK(q.deg0_parity == Parity::Even);
    CHECK(q.is_zero()); // chi^2 = chi_pm chi_mp = 0 both ways, nabla chi = 0, F = 0

    SuperCurvatureValue o = obstruction_supercurvature(s);
    CHECK(o.deg0_parity == Parity::Odd);
    CHECK_FALSE(o.is_zero());
    CHECK(o.deg0_first(0, 0) == PolyScalar::constant(m, Rat(3)));
    CHECK(o.deg0_second.is_zero());
}

TEST_CASE("degree-1 block is the covariant derivative of chi") {
    gen::Rng rng(43);
    const int m = 2, np = 2, nm = 2;
    SuperconnectionField s = gen::random_superconnection(rng, m, np, nm, 2);
    SuperCurvatureValue o = obstruction_supercurvature(s);
    for (int mu = 0; mu < m; ++mu) {
        PolyMatrix expect = s.chi_pm.partial(mu) + s.A_plus[mu] * s.chi_pm -
                            s.chi_pm * s.A_minus[mu];
        CHECK(o.deg1_pm[mu] == expect);
        PolyMatrix expect_m = s.chi_mp.partial(mu) + s.A_minus[mu] * s.chi_mp -
                              s.chi_mp * s.A_plus[mu];
        CHECK(o.deg1_mp[mu] == expect_m);
    }
}

TEST_CASE("degree-2 blocks are the diagonal curvatures") {
    gen::Rng rng(47);
    SuperconnectionField s = gen::random_superconnection(rng, 2, 2, 1, 2);
    SuperCurvatureValue o = obstruction_supercurvature(s);
    CHECK(o.deg2_plus == yang_mills_curvature(s.A_plus));
    CHECK(o.deg2_minus == yang_mills_curvature(s.A_minus));
}

TEST_CASE("Quillen degree-0 block is chi squared") {
    gen::Rng rng(53);
    SuperconnectionField s = gen::random_superconnection(rng, 2, 2, 2, 2);
    SuperCurvatureValue q = quillen_supercurvature(s);
    CHECK(q.deg0_first == s.chi_pm * s.chi_mp);
    CHECK(q.deg0_second == s.chi_mp * s.chi_pm);
}

TEST_CASE("gauge action: chi conjugates, connections transform affinely") {
    gen::Rng rng(59);
    const int m = 2, np = 2, nm = 2;
    SuperconnectionField s = gen::random_superconnection(rng, m, np, nm, 2);
    PolyMatrix pp = gen::random_unipotent(rng, np, m, 2);
    PolyMatrix pm = gen::random_unipotent(rng, nm, m, 2);
    SuperconnectionField t = super_gauge_transform(pp, pm, s);
    t.validate();
    CHECK(t.chi_pm == pp.unipotent_inverse() * s.chi_pm * pm);
    CHECK(t.chi_mp == pm.unipotent_inverse() * s.chi_mp * pp);

    // The whole obstruction supercurvature is gauge-covariant block by block.
    SuperCurvatureValue o = obstruction_supercurvature(s);
    SuperCurvatureValue ot = obstruction_supercurvature(t);
    PolyMatrix ipp = pp.unipotent_inverse(), ipm = pm.unipotent_inverse();
    for (int mu = 0; mu < m; ++mu)
        CHECK(ot.deg1_pm[mu] == ipp * o.deg1_pm[mu] * pm);
    for (int mu = 0; mu < m; ++mu)
        for (int nu = 0; nu < m; ++nu)
            CHECK(ot.deg2_plus.at({mu, nu}) == ipp * o.deg2_plus.at({mu, nu}) * pp);
}

TEST_CASE("apply_superconnection is an odd operator plus a connection term") {
    const int m = 2;
    SuperconnectionField s = SuperconnectionField::zero({m, 1, 1});
    s.chi_pm(0, 0) = PolyScalar::constant(m, Rat(2));
    GradedSection psi{PolyMatrix(1, 1, m), PolyMatrix(1, 1, m)};
    psi.minus(0, 0) = PolyScalar::variable(m, 0);
    SuperconnectionImage img = apply_superconnection(s, psi);
    CHECK(img.deg0.plus(0, 0) == Rat(2) * PolyScalar::variable(m, 0)); // chi_pm psi_minus
    CHECK(img.deg1[0].minus(0, 0) == PolyScalar::constant(m, Rat(1))); // d/dx1 psi_minus
    CHECK(img.deg1[1].minus(0, 0).is_zero());
}

TEST_CASE("shape validation rejects mismatched blocks") {
    SuperconnectionField s = SuperconnectionField::zero({2, 2, 1});
    s.chi_pm = PolyMatrix(1, 1, 2); // wrong shape
    CHECK_THROWS_AS(s.validate(), argument_error);
}
