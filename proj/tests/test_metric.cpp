#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvlab/gen.hpp"
#include "curvlab/metric.hpp"

using namespace curvlab;

namespace {
MetricField polar_like() {
    // diag(1, (1+x1)^2) on m=2: flat, curvilinear coordinates.
    PolyMatrix g(2, 2, 2);
    g(0, 0) = PolyScalar::constant(2, Rat(1));
    PolyScalar u = PolyScalar::constant(2, Rat(1)) + PolyScalar::variable(2, 0);
    g(1, 1) = u * u;
    return MetricField(std::move(g));
}
} // namespace

TEST_CASE("flat metric has zero curvature, polynomial pipeline") {
    CurvaturePack pack = metric_curvature(MetricField::flat(3));
    pack.riemann.for_each_index(
        [&](std::span<const int> idx) { CHECK(pack.riemann.at(idx).is_zero()); });
    CHECK(pack.scalar.is_zero());
}

TEST_CASE("polar-like metric is flat despite nonconstant coefficients") {
    MetricField g = polar_like();
    CHECK_FALSE(g.has_polynomial_inverse()); // det = (1+x1)^2, not constant
    gen::Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        std::vector<Rat> x = gen::random_point(rng, 2);
        if (x[0] == -1) x[0] = Rat(1, 7); // stay off the coordinate singularity
        PointCurvature pc = metric_curvature_at(g, x);
        for (const Rat& v : pc.riemann) CHECK(v == 0);
        CHECK(pc.scalar == 0);
    }
}

TEST_CASE("pointwise curvature symmetries and first Bianchi") {
    gen::Rng rng(5);
    const int m = 3;
    MetricField g(gen::random_metric_matrix(rng, m, 2));
    std::vector<Rat> x = gen::random_point(rng, m);
    PointCurvature pc = metric_curvature_at(g, x);
    for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s)
            for (int mu = 0; mu < m; ++mu)
                for (int nu = 0; nu < m; ++nu) {
                    CHECK(pc.low(r, s, mu, nu) == -pc.low(r, s, nu, mu));
                    CHECK(pc.low(r, s, mu, nu) == -pc.low(s, r, mu, nu));
                    CHECK(pc.low(r, s, mu, nu) == pc.low(mu, nu, r, s));
                    CHECK(pc.low(r, s, mu, nu) + pc.low(r, mu, nu, s) +
                              pc.low(r, nu, s, mu) ==
                          0);
                }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) CHECK(pc.ricci(i, j) == pc.ricci(j, i));
}

TEST_CASE("round sphere-like value: scalar curvature of a warped 2-metric") {
    // g = diag(1, (1 - x1^2)) degenerates at x1 = 1 but is fine at x1 = 0:
    // this is the round 2-sphere in geodesic-normal-like coordinates up to
    // higher order; at the origin the scalar curvature is 2/(radius^2) scaled
    // by the quadratic coefficient. Here we pin an exact rational value.
    PolyMatrix g(2, 2, 2);
    g(0, 0) = PolyScalar::constant(2, Rat(1));
    g(1, 1) = PolyScalar::constant(2, Rat(1)) -
              PolyScalar::variable(2, 0) * PolyScalar::variable(2, 0);
    MetricField gf(std::move(g));
    PointCurvature pc = metric_curvature_at(gf, {Rat(0), Rat(0)});
    CHECK(pc.scalar == Rat(2));
    // Away from the origin the curvature grows: 2/(1-x1^2)^2 = 32/9 at x1 = 1/2.
    CHECK(metric_curvature_at(gf, {Rat(1, 2), Rat(0)}).scalar == Rat(32, 9));
}

TEST_CASE("degenerate metric is rejected with the dedicated error") {
    PolyMatrix g(2, 2, 2);
    g(0, 0) = PolyScalar::variable(2, 0); // vanishes at x1 = 0
    g(1, 1) = PolyScalar::constant(2, Rat(1));
    MetricField gf(std::move(g));
    CHECK_THROWS_AS(metric_curvature_at(gf, {Rat(0), Rat(0)}), degenerate_metric_error);
    CHECK(metric_curvature_at(gf, {Rat(1), Rat(0)}).m == 2); // fine away from the locus
}

TEST_CASE("metric constructor rejects asymmetric input") {
    PolyMatrix g(2, 2, 2);
    g(0, 1) = PolyScalar::constant(2, Rat(1));
    CHECK_THROWS_AS(MetricField(std::move(g)), invalid_section_error);
}

TEST_CASE("Weyl tensor vanishes identically in dimension 3") {
    gen::Rng rng(9);
    MetricField g(gen::random_metric_matrix(rng, 3, 2));
    WeylValue w = weyl_at(g, gen::random_point(rng, 3));
    for (const Rat& v : w.low) CHECK(v == 0);
}

TEST_CASE("Weyl tensor vanishes for a conformally flat 4-metric") {
    PolyScalar u = PolyScalar::constant(4, Rat(1)) + PolyScalar::variable(4, 0);
    PolyMatrix g(4, 4, 4);
    for (int i = 0; i < 4; ++i) g(i, i) = u * u;
    MetricField gf(std::move(g));
    gen::Rng rng(15);
    WeylValue w = weyl_at(gf, gen::random_point(rng, 4));
    CHECK(w.is_zero());
}

TEST_CASE("Weyl (1,3) part is invariant under a conformal rescaling") {
    gen::Rng rng(21);
    const int m = 4;
    PolyMatrix g0 = gen::random_metric_matrix(rng, m, 2);
    PolyScalar u = PolyScalar::constant(m, Rat(1)) +
                   Rat(1, 2) * PolyScalar::variable(m, 0);
    PolyMatrix g1(m, m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g1(i, j) = u * u * g0(i, j);
    std::vector<Rat> x = gen::random_point(rng, m);
    WeylValue w0 = weyl_at(MetricField(std::move(g0)), x);
    WeylValue w1 = weyl_at(MetricField(std::move(g1)), x);
    CHECK(w0.up == w1.up);
}

TEST_CASE("Weyl is totally trace-free") {
    gen::Rng rng(23);
    const int m = 4;
    MetricField g(gen::random_metric_matrix(rng, m, 2));
    std::vector<Rat> x = gen::random_point(rng, m);
    WeylValue w = weyl_at(g, x);
    for (int s = 0; s < m; ++s)
        for (int nu = 0; nu < m; ++nu) {
            Rat tr(0);
            for (int r = 0; r < m; ++r) tr += w.w_up(r, s, r, nu);
            CHECK(tr == 0);
        }
}
