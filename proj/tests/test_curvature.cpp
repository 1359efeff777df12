#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvlab/curvature.hpp"
#include "curvlab/gen.hpp"

using namespace curvlab;

TEST_CASE("exterior derivative of a function is its gradient") {
    // f = x1^2 x2 on m=2: df = (2 x1 x2, x1^2).
    PolyScalar f = PolyScalar::variable(2, 0) * PolyScalar::variable(2, 0) *
                   PolyScalar::variable(2, 1);
    TensorPolyField omega(2, {});
    omega.at({}) = f;
    TensorPolyField d = exterior_derivative(omega);
    CHECK(d.at({0}) == f.partial(0));
    CHECK(d.at({1}) == f.partial(1));
}

TEST_CASE("d of d vanishes on a random 1-form") {
    gen::Rng rng(7);
    const int m = 3;
    TensorPolyField omega(m, {Slot{SlotKind::BaseCo, m}});
    for (int mu = 0; mu < m; ++mu) omega.at({mu}) = gen::random_poly(rng, m, 3);
    TensorPolyField dd = exterior_derivative(exterior_derivative(omega));
    dd.for_each_index([&](std::span<const int> idx) { CHECK(dd.at(idx).is_zero()); });
}

TEST_CASE("exterior derivative rejects a non-antisymmetric 2-form") {
    TensorPolyField bad(2, {Slot{SlotKind::BaseCo, 2}, Slot{SlotKind::BaseCo, 2}});
    bad.at({0, 1}) = PolyScalar::constant(2, Rat(1));
    CHECK_THROWS_AS(exterior_derivative(bad), invalid_section_error);
}

TEST_CASE("abelian field strength: A = (0, x1 dx2) gives F_12 = 1") {
    ConnectionField A(2, PolyMatrix(1, 1, 2));
    A[1](0, 0) = PolyScalar::variable(2, 0);
    FiberForm F = yang_mills_curvature(A);
    CHECK(F.at({0, 1})(0, 0) == PolyScalar::constant(2, Rat(1)));
    CHECK(F.at({1, 0})(0, 0) == PolyScalar::constant(2, Rat(-1)));
    CHECK(F.at({0, 0}).is_zero());
}

TEST_CASE("commutator term: constant non-commuting coefficients curve") {
    // A_1 = E12, A_2 = E21 constant: F_12 = [E12, E21] = diag(1, -1).
    ConnectionField A(2, PolyMatrix(2, 2, 2));
    A[0](0, 1) = PolyScalar::constant(2, Rat(1));
    A[1](1, 0) = PolyScalar::constant(2, Rat(1));
    FiberForm F = yang_mills_curvature(A);
    CHECK(F.at({0, 1})(0, 0) == PolyScalar::constant(2, Rat(1)));
    CHECK(F.at({0, 1})(1, 1) == PolyScalar::constant(2, Rat(-1)));
    CHECK(F.at({0, 1})(0, 1).is_zero());
}

TEST_CASE("pure gauge connection is flat") {
    gen::Rng rng(11);
    PolyMatrix phi = gen::random_unipotent(rng, 3, 2, 2);
    ConnectionField zero(2, PolyMatrix(3, 3, 2));
    ConnectionField pure = gauge_transform(phi, zero);
    CHECK(yang_mills_curvature(pure).is_zero());
}

TEST_CASE("gauge covariance of the field strength on a fixed instance") {
    gen::Rng rng(13);
    const int m = 2, n = 2;
    ConnectionField A = gen::random_connection(rng, m, n, 2);
    PolyMatrix phi = gen::random_unipotent(rng, n, m, 2);
    PolyMatrix inv = phi.unipotent_inverse();
    FiberForm F = yang_mills_curvature(A);
    FiberForm Ft = yang_mills_curvature(gauge_transform(phi, A));
    for (int mu = 0; mu < m; ++mu)
        for (int nu = 0; nu < m; ++nu)
            CHECK(Ft.at({mu, nu}) == inv * F.at({mu, nu}) * phi);
}

TEST_CASE("covariant differential squared equals curvature action") {
    gen::Rng rng(17);
    const int m = 3, n = 2;
    ConnectionField A = gen::random_connection(rng, m, n, 2);
    PolyMatrix psi = gen::random_poly_matrix(rng, n, 1, m, 2);
    FiberForm dd = covariant_differential(A, covariant_differential(A, FiberForm::from_section(psi, m)));
    FiberForm F = yang_mills_curvature(A);
    for (int mu = 0; mu < m; ++mu)
        for (int nu = 0; nu < m; ++nu)
            CHECK(dd.at({mu, nu}) == F.at({mu, nu}) * psi);
}

TEST_CASE("second Bianchi identity for a random connection") {
    gen::Rng rng(19);
    ConnectionField A = gen::random_connection(rng, 3, 2, 2);
    CHECK(covariant_differential(A, yang_mills_curvature(A)).is_zero());
}

TEST_CASE("connection shape validation") {
    ConnectionField bad;
    bad.push_back(PolyMatrix(2, 2, 2));
    bad.push_back(PolyMatrix(3, 3, 2));
    CHECK_THROWS_AS(yang_mills_curvature(bad), argument_error);
}
