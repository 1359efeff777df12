#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvlab/polymat.hpp"
#include "curvlab/ratmat.hpp"
#include "curvlab/tensor.hpp"

using namespace curvlab;

TEST_CASE("RatMat basics") {
    RatMat a(2, 2);
    a(0, 1) = Rat(1); // E12
    RatMat b(2, 2);
    b(1, 0) = Rat(1); // E21
    auto c = commutator(a, b);
    CHECK(c(0, 0) == Rat(1));
    CHECK(c(1, 1) == Rat(-1));
    CHECK(c(0, 1) == Rat(0));
}

TEST_CASE("RatMat det, rank, inverse") {
    RatMat m(2, 2);
    m(0, 0) = Rat(1);
    m(0, 1) = Rat(2);
    m(1, 0) = Rat(3);
    m(1, 1) = Rat(4);
    CHECK(m.det() == Rat(-2));
    CHECK(m.rank() == 2);
    auto inv = m.inverse();
    CHECK((m * inv) == RatMat::identity(2));
    CHECK((inv * m) == RatMat::identity(2));

    RatMat sing(2, 2);
    sing(0, 0) = Rat(1);
    sing(1, 0) = Rat(2);
    CHECK(sing.rank() == 1);
    CHECK_THROWS_AS(sing.inverse(), argument_error);
}

TEST_CASE("RatMat solve and nullspace") {
    RatMat a(2, 3);
    a(0, 0) = Rat(1);
    a(0, 1) = Rat(1);
    a(1, 2) = Rat(1);
    std::vector<Rat> b{Rat(2), Rat(5)};
    auto sol = RatMat::solve_particular(a, b);
    REQUIRE(sol.has_value());
    CHECK(sol->at(0) + sol->at(1) == Rat(2));
    CHECK(sol->at(2) == Rat(5));
    auto ns = a.nullspace();
    CHECK(ns.size() == 1);
    CHECK(ns[0][0] + ns[0][1] == Rat(0));
    CHECK(ns[0][2] == Rat(0));

    std::vector<Rat> bad{Rat(1), Rat(0)};
    RatMat zero(2, 3);
    CHECK(!RatMat::solve_particular(zero, bad).has_value());
}

TEST_CASE("PolyMatrix arithmetic and unipotent inverse") {
    int m = 3;
    auto x3 = PolyScalar::variable(m, 2);
    PolyMatrix u = PolyMatrix::identity(m, m);
    u(0, 1) = x3; // I + x3 E12
    auto inv = u.unipotent_inverse();
    CHECK((u * inv).is_identity());
    CHECK((inv * u).is_identity());
    CHECK(inv(0, 1) == -x3);

    PolyMatrix notuni = PolyMatrix::identity(m, m);
    notuni(0, 0) = PolyScalar::constant(m, Rat(2));
    CHECK_THROWS_AS(notuni.unipotent_inverse(), unsupported_input_error);
}

TEST_CASE("PolyMatrix partial and eval") {
    int m = 2;
    PolyMatrix p(m, m, m);
    p(0, 0) = PolyScalar::variable(m, 0) * PolyScalar::variable(m, 1);
    auto d = p.partial(0);
    CHECK(d(0, 0) == PolyScalar::variable(m, 1));
    std::vector<Rat> pt{Rat(2), Rat(3)};
    auto v = p.eval(pt);
    CHECK(v(0, 0) == Rat(6));
    CHECK(v(1, 1) == Rat(0));
}

TEST_CASE("TensorPolyField storage and symmetry checks") {
    int m = 2;
    TensorPolyField t(m, {{SlotKind::BaseCo, m}, {SlotKind::BaseCo, m}});
    auto x1 = PolyScalar::variable(m, 0);
    t.at({0, 1}) = x1;
    t.at({1, 0}) = -x1;
    CHECK(t.is_antisymmetric_pair(0, 1));
    CHECK(!t.is_symmetric_pair(0, 1));
    CHECK(t.at({0, 0}).is_zero());

    TensorPolyField s = t;
    CHECK((t - s).is_zero());
    auto sum = t + t;
    CHECK(sum.at({0, 1}) == Rat(2) * x1);

    std::vector<Rat> pt{Rat(3), Rat(0)};
    auto ev = t.eval_at(pt);
    CHECK(ev.at({0, 1}).constant_term() == Rat(3));
}

TEST_CASE("TensorPolyField shape validation") {
    CHECK_THROWS_AS(TensorPolyField(2, {{SlotKind::BaseCo, 3}}), argument_error);
    TensorPolyField t(2, {{SlotKind::FiberIn, 3}});
    CHECK_THROWS_AS(t.at({3}), argument_error);
    CHECK_THROWS_AS(t.at({0, 0}), argument_error);
}
