#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvlab/parse.hpp"
#include "curvlab/poly.hpp"

using namespace curvlab;

namespace {
PolyScalar x(int var, int m) { return PolyScalar::variable(m, var); }
}

TEST_CASE("constants and variables") {
    auto c = PolyScalar::constant(2, Rat(5));
    CHECK(c.is_constant());
    CHECK(c.constant_term() == Rat(5));
    CHECK(x(0, 2).total_degree() == 1);
    CHECK(PolyScalar::constant(3, Rat(0)).is_zero());
}

TEST_CASE("arithmetic and no stored zeros") {
    auto p = x(0, 2) * x(1, 2);
    auto q = p - p;
    CHECK(q.is_zero());
    auto r = (x(0, 2) + x(1, 2)) * (x(0, 2) - x(1, 2));
    auto expect = x(0, 2) * x(0, 2) - x(1, 2) * x(1, 2);
    CHECK(r == expect);
}

TEST_CASE("partial derivatives") {
    // d/dx1 (x1 x2) = x2
    auto p = x(0, 2) * x(1, 2);
    CHECK(p.partial(0) == x(1, 2));
    // d/dx2 (5) = 0
    CHECK(PolyScalar::constant(2, Rat(5)).partial(1).is_zero());
    // d/dx1 (x1^3 - 2 x1) = 3 x1^2 - 2
    auto cube = x(0, 1) * x(0, 1) * x(0, 1) - Rat(2) * x(0, 1);
    auto want = Rat(3) * (x(0, 1) * x(0, 1)) - PolyScalar::constant(1, Rat(2));
    CHECK(cube.partial(0) == want);
}

TEST_CASE("mixed partials commute") {
    auto p = x(0, 3) * x(0, 3) * x(1, 3) + x(2, 3) * x(1, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(p.partial(i).partial(j) == p.partial(j).partial(i));
}

TEST_CASE("Leibniz rule") {
    auto p = x(0, 2) * x(0, 2) + x(1, 2);
    auto q = x(0, 2) * x(1, 2) - PolyScalar::constant(2, Rat(7));
    for (int i = 0; i < 2; ++i) {
        auto lhs = (p * q).partial(i);
        auto rhs = p.partial(i) * q + p * q.partial(i);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("exact evaluation") {
    // (x1)^2 x2 at (3, 1/2) = 9/2
    auto p = x(0, 2) * x(0, 2) * x(1, 2);
    std::vector<Rat> pt{Rat(3), Rat(1) / 2};
    CHECK(p.eval(pt) == Rat(9) / 2);
    std::vector<Rat> origin{Rat(0), Rat(0)};
    CHECK(p.eval(origin) == Rat(0));
}

TEST_CASE("substitution composes") {
    auto p = x(0, 2) * x(1, 2);
    // x1 -> x1 + x2, x2 -> x2
    std::vector<PolyScalar> sub{x(0, 2) + x(1, 2), x(1, 2)};
    auto q = p.substitute(sub);
    CHECK(q == x(0, 2) * x(1, 2) + x(1, 2) * x(1, 2));
}

TEST_CASE("translate recenters") {
    auto p = x(0, 1) * x(0, 1);
    std::vector<Rat> pt{Rat(2)};
    auto q = p.translate(pt); // p(x + 2) = x^2 + 4x + 4
    std::vector<Rat> origin{Rat(0)};
    CHECK(q.eval(origin) == Rat(4));
    CHECK(q.partial(0).eval(origin) == Rat(4));
}

TEST_CASE("parser round trip") {
    const char* samples[] = {
        "0",
        "1/2",
        "x1",
        "-x2",
        "x1^2*x2 - 3/4*x3",
        "(x1 + x2)^2 - x1^2 - 2*x1*x2 - x2^2",
        "1 + x1 + x1^2 + x1^3",
    };
    for (const char* s : samples) {
        auto p = parse_poly(s, 3);
        auto text = poly_to_string(p);
        auto p2 = parse_poly(text, 3);
        CHECK(p == p2);
    }
    CHECK(parse_poly("(x1 + x2)^2 - x1^2 - 2*x1*x2 - x2^2", 3).is_zero());
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_poly("x0", 2), argument_error);
    CHECK_THROWS_AS(parse_poly("x3", 2), argument_error);
    CHECK_THROWS_AS(parse_poly("x1 +", 2), argument_error);
    CHECK_THROWS_AS(parse_poly("(x1", 2), argument_error);
    CHECK_THROWS_AS(parse_poly("x1 ^ x2", 2), argument_error);
}
