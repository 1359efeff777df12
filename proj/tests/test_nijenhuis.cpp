#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvlab/curvature.hpp"
#include "curvlab/gen.hpp"

using namespace curvlab;

TEST_CASE("canonical J0 layout and integrability") {
    PolyMatrix J0 = PolyMatrix::from_constant(canonical_j0(4), 4);
    CHECK(J0(0, 1) == PolyScalar::constant(4, Rat(-1)));
    CHECK(J0(1, 0) == PolyScalar::constant(4, Rat(1)));
    CHECK(J0(2, 3) == PolyScalar::constant(4, Rat(-1)));
    CHECK(J0(3, 2) == PolyScalar::constant(4, Rat(1)));
    check_acs(J0);
    TensorPolyField N = nijenhuis(J0);
    N.for_each_index([&](std::span<const int> idx) { CHECK(N.at(idx).is_zero()); });
}

TEST_CASE("every valid J in dimension 2 is integrable") {
    gen::Rng rng(31);
    for (int t = 0; t < 10; ++t) {
        PolyMatrix J = gen::random_acs(rng, 2, 2);
        TensorPolyField N = nijenhuis(J);
        N.for_each_index([&](std::span<const int> idx) { CHECK(N.at(idx).is_zero()); });
    }
}

TEST_CASE("hand instance: conjugating J0 by I + x3 E12 in dimension 4") {
    const int m = 4;
    PolyMatrix U = PolyMatrix::identity(m, m);
    U(0, 1) = PolyScalar::variable(m, 2); // x3 in the (1,2) slot
    PolyMatrix J = U * PolyMatrix::from_constant(canonical_j0(m), m) * U.unipotent_inverse();
    check_acs(J);
    TensorPolyField N = nijenhuis(J);

    // N(d1, d3) = x3 d1 + d2.
    PolyScalar x3 = PolyScalar::variable(m, 2);
    CHECK(N.at({0, 0, 2}) == x3);
    CHECK(N.at({1, 0, 2}) == PolyScalar::constant(m, Rat(1)));
    CHECK(N.at({2, 0, 2}).is_zero());
    CHECK(N.at({3, 0, 2}).is_zero());
    // Antisymmetry in the base slots.
    CHECK(N.at({0, 2, 0}) == -x3);
    CHECK(N.at({1, 2, 0}) == PolyScalar::constant(m, Rat(-1)));

    // The vector-field bracket form agrees on (d1, d3).
    VectorField e1(m, PolyScalar(m)), e3(m, PolyScalar(m));
    e1[0] = PolyScalar::constant(m, Rat(1));
    e3[2] = PolyScalar::constant(m, Rat(1));
    VectorField nv = nijenhuis_vector_form(J, e1, e3);
    CHECK(nv[0] == x3);
    CHECK(nv[1] == PolyScalar::constant(m, Rat(1)));
    CHECK(nv[2].is_zero());
    CHECK(nv[3].is_zero());
}

TEST_CASE("pullback of J0 by a polynomial diffeomorphism is integrable") {
    gen::Rng rng(37);
    const int m = 4;
    for (int t = 0; t < 5; ++t) {
        std::vector<PolyScalar> phi = gen::random_unipotent_diffeo(rng, m, 2);
        PolyMatrix J = gen::pullback_constant_acs(phi, canonical_j0(m));
        check_acs(J);
        TensorPolyField N = nijenhuis(J);
        N.for_each_index([&](std::span<const int> idx) { CHECK(N.at(idx).is_zero()); });
    }
}

TEST_CASE("check_acs names a violating component") {
    PolyMatrix bad(2, 2, 2);
    bad(0, 1) = PolyScalar::constant(2, Rat(-1));
    bad(1, 0) = PolyScalar::constant(2, Rat(1));
    bad(0, 0) = PolyScalar::variable(2, 0); // breaks J^2 = -1
    CHECK_THROWS_AS(check_acs(bad), invalid_section_error);
    CHECK_THROWS_AS(nijenhuis(bad), invalid_section_error);
}
