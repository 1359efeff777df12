#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvlab/gen.hpp"
#include "curvlab/orbits.hpp"

using namespace curvlab;

TEST_CASE("connection reduction: normal form has zero value part and antisymmetric dA") {
    gen::Rng rng(61);
    Jet1Connection j = gen::random_connection_jet(rng, 3, 2);
    ConnectionReduction r = reduce_connection_jet(j);
    for (int mu = 0; mu < j.m; ++mu) CHECK(r.normal_form.A[mu].is_zero());
    for (int mu = 0; mu < j.m; ++mu)
        for (int a = 0; a < j.m; ++a)
            CHECK(r.normal_form.dA[mu][a] == Rat(-1) * r.normal_form.dA[a][mu]);
    // Witness actually maps j to the normal form.
    CHECK(act_on_connection_jet(r.witness, j) == r.normal_form);
    // Invariant is the curvature at the point: F = dA_alpha/dmu antisymmetrized
    // plus the commutator of the values.
    for (int mu = 0; mu < j.m; ++mu)
        for (int a = 0; a < j.m; ++a) {
            RatMat F = j.dA[a][mu] - j.dA[mu][a] + commutator(j.A[mu], j.A[a]);
            CHECK(r.invariant[mu][a] == F);
        }
}

TEST_CASE("connection invariant is constant on orbits; witness certifies equality") {
    gen::Rng rng(67);
    const int m = 3, n = 2;
    Jet1Connection j = gen::random_connection_jet(rng, m, n);
    Jet2VertAut g = gen::random_vert_aut(rng, m, n);
    Jet1Connection moved = act_on_connection_jet(g, j);
    ConnectionReduction r1 = reduce_connection_jet(j);
    ConnectionReduction r2 = reduce_connection_jet(moved);
    CHECK(r1.invariant == r2.invariant);
    CHECK(r1.normal_form == r2.normal_form);
    auto w = connection_equivalence_witness(j, moved);
    REQUIRE(w.has_value());
    CHECK(act_on_connection_jet(*w, j) == moved);
}

TEST_CASE("group law: acting twice equals acting by the product") {
    gen::Rng rng(71);
    const int m = 2, n = 3;
    Jet1Connection j = gen::random_connection_jet(rng, m, n);
    Jet2VertAut p = gen::random_vert_aut(rng, m, n);
    Jet2VertAut q = gen::random_vert_aut(rng, m, n);
    CHECK(act_on_connection_jet(q, act_on_connection_jet(p, j)) ==
          act_on_connection_jet(vert_aut_product(p, q), j));
    Jet2VertAut e = vert_aut_product(p, vert_aut_inverse(p));
    CHECK(e == Jet2VertAut::identity(m, n));
}

TEST_CASE("equivalence verdicts for connection jets") {
    gen::Rng rng(73);
    const int m = 3, n = 2;
    Jet1Connection j = gen::random_connection_jet(rng, m, n);
    Jet2VertAut g = gen::random_vert_aut(rng, m, n);
    ObstructionReport same = decide_equivalence(j, act_on_connection_jet(g, j));
    CHECK(same.verdict == "equivalent-at-order-1");
    CHECK(same.differing.empty());

    // Perturb a derivative coefficient so the curvature changes.
    Jet1Connection k = j;
    k.dA[0][1](0, 0) += 1;
    ObstructionReport diff = decide_equivalence(j, k);
    CHECK(diff.verdict == "obstructed");
    CHECK_FALSE(diff.differing.empty());
}

TEST_CASE("residual constant conjugation is recognized as equivalent") {
    gen::Rng rng(79);
    const int m = 2, n = 2;
    Jet1Connection j = gen::random_connection_jet(rng, m, n);
    RatMat B0(n, n);
    B0(0, 0) = 2;
    B0(0, 1) = 1;
    B0(1, 1) = 1; // invertible, non-identity
    Jet1Connection conj = conjugate_connection_jet(B0, j);
    ObstructionReport rep = decide_equivalence(j, conj);
    CHECK(rep.verdict == "equivalent-at-order-1");
}

TEST_CASE("fiber dimension above the similarity bound yields undecided") {
    gen::Rng rng(83);
    const int m = 2, n = 5;
    Jet1Connection j = gen::random_connection_jet(rng, m, n);
    RatMat B0 = RatMat::identity(n);
    B0(0, 1) = 1;
    Jet1Connection conj = conjugate_connection_jet(B0, j);
    ObstructionReport rep = decide_equivalence(j, conj);
    CHECK(rep.verdict == "undecided-higher-order");
}

TEST_CASE("ACS projection: splitting identities and the Nijenhuis invariant") {
    gen::Rng rng(89);
    const int m = 4;
    Jet1ACS j = gen::random_acs_jet(rng, m);
    AcsProjection p = acs_projection(j);
    // C = gauge part + kernel part, and the gauge part is K of a symmetric B.
    for (int rho = 0; rho < m; ++rho)
        CHECK(j.C[rho] == p.gauge_part[rho] + p.ker_s_part[rho]);
    // The kernel part is the quarter-Nijenhuis contraction.
    CHECK(p.ker_s_part == p.quarter_jn);
    // The corrected closed form agrees with the linear-solve answer.
    CHECK(p.closed_form == p.ker_s_part);
    // The symbol A = s∘K is rank-deficient: its kernel is the space of
    // J-complex-bilinear symmetric maps, dimension 12 at m = 4.
    CHECK(p.a_dim == 40);
    CHECK(p.a_rank == 28);
}

TEST_CASE("ACS invariant is constant on diffeomorphism-jet orbits") {
    gen::Rng rng(97);
    const int m = 4;
    Jet1ACS j = gen::random_acs_jet(rng, m);
    Jet2Diffeo d = gen::random_diffeo_jet(rng, m);
    Jet1ACS moved = act_on_acs_jet(d, j);
    moved.validate();
    AcsProjection p1 = acs_projection(j);
    AcsProjection p2 = acs_projection(moved);
    CHECK(p1.ker_s_part == p2.ker_s_part);

    ObstructionReport rep = decide_equivalence(j, moved);
    CHECK(rep.verdict == "equivalent-at-order-1");
    // Perturb C_1 by D = S + JSJ, which anticommutes with J for any S, and
    // check the perturbation is visible to the invariant.
    Jet1ACS other = j;
    RatMat S(m, m);
    S(0, 0) = 1;
    other.C[0] += S + j.J * S * j.J;
    other.validate();
    ObstructionReport rep2 = decide_equivalence(j, other);
    AcsProjection po = acs_projection(other);
    if (po.ker_s_part == p1.ker_s_part)
        CHECK(rep2.verdict == "equivalent-at-order-1");
    else
        CHECK(rep2.verdict == "obstructed");
}

TEST_CASE("ACS invariant vanishes identically in dimension 2") {
    gen::Rng rng(101);
    Jet1ACS j = gen::random_acs_jet(rng, 2);
    AcsProjection p = acs_projection(j);
    for (const RatMat& v : p.ker_s_part) CHECK(v.is_zero());
}

TEST_CASE("super reduction matches blockwise connection reduction and is invariant") {
    gen::Rng rng(103);
    const int m = 2, np = 2, nm = 2;
    Jet1Super j = gen::random_super_jet(rng, m, np, nm);
    SuperReduction r = reduce_super_jet(j);
    CHECK(act_on_super_jet(r.witness, j) == r.normal_form);
    CHECK(r.invariant.chi_pm == j.chi_pm);
    CHECK(r.invariant.chi_mp == j.chi_mp);
    for (int mu = 0; mu < m; ++mu) {
        RatMat nabla = j.dchi_pm[mu] + j.Ap[mu] * j.chi_pm - j.chi_pm * j.Am[mu];
        CHECK(r.invariant.nabla_chi_pm[mu] == nabla);
    }

    SuperAutJet g = SuperAutJet::identity(m, np, nm);
    g.plus = gen::random_vert_aut(rng, m, np);
    g.plus.B0 = RatMat::identity(np); // normalized action
    g.minus = gen::random_vert_aut(rng, m, nm);
    g.minus.B0 = RatMat::identity(nm);
    Jet1Super moved = act_on_super_jet(g, j);
    CHECK(reduce_super_jet(moved).invariant == r.invariant);
    CHECK(decide_equivalence(j, moved).verdict == "equivalent-at-order-1");

    Jet1Super other = j;
    other.chi_pm(0, 0) += 1;
    CHECK(decide_equivalence(j, other).verdict == "obstructed");
}
