#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qf/constructions.hpp"

using namespace qf;

TEST_CASE("union of the identity boundary isomorphism") {
    Ring ring = ring_laurent();
    EpsQuadraticForm v{+1, RingMatrix::scalar(GroupRingElem::constant(-24), ring)};
    StableIso id = boundary_of_isometry(RingMatrix::identity(1, ring), v, v);
    UnionResult u = glue_union(id);
    CHECK(u.form.psi == RingMatrix::from_ints({{-24, 0}, {1, 0}}, ring));
    CHECK(u.j == RingMatrix::from_ints({{1}, {0}}, ring));
    CHECK(u.jprime == RingMatrix::from_ints({{1}, {48}}, ring));
    // Both inclusions restrict correctly.
    CHECK(restrict_form(u.form, u.j).equals(v));
    CHECK(restrict_form(u.form, u.jprime).equals(v.negated()));
}

TEST_CASE("worked integral example: boundary image, union, and the r isometry") {
    TwoSidedPrimEmbedding pe = make_coprime_embedding_Z(3, 5, true);
    EmbeddingReport rep = validate_embedding(pe, 0);
    CHECK(rep.ok);
    StableIso del = delta_map(pe, 0);
    CHECK(check_stable_iso(del).ok);
    Components c = components(del);
    CHECK(c.a.at(0, 0) == GroupRingElem::constant(-19));
    CHECK(c.b.at(0, 0) == GroupRingElem::constant(-19));
    CHECK(c.s.at(0, 0) == GroupRingElem::constant(-6));
    UnionResult u = glue_union(del);
    CHECK(u.form.psi == RingMatrix::from_ints({{15, 0}, {-19, 6}}, ring_Z()));
    RingMatrix r = r_iso(pe, 0);
    CHECK(r == RingMatrix::from_ints({{3, -2}, {5, -3}}, ring_Z()));
    CHECK(check_isometry(r, u.form, pe.m));
}

TEST_CASE("both roundtrips of the correspondence") {
    TwoSidedPrimEmbedding pe = make_coprime_embedding_Z(3, 5, true);
    StableIso del = delta_map(pe, 0);
    TwoSidedPrimEmbedding back = pr_map(del);
    CHECK(back.jprime == RingMatrix::from_ints({{-19}, {-30}}, ring_Z()));
    PrimCompareOutcome cmp = bprim_compare(back, pe, {});
    CHECK(cmp.verdict == Verdict::Equal);
    // delta after pr twists the components by the boundary of -1.
    StableIso again = delta_map(back, 0);
    Components c1 = components(del), c2 = components(again);
    CHECK(c2.a == -c1.a);
    CHECK(c2.b == -c1.b);
    CHECK(q_equal(c2.s, c1.s, +1));
    CompareOutcome bc = biso_compare(del, again, {});
    CHECK(bc.verdict == Verdict::Equal);
}

TEST_CASE("orthogonal complements over Z") {
    EpsQuadraticForm h = hyperbolic(1, +1, ring_Z());
    RingMatrix j = RingMatrix::from_ints({{3}, {5}}, ring_Z());
    RingMatrix comp = orthogonal_complement(h, j, {});
    REQUIRE(comp.cols() == 1);
    CHECK((j.conj_transpose() * h.symmetrization() * comp).is_zero());
    EpsQuadraticForm cf = restrict_form(h, comp);
    CHECK(cf.psi.at(0, 0) == GroupRingElem::constant(-15));
}

TEST_CASE("sign-twisted partner is equal in the both-sided set only") {
    TwoSidedPrimEmbedding plus = make_coprime_embedding_Z(3, 5, true);
    TwoSidedPrimEmbedding minus = make_coprime_embedding_Z(3, 5, false);
    PrimCompareOptions b;
    CHECK(bprim_compare(plus, minus, b).verdict == Verdict::Equal);
    PrimCompareOptions strict;
    strict.flavor = PrimFlavor::Prim;
    CHECK(bprim_compare(plus, plus, strict).verdict == Verdict::Equal);
}

TEST_CASE("classification counts match the exhaustive orbit count") {
    for (const auto& [q, want] :
         std::vector<std::pair<Int, std::size_t>>{{7, 1}, {15, 2}, {105, 4}}) {
        PrimEnumeration en = enumerate_prim_Z(q);
        CHECK(en.count_bF == want);
        PrimOrbitCounts bf = count_prim_orbits_bruteforce(q);
        CHECK(bf.bF == want);
        CHECK(bf.lF == want);
        CHECK(bf.rF == want);
        CHECK(bf.F == en.count_F);
    }
    PrimEnumeration seven = enumerate_prim_Z(7);
    for (const TwoSidedPrimEmbedding& pe : seven.representatives)
        CHECK(validate_embedding(pe, 0).ok);
}

TEST_CASE("presented symmetric forms produce certified embeddings") {
    Ring ring = ring_laurent();
    ExtendedSymmetricForm e{RingMatrix::from_ints({{0, 1}, {1, 0}}, ring),
                            RingMatrix::from_ints({{1, 24}}, ring)};
    TwoSidedPrimEmbedding pe = esf_to_embedding(e, 4);
    CHECK(validate_embedding(pe, 4).ok);
    CHECK(pe.jprime == RingMatrix::from_ints({{24}, {1}}, ring));
    CHECK(pe.vprime.psi.at(0, 0) == GroupRingElem::constant(24));
    CHECK(pe.v.psi.at(0, 0) == GroupRingElem::constant(-24));
    TwoSidedPrimEmbedding fixture = make_nab_fixture(24, 1, ring);
    CHECK(bprim_compare(pe, fixture, {}).verdict == Verdict::Equal);
}

TEST_CASE("surjectivity is required for presented forms") {
    Ring ring = ring_laurent();
    ExtendedSymmetricForm e{RingMatrix::from_ints({{0, 1}, {1, 0}}, ring),
                            RingMatrix::from_ints({{2, 24}}, ring)};
    CHECK_THROWS_AS(esf_to_embedding(e, 4), Error);
}

TEST_CASE("extendedness of constant embeddings") {
    TwoSidedPrimEmbedding pe = make_nab_fixture(7, 2, ring_laurent());
    CHECK(check_extended(pe, 4) == TriBool::True);
}

TEST_CASE("group twist maps an embedding onto its mirrored parameters") {
    TwoSidedPrimEmbedding j1 = make_jg_embedding(-1, 1, 6);
    TwoSidedPrimEmbedding jm1 = make_jg_embedding(-1, -1, 6);
    CHECK(twist_embedding(j1).j == jm1.j);
    PrimCompareOptions opts;
    opts.allow_group_twist = true;
    PrimCompareOutcome cmp = bprim_compare(j1, jm1, opts);
    CHECK(cmp.verdict == Verdict::Equal);
    CHECK(cmp.used_group_twist);
}
