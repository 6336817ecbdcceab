#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qf/forms.hpp"

using namespace qf;

TEST_CASE("canonical representatives move mass above the diagonal") {
    Ring ring = ring_laurent();
    RingMatrix psi(2, 2, ring);
    psi.set(1, 0, GroupRingElem::monomial(3, 2));
    RingMatrix can = q_canonical(psi, +1);
    CHECK(can.at(1, 0).is_zero());
    CHECK(can.at(0, 1) == GroupRingElem::monomial(3, -2));
    // The same class, different representative.
    RingMatrix psi2(2, 2, ring);
    psi2.set(0, 1, GroupRingElem::monomial(3, -2));
    CHECK(q_equal(psi, psi2, +1));
    CHECK_FALSE(q_equal(psi, psi2, -1));
}

TEST_CASE("diagonal folding by sign") {
    Ring ring = ring_laurent();
    RingMatrix psi(1, 1, ring);
    psi.set(0, 0, GroupRingElem::monomial(5, -3) + GroupRingElem::constant(4));
    RingMatrix plus = q_canonical(psi, +1);
    CHECK(plus.at(0, 0) == GroupRingElem::monomial(5, 3) + GroupRingElem::constant(4));
    RingMatrix minus = q_canonical(psi, -1);
    CHECK(minus.at(0, 0) == GroupRingElem::monomial(-5, 3));  // constant dies mod 2
}

TEST_CASE("hyperbolic forms and symmetrization") {
    EpsQuadraticForm h = hyperbolic(2, +1, ring_Z());
    CHECK(h.rank() == 4);
    RingMatrix lam = h.symmetrization();
    CHECK(lam.at(0, 2) == GroupRingElem::one());
    CHECK(lam.at(2, 0) == GroupRingElem::one());
    EpsQuadraticForm hm = hyperbolic(1, -1, ring_Z());
    CHECK(hm.symmetrization().at(1, 0) == GroupRingElem::constant(-1));
}

TEST_CASE("isometry checks and restriction") {
    EpsQuadraticForm h = hyperbolic(1, +1, ring_Z());
    RingMatrix j = RingMatrix::from_ints({{3}, {5}}, ring_Z());
    EpsQuadraticForm v = restrict_form(h, j);
    CHECK(v.psi.at(0, 0) == GroupRingElem::constant(15));
    // The flip with a sign is a self-isometry of the hyperbolic form.
    RingMatrix flip = RingMatrix::from_ints({{0, 1}, {1, 0}}, ring_Z());
    CHECK(check_isometry(flip, h, h));
    RingMatrix bad = RingMatrix::from_ints({{1, 1}, {0, 1}}, ring_Z());
    CHECK_FALSE(check_isometry(bad, h, h));
}

TEST_CASE("zero-stable strip removes inert coordinates") {
    Ring ring = ring_Z();
    RingMatrix psi(3, 3, ring);
    psi.set(0, 0, GroupRingElem::constant(7));
    EpsQuadraticForm padded{+1, psi};
    StripResult s = zero_stable_strip(padded);
    CHECK(s.form.rank() == 1);
    CHECK(s.form.psi.at(0, 0) == GroupRingElem::constant(7));
    REQUIRE(s.kept.size() == 1);
    CHECK(s.kept[0] == 0);
}

TEST_CASE("lagrangian certificates") {
    EpsQuadraticForm h = hyperbolic(1, +1, ring_Z());
    RingMatrix j = RingMatrix::from_ints({{1}, {0}}, ring_Z());
    RingMatrix w = RingMatrix::from_ints({{0}, {1}}, ring_Z());
    LagrangianReport rep = check_lagrangian(j, h, w);
    CHECK(rep.certified);
    RingMatrix notlag = RingMatrix::from_ints({{1}, {1}}, ring_Z());
    CHECK_FALSE(check_lagrangian(notlag, h, w).vanishes);
}
