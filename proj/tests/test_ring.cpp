#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qf/linalg.hpp"

using namespace qf;

TEST_CASE("element arithmetic and involution") {
    GroupRingElem x = GroupRingElem::monomial(2, 1) + GroupRingElem::constant(-3);
    GroupRingElem y = GroupRingElem::monomial(1, -1);
    CHECK((x * y).coeff(0) == 2);
    CHECK((x * y).coeff(-1) == -3);
    CHECK(x.involute().coeff(-1) == 2);
    CHECK(x.involute().involute() == x);
    CHECK((x + (-x)).is_zero());
    CHECK(x.augmentation().constant_term() == -1);
}

TEST_CASE("modular coefficients stay canonical") {
    GroupRingElem a = GroupRingElem::constant(7, 5);
    CHECK(a.constant_term() == 2);
    GroupRingElem b = GroupRingElem::monomial(4, 2, 5);
    CHECK((a + b * b).coeff(4) == 1);  // 16 mod 5
    CHECK(a.with_modulus(0).constant_term() == 2);
}

TEST_CASE("trivial units and their inverses") {
    GroupRingElem u = GroupRingElem::monomial(-1, 3);
    CHECK(u.is_trivial_unit());
    CHECK(u * u.trivial_unit_inverse() == GroupRingElem::one());
    CHECK_FALSE((GroupRingElem::one() + GroupRingElem::monomial(1, 1)).is_trivial_unit());
    GroupRingElem um = GroupRingElem::constant(4, 5);  // -1 mod 5
    CHECK(um.is_trivial_unit());
    CHECK(um * um.trivial_unit_inverse() == GroupRingElem::one(5));
}

TEST_CASE("exact division") {
    GroupRingElem a = GroupRingElem::monomial(1, 2) - GroupRingElem::constant(1);
    GroupRingElem b = GroupRingElem::monomial(1, 1) - GroupRingElem::constant(1);
    auto q = a.divide_exact(b);
    REQUIRE(q.has_value());
    CHECK(*q * b == a);
    CHECK_FALSE(a.divide_exact(GroupRingElem::constant(2)).has_value());
}

TEST_CASE("matrix multiplication and conjugate transpose") {
    Ring ring = ring_laurent();
    RingMatrix m(2, 2, ring);
    m.set(0, 0, GroupRingElem::monomial(1, 1));
    m.set(0, 1, GroupRingElem::constant(2));
    m.set(1, 1, GroupRingElem::monomial(-1, -2));
    RingMatrix mt = m.conj_transpose();
    CHECK(mt.at(0, 0) == GroupRingElem::monomial(1, -1));
    CHECK(mt.at(1, 0) == GroupRingElem::constant(2));
    CHECK(mt.at(1, 1) == GroupRingElem::monomial(-1, 2));
    CHECK((m * RingMatrix::identity(2, ring)) == m);
}

TEST_CASE("determinant and adjugate inverse over the Laurent ring") {
    Ring ring = ring_laurent();
    RingMatrix u(2, 2, ring);
    u.set(0, 0, GroupRingElem::constant(1));
    u.set(0, 1, GroupRingElem::monomial(1, -1));
    u.set(1, 0, GroupRingElem::zero());
    u.set(1, 1, GroupRingElem::constant(1));
    CHECK(u.det() == GroupRingElem::one());
    CHECK((u * u.inverse()).is_identity());

    RingMatrix w = RingMatrix::from_ints({{2, 3}, {1, 2}}, ring_Z());
    CHECK(w.det() == GroupRingElem::one());
    CHECK((w.inverse() * w).is_identity());
    RingMatrix bad = RingMatrix::from_ints({{2, 0}, {0, 1}}, ring_Z());
    CHECK_THROWS_AS(bad.inverse(), NotInvertible);
}

TEST_CASE("inverse over a residue ring with constant unit determinant") {
    Ring ring = ring_laurent(5);
    RingMatrix m = RingMatrix::from_ints({{2, 1}, {1, 1}}, ring);
    CHECK((m * m.inverse()).is_identity());
}

TEST_CASE("smith normal form tracks unimodular transforms") {
    RingMatrix a = RingMatrix::from_ints({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}, ring_Z());
    SmithResult s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.S);
    CHECK(s.U.det().is_trivial_unit());
    CHECK(s.V.det().is_trivial_unit());
    REQUIRE(s.divisors.size() == 3);
    CHECK(s.divisors[0] == 2);
    CHECK(s.divisors[1] % s.divisors[0] == 0);
    CHECK(s.divisors[2] % s.divisors[1] == 0);
}

TEST_CASE("integer kernels are saturated") {
    RingMatrix a = RingMatrix::from_ints({{3, 5}}, ring_Z());
    RingMatrix k = kernel_Z(a);
    REQUIRE(k.cols() == 1);
    CHECK((a * k).is_zero());
    Int g = gcd(k.at(0, 0).constant_term(), k.at(1, 0).constant_term());
    CHECK(g == 1);
}

TEST_CASE("integer and residue solvers") {
    RingMatrix a = RingMatrix::from_ints({{3, 5}}, ring_Z());
    RingMatrix b = RingMatrix::from_ints({{1}}, ring_Z());
    auto x = solve_Z(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
    CHECK_FALSE(solve_Z(RingMatrix::from_ints({{2}}, ring_Z()),
                        RingMatrix::from_ints({{1}}, ring_Z()))
                    .has_value());
    Ring zm = ring_laurent(9);
    RingMatrix am = RingMatrix::from_ints({{2}}, zm);
    RingMatrix bm = RingMatrix::from_ints({{1}}, zm);
    auto xm = solve_linear(am, bm, 0);
    REQUIRE(xm.has_value());
    CHECK(am * *xm == bm);
}

TEST_CASE("bounded Laurent solver") {
    Ring ring = ring_laurent();
    RingMatrix a(1, 1, ring);
    a.set(0, 0, GroupRingElem::monomial(1, 2));
    RingMatrix b(1, 1, ring);
    b.set(0, 0, GroupRingElem::constant(3) + GroupRingElem::monomial(1, 5));
    auto x = solve_linear(a, b, 4);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);

    // 2-dimensional: (t, 1-t) row has the right inverse (1; 1) + t-shifts.
    RingMatrix row(1, 2, ring);
    row.set(0, 0, GroupRingElem::monomial(1, 1));
    row.set(0, 1, GroupRingElem::one() - GroupRingElem::monomial(1, 1));
    auto y = solve_linear(row, RingMatrix::identity(1, ring), 3);
    REQUIRE(y.has_value());
    CHECK(row * *y == RingMatrix::identity(1, ring));
}

TEST_CASE("left inverses certify split injections") {
    RingMatrix j = RingMatrix::from_ints({{3}, {5}}, ring_Z());
    auto li = left_inverse(j, 0);
    REQUIRE(li.has_value());
    CHECK((*li * j).is_identity());
    CHECK_FALSE(left_inverse(RingMatrix::from_ints({{2}, {4}}, ring_Z()), 0).has_value());
}

TEST_CASE("exact signatures") {
    CHECK(signature_Z(RingMatrix::from_ints({{0, 1}, {1, 0}}, ring_Z())) == 0);
    CHECK(signature_Z(RingMatrix::from_ints({{2, 1}, {1, 2}}, ring_Z())) == 2);
    CHECK(signature_Z(RingMatrix::from_ints({{2, 0}, {0, -4}}, ring_Z())) == 0);
    CHECK(signature_Z(RingMatrix::from_ints({{-2, 1}, {1, -2}}, ring_Z())) == -2);
}
