#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qf/constructions.hpp"
#include "qf/ellmonoid.hpp"

using namespace qf;

namespace {

QuasiFormation column_qf(long long y1, long long y2) {
    QuasiFormation x;
    x.K_rank = 1;
    x.V = RingMatrix::from_ints({{y1}, {y2}}, ring_Z());
    return x;
}

}  // namespace

TEST_CASE("induced and complement forms of a rank-one column") {
    QuasiFormation x = column_qf(3, 5);
    CHECK(validate_quasiformation(x));
    CHECK(induced_form(x).psi.at(0, 0) == GroupRingElem::constant(15));
    ComplementMode mode;
    mode.kind = ComplementMode::Zexact;
    CHECK(complement_form(x, mode).psi.at(0, 0) == GroupRingElem::constant(-15));
    CHECK(boundary_minus(x).psi.at(0, 0) == GroupRingElem::constant(15));
    CHECK(boundary_plus(x, mode).psi.at(0, 0) == GroupRingElem::constant(15));
}

TEST_CASE("the graph-type class has vanishing boundaries") {
    // V = second factor: induced form zero, complement the first factor, also zero.
    QuasiFormation x;
    x.K_rank = 1;
    x.V = RingMatrix::from_ints({{0}, {1}}, ring_Z());
    ComplementMode mode;
    CHECK(boundary_minus(x).rank() == 0);
    CHECK(boundary_plus(x, mode).rank() == 0);
    CHECK(is_elementary_rep(x));
}

TEST_CASE("elementary representatives by determinant") {
    // (first factor | V) has determinant +-y2.
    CHECK_FALSE(is_elementary_rep(column_qf(1, 0)));  // V = the first factor itself
    CHECK(is_elementary_rep(column_qf(3, 1)));
    CHECK(is_elementary_rep(column_qf(7, -1)));
    CHECK_FALSE(is_elementary_rep(column_qf(3, 5)));
}

TEST_CASE("stabilization preserves boundaries and elementarity") {
    QuasiFormation x = column_qf(3, 5);
    QuasiFormation y = stabilize(x, 2);
    CHECK(y.K_rank == 3);
    CHECK(validate_quasiformation(y));
    ComplementMode mode;
    CHECK(boundary_minus(y).equals(boundary_minus(x)));
    CHECK(boundary_plus(y, mode).equals(boundary_plus(x, mode)));
    CHECK_FALSE(is_elementary_rep(y));
    CHECK(is_elementary_rep(stabilize(column_qf(3, 1), 2)));
}

TEST_CASE("the boundary isomorphism of a quasi-formation is valid") {
    QuasiFormation x = column_qf(3, 5);
    ComplementMode mode;
    StableIso del = delta_of_quasiformation(x, mode, 0);
    CHECK(check_stable_iso(del).ok);
    // Its union, fed back through kappa, is a rank-2 form with determinant -1
    // (an even unimodular indefinite form), hence hyperbolic over Z.
    EpsQuadraticForm k = kappa(del);
    HypMode h;
    h.kind = HypMode::Zexact;
    HypResult res = hyperbolicity_test(k, h);
    CHECK(res.verdict == TriBool::True);
}

TEST_CASE("exact hyperbolicity over Z") {
    HypMode h;
    h.kind = HypMode::Zexact;
    HypResult yes = hyperbolicity_test(hyperbolic(2, +1, ring_Z()), h);
    CHECK(yes.verdict == TriBool::True);
    REQUIRE(yes.witness.has_value());

    // A scrambled hyperbolic form is still recognized.
    EpsQuadraticForm scrambled{
        +1, q_canonical(RingMatrix::from_ints({{3, 7}, {2, 5}}, ring_Z()).conj_transpose() *
                            hyperbolic(1, +1, ring_Z()).psi *
                            RingMatrix::from_ints({{3, 7}, {2, 5}}, ring_Z()),
                        +1)};
    CHECK(hyperbolicity_test(scrambled, h).verdict == TriBool::True);

    // diag(1, -1) has even determinant obstructions absent but odd diagonal.
    EpsQuadraticForm diag{+1, RingMatrix::from_ints({{1, 0}, {0, -1}}, ring_Z())};
    HypResult no = hyperbolicity_test(diag, h);
    CHECK(no.verdict == TriBool::False);
    CHECK_FALSE(no.obstruction.empty());

    // Odd rank.
    EpsQuadraticForm odd{+1, RingMatrix::from_ints({{1}}, ring_Z())};
    CHECK(hyperbolicity_test(odd, h).verdict == TriBool::False);

    // Even, unimodular, but definite: nonzero signature.
    EpsQuadraticForm definite{+1, RingMatrix::from_ints({{1, 1}, {0, 1}}, ring_Z())};
    CHECK(hyperbolicity_test(definite, h).verdict == TriBool::False);
}

TEST_CASE("witness mode over the Laurent ring") {
    StableIso f = make_tg(-1, 2);
    EpsQuadraticForm k = kappa(f);
    HypMode h;
    h.kind = HypMode::Witness;
    h.witness = make_ug(-1, 2);
    HypResult res = hyperbolicity_test(k, h);
    CHECK(res.verdict == TriBool::True);

    HypMode bad;
    bad.kind = HypMode::Witness;
    bad.witness = RingMatrix::identity(2, ring_laurent());
    CHECK(hyperbolicity_test(k, bad).verdict == TriBool::Unknown);
}

TEST_CASE("bounded mode stays honest") {
    StableIso f = make_tg(-1, 3);
    HypMode h;
    h.kind = HypMode::Bounded;
    HypResult res = hyperbolicity_test(kappa(f), h);
    // Without the witness the bounded search may or may not find one, but the
    // verdict can never be False: the form is genuinely hyperbolic.
    CHECK(res.verdict != TriBool::False);
}
