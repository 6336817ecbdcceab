#pragma once

// Quasi-formations in normalized shape (hyperbolic ambient; first factor;
// a half-rank summand V), their induced and complement forms, the two
// boundary maps at representative level, the elementary-representative test,
// the boundary and union maps out of them, and exact hyperbolicity testing
// of quadratic forms over Z (with witness and bounded modes for Laurent
// rings).

#include "qf/embed.hpp"

namespace qf {

struct QuasiFormation {
    std::size_t K_rank = 0;               // r
    RingMatrix V;                         // 2r x r, a half-rank direct summand
    int eps = +1;
    std::optional<RingMatrix> complement_witness;

    EpsQuadraticForm ambient() const { return hyperbolic(K_rank, eps, V.ring()); }
};

// V is a split summand of the ambient module (certified by a left inverse).
bool validate_quasiformation(const QuasiFormation& x, int degree_bound = 8);

// Restriction of the ambient hyperbolic form to V.
EpsQuadraticForm induced_form(const QuasiFormation& x);

// Restriction along the orthogonal complement of V (exact over Z, via the
// stored witness, or by bounded search).
EpsQuadraticForm complement_form(const QuasiFormation& x, const ComplementMode& mode);

// Representatives of the two boundary classes: the induced form with its
// zero summand stripped, and the negated stripped complement form.
EpsQuadraticForm boundary_minus(const QuasiFormation& x);
EpsQuadraticForm boundary_plus(const QuasiFormation& x, const ComplementMode& mode);

// True iff (first factor | V) has trivial-unit determinant.
bool is_elementary_rep(const QuasiFormation& x);

// Direct sum with the trivial quasi-formation of rank k (second-factor V).
QuasiFormation stabilize(const QuasiFormation& x, std::size_t k);

// The boundary isomorphism of the split isometric injection V into the
// ambient hyperbolic form, with the complement presented by the computed (or
// witnessed) orthogonal complement columns.
StableIso delta_of_quasiformation(const QuasiFormation& x, const ComplementMode& mode,
                                  int degree_bound = 8);

// The glued union of a stable isomorphism, as a quadratic form.
EpsQuadraticForm kappa(const StableIso& f);

// ---------------------------------------------------------------------------
// Hyperbolicity

struct HypMode {
    enum Kind { Zexact, Witness, Bounded } kind = Zexact;
    std::optional<RingMatrix> witness;
    int degree_bound = 8;
    int entry_bound = 12;  // isotropic-vector search bound for Zexact
};

struct HypResult {
    TriBool verdict = TriBool::Unknown;
    std::optional<RingMatrix> witness;  // columns of a hyperbolic basis / the isometry
    std::string obstruction;
};

// Zexact (over Z): decides exactly, with a constructed basis change to the
// hyperbolic form as witness; obstructions are odd rank, odd diagonal in the
// symmetrization, non-unit determinant, or nonzero signature.  Witness mode
// verifies the supplied isometry (in either direction).  Bounded mode only
// tries cheap witnesses over Laurent rings and otherwise reports Unknown.
HypResult hyperbolicity_test(const EpsQuadraticForm& form, const HypMode& mode);

}  // namespace qf
