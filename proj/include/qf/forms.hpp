#pragma once

// Epsilon-quadratic forms: a square matrix psi over one of the supported
// rings, considered up to the subgroup { y - eps * ybar^T }.  q_canonical
// picks the canonical representative (strictly upper-triangular off-diagonal
// part, folded diagonal) and everything else compares through it.

#include <optional>

#include "qf/matrix.hpp"

namespace qf {

// Canonical representative of psi in Q_eps: all mass moved above the
// diagonal, and each diagonal entry folded so that only exponents >= 0
// survive (for eps = -1 additionally the constant term is reduced mod 2,
// or mod gcd(2, m) over a residue ring).
RingMatrix q_canonical(const RingMatrix& psi, int eps);

// Equality in Q_eps.
bool q_equal(const RingMatrix& psi1, const RingMatrix& psi2, int eps);

struct EpsQuadraticForm {
    int eps = +1;
    RingMatrix psi;

    std::size_t rank() const { return psi.rows(); }
    const Ring& ring() const { return psi.ring(); }

    // psi + eps * psibar^T; the underlying eps-symmetric form.
    RingMatrix symmetrization() const;
    EpsQuadraticForm canonicalized() const { return {eps, q_canonical(psi, eps)}; }
    EpsQuadraticForm negated() const { return {eps, -psi}; }

    // Equality as quadratic forms (same eps, same ring, q-equal matrices).
    bool equals(const EpsQuadraticForm& o) const;
};

// Hyperbolic form on L + L* for L of the given rank: psi = [[0, I], [0, 0]],
// symmetrization [[0, I], [eps I, 0]].
EpsQuadraticForm hyperbolic(std::size_t rank, int eps, Ring ring);

EpsQuadraticForm direct_sum(const EpsQuadraticForm& a, const EpsQuadraticForm& b);

// h : (V, src) -> (W, dst) as the matrix of the underlying module map, i.e.
// a dst.rank() x src.rank() matrix with hbar^T * psi_dst * h = psi_src in Q_eps.
bool check_isometry(const RingMatrix& h, const EpsQuadraticForm& src,
                    const EpsQuadraticForm& dst);

// Pull a form back along the columns of j (an injection V' -> V).
EpsQuadraticForm restrict_form(const EpsQuadraticForm& form, const RingMatrix& j);

// Remove coordinates whose row and column vanish in both the canonical psi
// and the symmetrization.  kept[i] is the original index of coordinate i.
struct StripResult {
    EpsQuadraticForm form;
    std::vector<std::size_t> kept;
};
StripResult zero_stable_strip(const EpsQuadraticForm& form);

// Simple-lagrangian test for the columns of j inside the ambient form:
// (a) the form vanishes on the image, (b) the rank is half the ambient rank,
// (c) together with the witness columns j spans (unit determinant), and
// (d) the witness is dual to j under the symmetrization.
// Without a witness only (a) and (b) are checked (reported as partial).
struct LagrangianReport {
    bool vanishes = false;
    bool half_rank = false;
    bool witness_spans = false;
    bool witness_dual = false;
    bool certified = false;  // all four with a witness
};
LagrangianReport check_lagrangian(const RingMatrix& j, const EpsQuadraticForm& ambient,
                                  const std::optional<RingMatrix>& witness);

}  // namespace qf
