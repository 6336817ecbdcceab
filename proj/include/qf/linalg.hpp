#pragma once

// Exact linear algebra: Smith normal form over Z, integer/residue/Laurent
// linear solvers, kernels, split-injection tests and signatures.  The Laurent
// solver searches for solutions whose entries have exponents in a bounded
// window by reducing to one integer system per unknown column.

#include <optional>

#include "qf/matrix.hpp"

namespace qf {

// U * A * V = S with U, V unimodular and S diagonal, each diagonal entry
// dividing the next.  All matrices are over Z (modulus 0, constant entries).
struct SmithResult {
    RingMatrix U, S, V;
    std::vector<Int> divisors;  // nonzero diagonal entries of S, in order
};

SmithResult smith_normal_form(const RingMatrix& a);

// Basis of { x : A x = 0 } over Z, returned as the columns of a matrix
// (possibly with zero columns count).  The basis spans a saturated sublattice.
RingMatrix kernel_Z(const RingMatrix& a);

// One solution of A X = B over Z, if any.
std::optional<RingMatrix> solve_Z(const RingMatrix& a, const RingMatrix& b);

// General bounded solver over the ring of A: finds X with A X = B whose
// entries are supported on exponents in [-degree_bound, degree_bound].
// Over Z (laurent == false) the bound is ignored and the solve is exact.
std::optional<RingMatrix> solve_linear(const RingMatrix& a, const RingMatrix& b,
                                       int degree_bound);

// Left inverse: Y with Y A = I, i.e. A is a split injection.  Over Laurent
// rings the witness search is degree-bounded.
std::optional<RingMatrix> left_inverse(const RingMatrix& a, int degree_bound);

// True iff the integer columns of a and b span the same sublattice of Z^n.
bool same_column_span_Z(const RingMatrix& a, const RingMatrix& b);

// Signature (p - n) of a symmetric integer matrix, computed exactly over Q.
// Throws DomainError if the matrix is not symmetric or not over Z.
long long signature_Z(const RingMatrix& sym);

// Convenience: all divisors d > 0 of n > 0.
std::vector<Int> positive_divisors(const Int& n);

}  // namespace qf
