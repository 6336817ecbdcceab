#pragma once

// Gluing of forms along stable isomorphisms, split isometric embeddings and
// the two constructions relating them (an embedding gives a boundary
// isomorphism and vice versa), two-sided primitive embeddings with their
// three-valued comparison, extended symmetric forms, and the exhaustive
// classification of rank-1 two-sided primitive embeddings into the integral
// hyperbolic form.

#include "qf/formations.hpp"

namespace qf {

enum class TriBool { True, False, Unknown };

// ---------------------------------------------------------------------------
// Union of forms along a stable isomorphism

struct UnionResult {
    EpsQuadraticForm form;  // on V + V'^*
    RingMatrix j, jprime;   // the two canonical split isometric inclusions
};

// (V, theta) glued with (V', -theta') along f : boundary(v) -> boundary(v'):
// psi = [[theta, 0], [eps a, -s]]; j = (1; 0), j' = (b; -lambda').
UnionResult glue_union(const StableIso& f);

// ---------------------------------------------------------------------------
// Orthogonal complements

struct ComplementMode {
    enum Kind { Zexact, Witness, Bounded } kind = Zexact;
    std::optional<RingMatrix> witness;
    int degree_bound = 8;
};

// Columns spanning the orthogonal complement of the columns of j inside the
// (nonsingular) form m, as a split summand.  Zexact works over Z; Witness
// certifies a supplied candidate; Bounded searches over Laurent rings.
RingMatrix orthogonal_complement(const EpsQuadraticForm& m, const RingMatrix& j,
                                 const ComplementMode& mode);

// ---------------------------------------------------------------------------
// Two-sided primitive embeddings

struct TwoSidedPrimEmbedding {
    EpsQuadraticForm v, vprime, m;
    RingMatrix j, jprime;  // m.rank x v.rank and m.rank x vprime.rank
    // Splitting witness: conj_transpose(jprime) * phi * sigma = identity,
    // where phi is the symmetrization of m.
    std::optional<RingMatrix> sigma;
};

struct EmbeddingReport {
    bool v_restricts = false, vprime_restricts = false;
    bool j_split = false, jprime_split = false;
    bool orthogonal = false;       // cross pairing vanishes
    bool sigma_valid = false;
    bool complement_certified = false;  // image of jprime is exactly j(v)-perp
    bool ok = false;
};

EmbeddingReport validate_embedding(const TwoSidedPrimEmbedding& pe, int degree_bound);

// Return a copy with sigma present: verified if supplied, computed otherwise
// (exactly over Z, by bounded search over Laurent rings).  Throws
// NotInvertible-style Error if no splitting is found.
TwoSidedPrimEmbedding with_sigma(TwoSidedPrimEmbedding pe, int degree_bound);

// The boundary isomorphism of a split isometric injection, presented on the
// complement jprime: a stable isomorphism from boundary(v) to
// boundary(V', -theta'), with components a = -sigma^bar-T phi^bar-T j,
// b = -sigmatilde jperp, s = -sigma^bar-T psi sigma.
StableIso f_from_embedding(const TwoSidedPrimEmbedding& pe, int degree_bound);

// The boundary-isomorphism image of a two-sided primitive embedding (the
// complement identification is absorbed by presenting the complement on
// vprime's coordinates).
StableIso delta_map(const TwoSidedPrimEmbedding& pe, int degree_bound);

// The isometry (j | -sigma) from the glued union back to m.
RingMatrix r_iso(const TwoSidedPrimEmbedding& pe, int degree_bound);

// The two-sided primitive embedding (v -> union <- -v') carried by a stable
// isomorphism.
TwoSidedPrimEmbedding pr_map(const StableIso& f);

// ---------------------------------------------------------------------------
// Comparison

enum class PrimFlavor { Prim, LPrim, RPrim, BPrim };

struct PrimCompareOptions {
    int degree_bound = 8;
    int unit_exp_bound = 8;
    bool allow_group_twist = false;
    PrimFlavor flavor = PrimFlavor::BPrim;
};

struct PrimCompareOutcome {
    Verdict verdict = Verdict::Unknown;
    bool used_group_twist = false;
    std::optional<RingMatrix> k, phi, phiprime;  // ambient isometry + end twists
    std::string reason;
};

PrimCompareOutcome bprim_compare(const TwoSidedPrimEmbedding& a,
                                 const TwoSidedPrimEmbedding& b,
                                 const PrimCompareOptions& opts = {});

// Apply the ring automorphism t -> t^-1 to every matrix of the embedding.
TwoSidedPrimEmbedding twist_embedding(const TwoSidedPrimEmbedding& pe);

// ---------------------------------------------------------------------------
// Extended symmetric forms

struct ExtendedSymmetricForm {
    RingMatrix lambda;  // 2r x 2r, even symmetric, nonsingular
    RingMatrix nu;      // r x 2r, surjective
};

// The quadratic refinement of lambda (upper triangle, halved diagonal).
EpsQuadraticForm esf_carrier(const ExtendedSymmetricForm& e);

// (ker(nu) -> carrier <- lambda^-1 nu^bar-T), with all certificates.
TwoSidedPrimEmbedding esf_to_embedding(const ExtendedSymmetricForm& e, int degree_bound);

// ---------------------------------------------------------------------------
// Extendedness over the constants

// Augmentation t -> 1 applied entrywise; result lives over Z (or Z/m).
TwoSidedPrimEmbedding augment_embedding(const TwoSidedPrimEmbedding& pe);

// Reinterpret a constant-entry embedding over the Laurent ring.
TwoSidedPrimEmbedding extend_embedding_to_laurent(const TwoSidedPrimEmbedding& pe);

// Is the Laurent embedding isomorphic (in the both-sided sense) to the
// constant-coefficient extension of its augmentation?
TriBool check_extended(const TwoSidedPrimEmbedding& pe, int degree_bound);

// ---------------------------------------------------------------------------
// Classification over Z

// The four isometries of the rank-1 hyperbolic form over Z.
std::vector<RingMatrix> hyperbolic_rank1_autos(Ring ring);

// The standard embedding pair for a coprime factorization q = y1 y2:
// j = (y1; y2), jprime = (-y1; y2) or (y1; -y2).
TwoSidedPrimEmbedding make_coprime_embedding_Z(const Int& y1, const Int& y2, bool plus_j);

struct PrimEnumeration {
    Int q;
    std::size_t k_primes = 0;
    std::vector<std::pair<Int, Int>> factorizations;  // coprime, up to swap and sign
    std::size_t count_F = 0, count_bF = 0;
    std::vector<TwoSidedPrimEmbedding> representatives;
};

// Classification by coprime factorizations of q.
PrimEnumeration enumerate_prim_Z(const Int& q);

struct PrimOrbitCounts {
    std::size_t F = 0, bF = 0, lF = 0, rF = 0;
};

// Independent exhaustive count: all integral column pairs with the right
// restrictions and orthogonality, counted up to ambient isometries and the
// optional sign actions on either end.
PrimOrbitCounts count_prim_orbits_bruteforce(const Int& q);

}  // namespace qf
