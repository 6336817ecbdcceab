#pragma once

// Concrete families over Z[t,t^-1]: the one-parameter boundary automorphisms
// t_{p,n} with their SL2 hyperbolicity witness u_{p,n}, the residue-ring
// invariant that separates them, the corresponding two-sided primitive
// embeddings into the hyperbolic form, coprime algebraic fixtures, the
// four-part isometry lemma used to compare compositions of unions, and the
// diagonal sublagrangian of a self boundary isomorphism.

#include "qf/embed.hpp"

namespace qf {

// Parameters p != 0 and n (the exponent of the group element t^n), with the
// derived constants q = 1 - 4p^2, theta = p q, lambda = 2 p q.  2p and q are
// coprime: (2p)(2p) + q = 1.
struct TgParams {
    long long p = -1;
    long long n = 0;

    Int q() const { return 1 - 4 * Int(p) * Int(p); }
    Int theta() const { return Int(p) * q(); }
    Int lambda() const { return 2 * Int(p) * q(); }
};

// The boundary automorphism of (Z[t,t^-1], pq) with components
// a = 2p t^-n + q, b = 2p t^n + q, s = -t^n + p.
StableIso make_tg(long long p, long long n);

// The SL2 witness [[1 + 2p t^-n, t^-n], [p - 2p^2 t^-n, 1 - p t^-n]];
// determinant 1, and it carries the glued union of make_tg to the rank-1
// hyperbolic form.
RingMatrix make_ug(long long p, long long n);

bool verify_tg_hyperbolic(long long p, long long n);

// The b component reduced into (Z/|2p|)[t,t^-1] x (Z/|q|)[t,t^-1] and
// normalized under the diagonal unit action so the first component is 1.
struct InvariantValue {
    GroupRingElem comp_2p, comp_q;
    bool normalized = false;

    bool operator==(const InvariantValue&) const = default;
};

InvariantValue tg_invariant(long long p, long long n);

// Image of the invariant under the ring automorphism t -> t^-1.
InvariantValue twist_invariant(const InvariantValue& v);

// x * involute(x) == 1.
bool unitary_units_check(const GroupRingElem& x);

// ((L, pq) --(1 + 2p t^-n; p - 2p^2 t^-n)--> H_+(L) <--(1 + 2p t^n;
// -p + 2p^2 t^n)-- (L, -pq)) over L = Z[t,t^-1].
TwoSidedPrimEmbedding make_jg_embedding(long long p, long long n, int degree_bound = 8);

// ((R, -ab) --(-a; b)--> H_+(R) <--(a; b)-- (R, ab)) for coprime a, b > 0.
TwoSidedPrimEmbedding make_nab_fixture(const Int& a, const Int& b, Ring ring,
                                       int degree_bound = 8);

// Certificate that the boundary automorphism attached to the (a, 1) fixture
// is trivial: an explicit isometry between the fixture and the image of the
// identity boundary isomorphism under the union construction, commuting with
// both inclusions.
struct NabDeltaReport {
    bool certified = false;
    RingMatrix witness;
    bool used_alternate_sign = false;  // which of the two sign conventions worked
};

NabDeltaReport verify_nab_delta_trivial(const Int& a);

// For composable f : boundary(v'') -> boundary(v) and f' : boundary(v) ->
// boundary(v'), an explicit isometry
//   (v'' u_f -v) + (v u_{f'} -v')  ->  H_eps(V) + (v'' u_{f'f} -v')
// that (a) carries the second inclusion of f' to the second inclusion of the
// composite, (b) restricts over the first three blocks to an isometry
// (v'' u_f -v) + v -> H_eps(V) + v'', and (c) takes the diagonal column
// (j'_f; -j_{f'}) to the first hyperbolic basis column.
struct PhiLemmaReport {
    bool composable = false;
    bool isometry = false;
    bool property_a = false;
    bool property_b = false;
    bool property_c = false;
    bool ok = false;
};

PhiLemmaReport verify_phi_lemma(const StableIso& f, const StableIso& fprime);

// The column (j'_f; -1) inside union(f) + v, for a self boundary
// isomorphism f of boundary(v); the symmetrized form vanishes on it.
RingMatrix diagonal_sublagrangian(const StableIso& f);
bool diagonal_sublagrangian_vanishes(const StableIso& f);

}  // namespace qf
