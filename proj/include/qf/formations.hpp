#pragma once

// Split quadratic formations, their stable isomorphisms (alpha, beta, nu),
// the component calculus (a, b, s), homotopies between stable isomorphisms
// and a three-valued comparison of boundary isomorphisms up to isometry
// actions on both ends.

#include <optional>
#include <string>

#include "qf/forms.hpp"

namespace qf {

// (F, (gamma; delta)(G, theta)): gamma : F -> G and delta : F -> G* given as
// G_rank x F_rank matrices; the hessian is the eps-quadratic form (G, theta).
// The column (gamma; delta) is a simple lagrangian of the hyperbolic form of
// the opposite sign on G + G*.
struct SplitFormation {
    RingMatrix gamma, delta;
    EpsQuadraticForm hessian;

    std::size_t F_rank() const { return gamma.cols(); }
    std::size_t G_rank() const { return gamma.rows(); }
    int eps() const { return hessian.eps; }
    const Ring& ring() const { return hessian.ring(); }

    bool equals(const SplitFormation& o) const;
};

// Boundary of an eps-quadratic form (V, theta): gamma = 1, delta = the
// symmetrization, hessian (V, theta).
SplitFormation boundary_formation(const EpsQuadraticForm& v);

// Lagrangian certificate for the column (gamma; delta) inside the hyperbolic
// form of sign -eps on G + G*.
LagrangianReport formation_lagrangian_check(const SplitFormation& x,
                                            const std::optional<RingMatrix>& witness);

// Stable isomorphism f = (alpha, beta, nu) from src + (P, P*) to
// dst + (P', P'*), where src_stab = rank P and dst_stab = rank P'.
// alpha and beta have dst.F_rank + dst_stab rows and src.F_rank + src_stab
// columns; nu is a square matrix of that size representing a class in Q_eps.
struct StableIso {
    RingMatrix alpha, beta, nu;
    SplitFormation src, dst;
    std::size_t src_stab = 0, dst_stab = 0;

    std::size_t total() const { return src.F_rank() + src_stab; }
    int eps() const { return src.eps(); }
};

// The (a, b, s) components together with the off-diagonal blocks of the
// block template; s is the canonical Q_eps representative of the top-left
// block of alpha * nu * alpha^bar-T.
struct Components {
    RingMatrix a, b, s, a1, b1;
};

Components components(const StableIso& f);

struct StableIsoReport {
    bool shapes_ok = false;
    bool alpha_invertible = false, beta_invertible = false;
    bool simple_alpha = false, simple_beta = false;   // trivial-unit determinants
    bool block_alpha21 = false;   // alpha lower-left equals eps * b1bar^T * lambda
    bool block_beta21 = false;    // beta^-1 lower-left equals a1bar^T * lambda'
    bool block_corner = false;    // alpha lower-right is dual to beta^-1 lower-right
    bool nu_template = false;     // alpha nu alphabar^T matches the block template
    bool cond_i = false;          // 1 = a b + (sbar^T + eps s) lambda'
    bool cond_ii = false;         // abar^T lambda' = lambda b
    bool cond_iii = false;        // theta' = bbar^T theta b + lambda'bar^T s lambda'
    bool ok = false;
    std::string detail;
};

StableIsoReport check_stable_iso(const StableIso& f);

// Append k extra trivial-summand coordinates on both sides.
StableIso pad_stabilization(const StableIso& f, std::size_t k);

StableIso identity_iso(const SplitFormation& x);
StableIso compose(const StableIso& second, const StableIso& first);
StableIso invert(const StableIso& f);

// Boundary of an isometry h : (V, theta_v) -> (W, theta_w), i.e. (h, h, 0).
StableIso boundary_of_isometry(const RingMatrix& h, const EpsQuadraticForm& v,
                               const EpsQuadraticForm& w);

// (h1, h2) . f, where h1 is a self-isometry of the source form and h2 one of
// the destination form.
StableIso act_by_isometries(const RingMatrix& h1, const RingMatrix& h2, const StableIso& f);

// Component-level homotopy criterion: a' - a = Delta lambda,
// b' - b = Deltabar^T lambda'bar^T, s' - s = (-eps a' Deltabar^T
// - Delta theta) Deltabar^T (the last in Q_eps).  Both stable isomorphisms
// must share endpoint forms.
bool check_homotopy(const StableIso& f, const StableIso& g, const RingMatrix& delta);
std::optional<RingMatrix> find_homotopy(const StableIso& f, const StableIso& g,
                                        int degree_bound);

// Self-isometry candidates of a form used in comparison searches.  For forms
// of rank 1 over Z or Z[t,t^-1] this is the full automorphism group (units
// are +-t^k only), truncated to |k| <= exp_bound.
std::vector<RingMatrix> isometry_candidates(const EpsQuadraticForm& v, int exp_bound);

// Canonical representative of a scalar modulo multiplication by +-t^k
// (just +- when laurent is false): shift the lowest exponent to zero and pick
// the lexicographically smaller of the +- pair.
GroupRingElem unit_orbit_canonical(const GroupRingElem& x, bool laurent);

// Complete invariant of the b component for boundary isomorphisms between
// rank-1 forms whose destination symmetrization is a nonzero constant c:
// homotopies move b by multiples of c and the isometry actions by units, so
// the unit-orbit class of b mod |c| is well defined; when in addition the
// source symmetrization is a nonzero constant, the analogous class of the a
// component mod that constant is recorded too.
struct BoundaryInvariant {
    bool applicable = false;
    Int b_modulus = 0, a_modulus = 0;
    GroupRingElem b_class, a_class;

    bool operator==(const BoundaryInvariant&) const = default;
};
BoundaryInvariant boundary_invariant(const StableIso& f);

struct CompareOptions {
    int degree_bound = 8;
    int unit_exp_bound = 8;
};

enum class Verdict { Equal, Distinct, Unknown };

struct CompareOutcome {
    Verdict verdict = Verdict::Unknown;
    // For Equal: the pair of isometries and the homotopy certifying it.
    std::optional<RingMatrix> h1, h2, delta;
    std::string reason;
};

// Compare boundary isomorphisms modulo isometries of both endpoint forms and
// stable homotopy.  Equal comes with a certificate; Distinct only when a
// sound invariant separates; otherwise Unknown.
CompareOutcome biso_compare(const StableIso& f, const StableIso& g,
                            const CompareOptions& opts = {});

}  // namespace qf
