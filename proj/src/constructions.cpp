#include "qf/constructions.hpp"

#include "qf/linalg.hpp"

namespace qf {

namespace {

GroupRingElem cst(const Int& c, std::int64_t m = 0) { return GroupRingElem::constant(c, m); }
GroupRingElem mono(const Int& c, std::int64_t e, std::int64_t m = 0) {
    return GroupRingElem::monomial(c, e, m);
}

}  // namespace

StableIso make_tg(long long p, long long n) {
    if (p == 0) throw DomainError("the parameter p must be nonzero");
    const Ring ring = ring_laurent();
    const TgParams par{p, n};
    const GroupRingElem q = cst(par.q()), theta = cst(par.theta()), lambda = cst(par.lambda());
    const GroupRingElem s = mono(-1, n) + cst(p);
    const GroupRingElem b = mono(2 * Int(p), n) + q;
    const GroupRingElem bbar = b.involute();
    const GroupRingElem sps = s + s.involute();

    RingMatrix alpha(2, 2, ring);
    alpha.set(0, 0, bbar);
    alpha.set(0, 1, GroupRingElem::one());
    alpha.set(1, 0, -(sps * lambda));
    alpha.set(1, 1, b);

    RingMatrix beta_inv(2, 2, ring);
    beta_inv.set(0, 0, b);
    beta_inv.set(0, 1, -sps);
    beta_inv.set(1, 0, lambda);
    beta_inv.set(1, 1, bbar);

    RingMatrix big(2, 2, ring);  // alpha * nu * alphabar^T
    big.set(0, 0, s);
    big.set(0, 1, bbar * sps);
    big.set(1, 1, -(sps * theta * sps));

    const RingMatrix ainv = alpha.inverse();
    StableIso f;
    f.alpha = alpha;
    f.beta = beta_inv.inverse();
    f.nu = ainv * big * ainv.conj_transpose();
    f.src = boundary_formation({+1, RingMatrix::scalar(theta, ring)});
    f.dst = f.src;
    f.src_stab = f.dst_stab = 1;
    return f;
}

RingMatrix make_ug(long long p, long long n) {
    const Ring ring = ring_laurent();
    const Int P = p;
    RingMatrix u(2, 2, ring);
    u.set(0, 0, cst(1) + mono(2 * P, -n));
    u.set(0, 1, mono(1, -n));
    u.set(1, 0, cst(P) + mono(-2 * P * P, -n));
    u.set(1, 1, cst(1) + mono(-P, -n));
    return u;
}

bool verify_tg_hyperbolic(long long p, long long n) {
    const StableIso f = make_tg(p, n);
    const UnionResult u = glue_union(f);
    return check_isometry(make_ug(p, n), u.form, hyperbolic(1, +1, ring_laurent()));
}

bool unitary_units_check(const GroupRingElem& x) {
    return x * x.involute() == GroupRingElem::one(x.modulus());
}

InvariantValue tg_invariant(long long p, long long n) {
    const TgParams par{p, n};
    const Int m1_i = abs(Int(2) * p), m2_i = abs(par.q());
    if (m1_i < 2 || m2_i < 2) throw DomainError("residue moduli must be at least 2");
    const std::int64_t m1 = static_cast<std::int64_t>(m1_i);
    const std::int64_t m2 = static_cast<std::int64_t>(m2_i);
    const GroupRingElem b = mono(2 * Int(p), n) + cst(par.q());
    InvariantValue inv;
    inv.comp_2p = b.with_modulus(m1);
    inv.comp_q = b.with_modulus(m2);
    if (!unitary_units_check(inv.comp_2p) || !unitary_units_check(inv.comp_q))
        throw Error("component is not a unitary unit in its residue ring");
    // Normalize under the diagonal unit action: divide both components by the
    // trivial unit equal to the first component, when there is one.
    if (inv.comp_2p.is_trivial_unit()) {
        const GroupRingElem u1 = inv.comp_2p.trivial_unit_inverse();
        // The matching unit over the other modulus has the same sign and shift.
        GroupRingElem u2(m2);
        const auto& c = u1.coeffs();
        const std::int64_t e = c.begin()->first;
        const Int sgn = c.begin()->second == 1 ? 1 : -1;
        u2 = mono(sgn, e, m2);
        inv.comp_2p *= u1;
        inv.comp_q *= u2;
        inv.normalized = true;
    }
    return inv;
}

InvariantValue twist_invariant(const InvariantValue& v) {
    return {v.comp_2p.involute(), v.comp_q.involute(), v.normalized};
}

TwoSidedPrimEmbedding make_jg_embedding(long long p, long long n, int degree_bound) {
    const Ring ring = ring_laurent();
    const Int P = p;
    TwoSidedPrimEmbedding pe;
    pe.m = hyperbolic(1, +1, ring);
    pe.j = RingMatrix(2, 1, ring);
    pe.j.set(0, 0, cst(1) + mono(2 * P, -n));
    pe.j.set(1, 0, cst(P) + mono(-2 * P * P, -n));
    pe.jprime = RingMatrix(2, 1, ring);
    pe.jprime.set(0, 0, cst(1) + mono(2 * P, n));
    pe.jprime.set(1, 0, cst(-P) + mono(2 * P * P, n));
    pe.v = restrict_form(pe.m, pe.j);
    pe.vprime = restrict_form(pe.m, pe.jprime);
    return with_sigma(pe, degree_bound);
}

TwoSidedPrimEmbedding make_nab_fixture(const Int& a, const Int& b, Ring ring,
                                       int degree_bound) {
    if (a <= 0 || b <= 0) throw DomainError("both parameters must be positive");
    if (gcd(a, b) != 1) throw DomainError("the parameters must be coprime");
    TwoSidedPrimEmbedding pe;
    pe.m = hyperbolic(1, +1, ring);
    pe.j = RingMatrix(2, 1, ring);
    pe.j.set(0, 0, cst(-a, ring.modulus));
    pe.j.set(1, 0, cst(b, ring.modulus));
    pe.jprime = RingMatrix(2, 1, ring);
    pe.jprime.set(0, 0, cst(a, ring.modulus));
    pe.jprime.set(1, 0, cst(b, ring.modulus));
    pe.v = restrict_form(pe.m, pe.j);
    pe.vprime = restrict_form(pe.m, pe.jprime);
    return with_sigma(pe, degree_bound);
}

NabDeltaReport verify_nab_delta_trivial(const Int& a) {
    const Ring ring = ring_laurent();
    const EpsQuadraticForm v{+1, RingMatrix::scalar(cst(-a), ring)};
    const StableIso del = boundary_of_isometry(RingMatrix::identity(1, ring), v, v);
    const TwoSidedPrimEmbedding glued = pr_map(del);
    const TwoSidedPrimEmbedding fixture = make_nab_fixture(a, 1, ring);

    NabDeltaReport rep;
    bool alternate = false;
    for (const Int& corner : {Int(-a), Int(a)}) {
        RingMatrix w(2, 2, ring);
        w.set(0, 1, GroupRingElem::one());
        w.set(1, 0, GroupRingElem::one());
        w.set(1, 1, cst(corner));
        const bool ok = check_isometry(w, fixture.m, glued.m) &&
                        w * fixture.j == glued.j && w * fixture.jprime == glued.jprime;
        if (ok) {
            rep.certified = true;
            rep.witness = w;
            rep.used_alternate_sign = alternate;
            return rep;
        }
        alternate = true;
    }
    return rep;
}

PhiLemmaReport verify_phi_lemma(const StableIso& f0, const StableIso& fprime0) {
    PhiLemmaReport rep;
    if (!f0.dst.hessian.equals(fprime0.src.hessian)) return rep;
    rep.composable = true;

    // Align the stabilizations so the off-template blocks multiply.
    const std::size_t k = std::max(f0.dst_stab, fprime0.src_stab);
    const StableIso f = pad_stabilization(f0, k - f0.dst_stab);
    const StableIso fp = pad_stabilization(fprime0, k - fprime0.src_stab);
    const StableIso ff = compose(fprime0, f0);

    const Ring ring = f.src.ring();
    const int eps = f.eps();
    const GroupRingElem e = cst(eps, ring.modulus);
    const std::size_t rpp = f.src.F_rank();   // rank of V''
    const std::size_t r = f.dst.F_rank();     // rank of V
    const std::size_t rp = fp.dst.F_rank();   // rank of V'

    const Components cf = components(f);
    const Components cp = components(fp);
    const RingMatrix lam = f.dst.hessian.symmetrization();
    const RingMatrix sstar = cf.s.conj_transpose();
    const RingMatrix apstar = cp.a.conj_transpose();

    auto z = [&](std::size_t a_, std::size_t b_) { return RingMatrix::zero(a_, b_, ring); };
    auto id = [&](std::size_t a_) { return RingMatrix::identity(a_, ring); };

    // Rows: V, V*, V'', V'*.  Columns: V'', V*, V, V'*.
    const RingMatrix row1 =
        cf.a.hstack(cf.s.scaled(-e)).hstack(-(sstar * lam)).hstack(-(sstar * apstar));
    const RingMatrix row2 = z(r, rpp).hstack(id(r)).hstack(-lam).hstack(-apstar);
    const RingMatrix row3 =
        id(rpp).hstack(z(rpp, r)).hstack(cf.b).hstack(-(cf.b1 * cp.a1.conj_transpose()));
    const RingMatrix row4 = z(rp, rpp).hstack(z(rp, r)).hstack(z(rp, r)).hstack(id(rp));
    const RingMatrix phi = row1.vstack(row2).vstack(row3).vstack(row4);

    const UnionResult uf = glue_union(f0);
    const UnionResult ufp = glue_union(fprime0);
    const UnionResult uff = glue_union(ff);
    const EpsQuadraticForm src = direct_sum(uf.form, ufp.form);
    const EpsQuadraticForm dst = direct_sum(hyperbolic(r, eps, ring), uff.form);
    rep.isometry = check_isometry(phi, src, dst);

    rep.property_a =
        phi * z(rpp + r, rp).vstack(ufp.jprime) == z(2 * r, rp).vstack(uff.jprime);

    const bool bottom_zero = phi.submatrix(2 * r + rpp, 0, rp, rpp + 2 * r).is_zero();
    const RingMatrix phi3 = phi.submatrix(0, 0, 2 * r + rpp, rpp + 2 * r);
    const EpsQuadraticForm src3 = direct_sum(uf.form, f0.dst.hessian);
    const EpsQuadraticForm dst3 = direct_sum(hyperbolic(r, eps, ring), f0.src.hessian);
    rep.property_b = bottom_zero && check_isometry(phi3, src3, dst3);

    rep.property_c =
        phi * uf.jprime.vstack(-ufp.j) == id(r).vstack(z(r + rpp + rp, r));

    rep.ok = rep.composable && rep.isometry && rep.property_a && rep.property_b &&
             rep.property_c;
    return rep;
}

RingMatrix diagonal_sublagrangian(const StableIso& f) {
    if (!f.src.hessian.equals(f.dst.hessian))
        throw DomainError("diagonal sublagrangian needs a self boundary isomorphism");
    const UnionResult u = glue_union(f);
    return u.jprime.vstack(-RingMatrix::identity(f.src.F_rank(), f.src.ring()));
}

bool diagonal_sublagrangian_vanishes(const StableIso& f) {
    const RingMatrix d = diagonal_sublagrangian(f);
    const EpsQuadraticForm amb = direct_sum(glue_union(f).form, f.src.hessian);
    return (d.conj_transpose() * amb.symmetrization() * d).is_zero();
}

}  // namespace qf
