#include "qf/formations.hpp"

#include "qf/linalg.hpp"

namespace qf {

bool SplitFormation::equals(const SplitFormation& o) const {
    return gamma == o.gamma && delta == o.delta && hessian.equals(o.hessian);
}

SplitFormation boundary_formation(const EpsQuadraticForm& v) {
    return {RingMatrix::identity(v.rank(), v.ring()), v.symmetrization(), v};
}

LagrangianReport formation_lagrangian_check(const SplitFormation& x,
                                            const std::optional<RingMatrix>& witness) {
    EpsQuadraticForm ambient = hyperbolic(x.G_rank(), -x.eps(), x.ring());
    return check_lagrangian(x.gamma.vstack(x.delta), ambient, witness);
}

static GroupRingElem eps_scalar(int eps, const Ring& ring) {
    return GroupRingElem::constant(eps, ring.modulus);
}

Components components(const StableIso& f) {
    const std::size_t r = f.src.F_rank(), rp = f.dst.F_rank(), n = f.total();
    if (f.alpha.rows() != n || f.alpha.cols() != n || f.beta.rows() != n ||
        f.beta.cols() != n || f.nu.rows() != n || f.nu.cols() != n ||
        rp + f.dst_stab != n)
        throw ShapeError("stable isomorphism with inconsistent sizes");
    RingMatrix binv = f.beta.inverse();
    RingMatrix m = f.alpha * f.nu * f.alpha.conj_transpose();
    return {
        f.alpha.submatrix(0, 0, rp, r),
        binv.submatrix(0, 0, r, rp),
        q_canonical(m.submatrix(0, 0, rp, rp), f.eps()),
        f.alpha.submatrix(0, r, rp, n - r),
        binv.submatrix(0, rp, r, n - rp),
    };
}

StableIsoReport check_stable_iso(const StableIso& f) {
    StableIsoReport rep;
    const std::size_t r = f.src.F_rank(), rp = f.dst.F_rank(), n = f.total();
    const int eps = f.eps();
    if (f.dst.eps() != eps || !(f.src.ring() == f.dst.ring())) {
        rep.detail = "endpoint formations live over different rings or signs";
        return rep;
    }
    if (f.alpha.rows() != n || f.alpha.cols() != n || f.beta.rows() != n ||
        f.beta.cols() != n || f.nu.rows() != n || f.nu.cols() != n ||
        rp + f.dst_stab != n) {
        rep.detail = "matrix sizes do not match the stabilized ranks";
        return rep;
    }
    rep.shapes_ok = true;

    GroupRingElem det_a = f.alpha.det(), det_b = f.beta.det();
    rep.simple_alpha = det_a.is_trivial_unit();
    rep.simple_beta = det_b.is_trivial_unit();
    rep.alpha_invertible = rep.simple_alpha;
    rep.beta_invertible = rep.simple_beta;
    if (!rep.simple_alpha || !rep.simple_beta) {
        rep.detail = "alpha or beta is not simple (determinant " + det_a.to_string() + ", " +
                     det_b.to_string() + ")";
        return rep;
    }

    Components c = components(f);
    RingMatrix binv = f.beta.inverse();
    RingMatrix lambda = f.src.hessian.symmetrization();
    RingMatrix lambdap = f.dst.hessian.symmetrization();
    const RingMatrix& theta = f.src.hessian.psi;
    const RingMatrix& thetap = f.dst.hessian.psi;
    GroupRingElem e = eps_scalar(eps, f.src.ring());

    rep.block_alpha21 =
        f.alpha.submatrix(rp, 0, n - rp, r) == (c.b1.conj_transpose() * lambda).scaled(e);
    rep.block_beta21 = binv.submatrix(r, 0, n - r, rp) == c.a1.conj_transpose() * lambdap;
    rep.block_corner = f.alpha.submatrix(rp, r, n - rp, n - r) ==
                       binv.submatrix(r, rp, n - r, n - rp).conj_transpose();

    // alpha nu alphabar^T = [[s, -eps a b1], [0, -b1bar^T theta b1]] in Q_eps.
    RingMatrix m = f.alpha * f.nu * f.alpha.conj_transpose();
    RingMatrix tmpl = RingMatrix::zero(n, n, f.src.ring());
    for (std::size_t i = 0; i < rp; ++i)
        for (std::size_t j = 0; j < rp; ++j) tmpl.set(i, j, c.s.at(i, j));
    RingMatrix tr = (c.a * c.b1).scaled(-e);
    for (std::size_t i = 0; i < rp; ++i)
        for (std::size_t j = 0; j < n - rp; ++j) tmpl.set(i, rp + j, tr.at(i, j));
    RingMatrix br = -(c.b1.conj_transpose() * theta * c.b1);
    for (std::size_t i = 0; i < n - rp; ++i)
        for (std::size_t j = 0; j < n - rp; ++j) tmpl.set(rp + i, rp + j, br.at(i, j));
    rep.nu_template = q_equal(m, tmpl, eps);

    rep.cond_i = c.a * c.b + (c.s.conj_transpose() + c.s.scaled(e)) * lambdap ==
                 RingMatrix::identity(rp, f.src.ring());
    rep.cond_ii = c.a.conj_transpose() * lambdap == lambda * c.b;
    rep.cond_iii =
        q_equal(thetap, c.b.conj_transpose() * theta * c.b +
                            lambdap.conj_transpose() * c.s * lambdap, eps);

    rep.ok = rep.shapes_ok && rep.simple_alpha && rep.simple_beta && rep.block_alpha21 &&
             rep.block_beta21 && rep.block_corner && rep.nu_template && rep.cond_i &&
             rep.cond_ii && rep.cond_iii;
    if (!rep.ok && rep.detail.empty()) {
        rep.detail = "failed:";
        auto tag = [&](bool v, const char* name) {
            if (!v) rep.detail += std::string(" ") + name;
        };
        tag(rep.block_alpha21, "alpha21");
        tag(rep.block_beta21, "beta21");
        tag(rep.block_corner, "corner");
        tag(rep.nu_template, "nu-template");
        tag(rep.cond_i, "(i)");
        tag(rep.cond_ii, "(ii)");
        tag(rep.cond_iii, "(iii)");
    }
    return rep;
}

StableIso pad_stabilization(const StableIso& f, std::size_t k) {
    if (k == 0) return f;
    RingMatrix id = RingMatrix::identity(k, f.src.ring());
    RingMatrix z = RingMatrix::zero(k, k, f.src.ring());
    StableIso g = f;
    g.alpha = RingMatrix::block_diag(f.alpha, id);
    g.beta = RingMatrix::block_diag(f.beta, id);
    g.nu = RingMatrix::block_diag(f.nu, z);
    g.src_stab += k;
    g.dst_stab += k;
    return g;
}

StableIso identity_iso(const SplitFormation& x) {
    RingMatrix id = RingMatrix::identity(x.F_rank(), x.ring());
    return {id, id, RingMatrix::zero(x.F_rank(), x.F_rank(), x.ring()), x, x, 0, 0};
}

StableIso compose(const StableIso& second, const StableIso& first) {
    if (!first.dst.equals(second.src))
        throw DomainError("composition endpoints do not match");
    const std::size_t n = std::max(first.total(), second.total());
    StableIso f = pad_stabilization(first, n - first.total());
    StableIso g = pad_stabilization(second, n - second.total());
    RingMatrix ainv = f.alpha.inverse();
    StableIso r;
    r.alpha = g.alpha * f.alpha;
    r.beta = g.beta * f.beta;
    r.nu = f.nu + ainv * g.nu * ainv.conj_transpose();
    r.src = first.src;
    r.dst = second.dst;
    r.src_stab = n - r.src.F_rank();
    r.dst_stab = n - r.dst.F_rank();
    return r;
}

StableIso invert(const StableIso& f) {
    StableIso r;
    r.alpha = f.alpha.inverse();
    r.beta = f.beta.inverse();
    r.nu = -(f.alpha * f.nu * f.alpha.conj_transpose());
    r.src = f.dst;
    r.dst = f.src;
    r.src_stab = f.dst_stab;
    r.dst_stab = f.src_stab;
    return r;
}

StableIso boundary_of_isometry(const RingMatrix& h, const EpsQuadraticForm& v,
                               const EpsQuadraticForm& w) {
    if (!check_isometry(h, v, w))
        throw DomainError("boundary_of_isometry: matrix is not an isometry");
    return {h, h, RingMatrix::zero(h.rows(), h.rows(), v.ring()), boundary_formation(v),
            boundary_formation(w), 0, 0};
}

StableIso act_by_isometries(const RingMatrix& h1, const RingMatrix& h2, const StableIso& f) {
    StableIso bd1 = boundary_of_isometry(h1, f.src.hessian, f.src.hessian);
    StableIso bd2 = boundary_of_isometry(h2, f.dst.hessian, f.dst.hessian);
    return compose(bd2, compose(f, invert(bd1)));
}

static void require_same_endpoints(const StableIso& f, const StableIso& g) {
    if (!f.src.hessian.equals(g.src.hessian) || !f.dst.hessian.equals(g.dst.hessian))
        throw DomainError("homotopy requires identical endpoint forms");
}

bool check_homotopy(const StableIso& f, const StableIso& g, const RingMatrix& delta) {
    require_same_endpoints(f, g);
    Components cf = components(f), cg = components(g);
    RingMatrix lambda = f.src.hessian.symmetrization();
    RingMatrix lambdap = f.dst.hessian.symmetrization();
    const RingMatrix& theta = f.src.hessian.psi;
    GroupRingElem e = eps_scalar(f.eps(), f.src.ring());
    RingMatrix dstar = delta.conj_transpose();
    bool c1 = cg.a - cf.a == delta * lambda;
    bool c2 = cg.b - cf.b == dstar * lambdap.conj_transpose();
    RingMatrix rhs = ((cg.a * dstar).scaled(-e) - delta * theta) * dstar;
    bool c3 = q_equal(cg.s - cf.s, rhs, f.eps());
    return c1 && c2 && c3;
}

std::optional<RingMatrix> find_homotopy(const StableIso& f, const StableIso& g,
                                        int degree_bound) {
    require_same_endpoints(f, g);
    const std::size_t r = f.src.F_rank(), rp = f.dst.F_rank();
    RingMatrix zero = RingMatrix::zero(rp, r, f.src.ring());
    if (check_homotopy(f, g, zero)) return zero;

    Components cf = components(f), cg = components(g);
    RingMatrix lambda = f.src.hessian.symmetrization();
    RingMatrix lambdap = f.dst.hessian.symmetrization();

    // Delta * lambda = a_g - a_f, solved via the transpose.
    auto dt = solve_linear(lambda.transpose(), (cg.a - cf.a).transpose(), degree_bound);
    if (dt) {
        RingMatrix delta = dt->transpose();
        if (check_homotopy(f, g, delta)) return delta;
    }
    // Deltabar^T * lambda'bar^T = b_g - b_f, likewise.
    auto dst = solve_linear(lambdap.conj_transpose().transpose(),
                            (cg.b - cf.b).transpose(), degree_bound);
    if (dst) {
        RingMatrix delta = dst->transpose().conj_transpose();
        if (check_homotopy(f, g, delta)) return delta;
    }
    return std::nullopt;
}

std::vector<RingMatrix> isometry_candidates(const EpsQuadraticForm& v, int exp_bound) {
    std::vector<RingMatrix> out;
    const Ring& ring = v.ring();
    if (v.rank() == 1) {
        if (ring.laurent) {
            for (int k = -exp_bound; k <= exp_bound; ++k)
                for (int sign : {1, -1}) {
                    RingMatrix h = RingMatrix::scalar(
                        GroupRingElem::monomial(sign, k, ring.modulus), ring);
                    if (check_isometry(h, v, v)) out.push_back(h);
                }
        } else {
            for (int sign : {1, -1}) {
                RingMatrix h =
                    RingMatrix::scalar(GroupRingElem::constant(sign, ring.modulus), ring);
                if (check_isometry(h, v, v)) out.push_back(h);
            }
        }
        return out;
    }
    RingMatrix id = RingMatrix::identity(v.rank(), ring);
    for (const RingMatrix& h : {id, -id})
        if (check_isometry(h, v, v)) out.push_back(h);
    return out;
}

// Deterministic total order on elements used to pick orbit representatives.
static bool elem_less(const GroupRingElem& x, const GroupRingElem& y) {
    auto ix = x.coeffs().begin(), iy = y.coeffs().begin();
    while (ix != x.coeffs().end() && iy != y.coeffs().end()) {
        if (ix->first != iy->first) return ix->first < iy->first;
        if (ix->second != iy->second) return ix->second < iy->second;
        ++ix;
        ++iy;
    }
    return iy != y.coeffs().end();
}

GroupRingElem unit_orbit_canonical(const GroupRingElem& x, bool laurent) {
    if (x.is_zero()) return x;
    GroupRingElem a = x, b = -x;
    if (laurent) {
        a = a.shifted(-a.min_exponent());
        b = b.shifted(-b.min_exponent());
    }
    return elem_less(a, b) ? a : b;
}

BoundaryInvariant boundary_invariant(const StableIso& f) {
    BoundaryInvariant inv;
    if (f.src.F_rank() != 1 || f.dst.F_rank() != 1) return inv;
    GroupRingElem lam = f.src.hessian.symmetrization().at(0, 0);
    GroupRingElem lamp = f.dst.hessian.symmetrization().at(0, 0);
    if (!lam.is_constant() || lam.is_zero() || !lamp.is_constant() || lamp.is_zero())
        return inv;
    Int cm = abs(lam.constant_term()), cmp = abs(lamp.constant_term());
    if (cm > (std::numeric_limits<std::int64_t>::max)() ||
        cmp > (std::numeric_limits<std::int64_t>::max)())
        return inv;
    Components c = components(f);
    const bool laurent = f.src.ring().laurent;
    inv.applicable = true;
    inv.a_modulus = cm;
    inv.b_modulus = cmp;
    inv.a_class = unit_orbit_canonical(
        c.a.at(0, 0).with_modulus(static_cast<std::int64_t>(cm)), laurent);
    inv.b_class = unit_orbit_canonical(
        c.b.at(0, 0).with_modulus(static_cast<std::int64_t>(cmp)), laurent);
    return inv;
}

CompareOutcome biso_compare(const StableIso& f, const StableIso& g,
                            const CompareOptions& opts) {
    CompareOutcome out;
    if (!f.src.hessian.equals(g.src.hessian) || !f.dst.hessian.equals(g.dst.hessian)) {
        out.verdict = Verdict::Distinct;
        out.reason = "endpoint forms differ";
        return out;
    }
    BoundaryInvariant inv_f = boundary_invariant(f), inv_g = boundary_invariant(g);
    const bool separated = inv_f.applicable && inv_g.applicable && !(inv_f == inv_g);
    if (separated) {
        out.verdict = Verdict::Distinct;
        out.reason = "unit-orbit invariant of the (a, b) components differs: (" +
                     inv_f.a_class.to_string() + ", " + inv_f.b_class.to_string() + ") vs (" +
                     inv_g.a_class.to_string() + ", " + inv_g.b_class.to_string() + ")";
        return out;
    }
    for (const RingMatrix& h1 : isometry_candidates(f.src.hessian, opts.unit_exp_bound))
        for (const RingMatrix& h2 : isometry_candidates(f.dst.hessian, opts.unit_exp_bound)) {
            StableIso fh = act_by_isometries(h1, h2, f);
            if (auto delta = find_homotopy(fh, g, opts.degree_bound)) {
                out.verdict = Verdict::Equal;
                out.h1 = h1;
                out.h2 = h2;
                out.delta = *delta;
                out.reason = "homotopy found after acting by endpoint isometries";
                return out;
            }
        }
    out.verdict = Verdict::Unknown;
    out.reason = "no separating invariant and no certificate found within bounds";
    return out;
}

}  // namespace qf
