#include "qf/embed.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qf/linalg.hpp"

namespace qf {

// ---------------------------------------------------------------------------
// Union

UnionResult glue_union(const StableIso& f) {
    const Components c = components(f);
    const int eps = f.eps();
    const Ring ring = f.src.ring();
    const std::size_t r = f.src.F_rank(), rp = f.dst.F_rank();
    const RingMatrix theta = f.src.hessian.psi;
    const RingMatrix lam_p = f.dst.hessian.symmetrization();

    RingMatrix top = theta.hstack(RingMatrix::zero(r, rp, ring));
    RingMatrix bottom =
        c.a.scaled(GroupRingElem::constant(eps, ring.modulus)).hstack(-c.s);
    UnionResult u{{eps, top.vstack(bottom)},
                  RingMatrix::identity(r, ring).vstack(RingMatrix::zero(rp, r, ring)),
                  c.b.vstack(-lam_p)};
    return u;
}

// ---------------------------------------------------------------------------
// Orthogonal complements

namespace {

// Bounded-exponent kernel over a Laurent ring: unknown vectors are supported
// on exponents in [-bound, bound]; returns candidate columns (not necessarily
// a split summand -- callers certify).
std::vector<RingMatrix> kernel_bounded(const RingMatrix& a, int bound) {
    if (a.ring().modulus != 0)
        throw DomainError("bounded kernel requires characteristic zero");
    const std::size_t n = a.cols();
    std::int64_t amin = 0, amax = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (a.at(i, j).is_zero()) continue;
            amin = std::min(amin, a.at(i, j).min_exponent());
            amax = std::max(amax, a.at(i, j).max_exponent());
        }
    const std::int64_t lo = amin - bound, hi = amax + bound;
    const std::size_t window = static_cast<std::size_t>(2 * bound + 1);
    const std::size_t out_window = static_cast<std::size_t>(hi - lo + 1);
    const std::size_t ncols = n * window;
    RingMatrix sys(a.rows() * out_window, ncols, ring_Z());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [e, coef] : a.at(i, j).coeffs())
                for (std::size_t w = 0; w < window; ++w) {
                    const std::int64_t xexp = -bound + static_cast<std::int64_t>(w);
                    const std::int64_t oexp = e + xexp;
                    const std::size_t row = i * out_window + static_cast<std::size_t>(oexp - lo);
                    const std::size_t col = j * window + w;
                    sys.set(row, col, sys.at(row, col) + GroupRingElem::constant(coef));
                }
    RingMatrix ker = kernel_Z(sys);
    std::vector<RingMatrix> out;
    for (std::size_t kcol = 0; kcol < ker.cols(); ++kcol) {
        RingMatrix v(n, 1, a.ring());
        for (std::size_t j = 0; j < n; ++j) {
            GroupRingElem e(a.ring().modulus);
            for (std::size_t w = 0; w < window; ++w)
                e.set_coeff(-bound + static_cast<std::int64_t>(w),
                            ker.at(j * window + w, kcol).constant_term());
            v.set(j, 0, e);
        }
        if (!v.is_zero()) out.push_back(v);
    }
    return out;
}

bool all_constant(const RingMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).is_constant()) return false;
    return true;
}

// Kernel of a as a split summand, over Z exactly or over a Laurent ring by
// bounded search.  Throws if it cannot produce a certified split kernel.
RingMatrix split_kernel(const RingMatrix& a, int degree_bound) {
    const Ring ring = a.ring();
    if (!ring.laurent || (ring.modulus == 0 && all_constant(a))) {
        if (ring.modulus != 0)
            throw DomainError("kernel computation requires characteristic zero");
        RingMatrix ker = kernel_Z(a.with_ring(ring_Z()));
        return ker.with_ring(ring);
    }
    std::vector<RingMatrix> cands = kernel_bounded(a, degree_bound);
    // Greedy selection of a split subset of the right size.
    const std::size_t want = a.cols() >= a.rows() ? a.cols() - a.rows() : 0;
    RingMatrix sel(a.cols(), 0, ring);
    for (const RingMatrix& v : cands) {
        if (sel.cols() == want) break;
        RingMatrix trial = sel.cols() == 0 ? v : sel.hstack(v);
        if (left_inverse(trial, degree_bound)) sel = trial;
    }
    if (sel.cols() != want || !(a * sel).is_zero())
        throw Error("kernel unavailable over this ring within the degree bound");
    return sel;
}

}  // namespace

RingMatrix orthogonal_complement(const EpsQuadraticForm& m, const RingMatrix& j,
                                 const ComplementMode& mode) {
    if (j.rows() != m.rank()) throw ShapeError("complement of mismatched columns");
    const RingMatrix pairing = j.conj_transpose() * m.symmetrization();
    if (mode.kind == ComplementMode::Witness) {
        if (!mode.witness) throw DomainError("witness mode without a witness");
        const RingMatrix& c = *mode.witness;
        if (c.rows() != m.rank() || c.cols() + j.cols() != m.rank())
            throw ShapeError("complement witness of wrong shape");
        if (!(pairing * c).is_zero())
            throw Error("complement witness is not orthogonal");
        if (!left_inverse(c, mode.degree_bound))
            throw Error("complement witness is not a split summand");
        return c;
    }
    if (mode.kind == ComplementMode::Zexact && m.ring().laurent && !all_constant(pairing))
        throw DomainError("exact complement requires constant entries");
    return split_kernel(pairing, mode.degree_bound);
}

// ---------------------------------------------------------------------------
// Embedding validation

TwoSidedPrimEmbedding with_sigma(TwoSidedPrimEmbedding pe, int degree_bound) {
    const RingMatrix phi = pe.m.symmetrization();
    const RingMatrix proj = pe.jprime.conj_transpose() * phi;
    const RingMatrix id = RingMatrix::identity(pe.jprime.cols(), pe.m.ring());
    if (pe.sigma) {
        if (proj * *pe.sigma != id) throw Error("supplied splitting is not a splitting");
        return pe;
    }
    std::optional<RingMatrix> sigma = solve_linear(proj, id, degree_bound);
    if (!sigma) throw Error("no splitting available within the degree bound");
    pe.sigma = std::move(*sigma);
    return pe;
}

EmbeddingReport validate_embedding(const TwoSidedPrimEmbedding& pe, int degree_bound) {
    EmbeddingReport rep;
    const std::size_t mr = pe.m.rank();
    if (pe.j.rows() != mr || pe.jprime.rows() != mr)
        throw ShapeError("embedding columns of wrong height");
    rep.v_restricts = restrict_form(pe.m, pe.j).equals(pe.v);
    rep.vprime_restricts = restrict_form(pe.m, pe.jprime).equals(pe.vprime);
    rep.j_split = left_inverse(pe.j, degree_bound).has_value();
    rep.jprime_split = left_inverse(pe.jprime, degree_bound).has_value();
    const RingMatrix phi = pe.m.symmetrization();
    rep.orthogonal = (pe.j.conj_transpose() * phi * pe.jprime).is_zero();
    try {
        TwoSidedPrimEmbedding w = with_sigma(pe, degree_bound);
        rep.sigma_valid = true;
        // Image of jprime equals the perp of j(v): orthogonality + jprime
        // split + surjectivity of j*phi onto v* + rank count.
        std::optional<RingMatrix> jsig = solve_linear(
            pe.j.conj_transpose() * phi, RingMatrix::identity(pe.j.cols(), pe.m.ring()),
            degree_bound);
        rep.complement_certified = rep.orthogonal && rep.jprime_split && jsig.has_value() &&
                                   pe.j.cols() + pe.jprime.cols() == mr;
    } catch (const Error&) {
        rep.sigma_valid = false;
    }
    rep.ok = rep.v_restricts && rep.vprime_restricts && rep.j_split && rep.jprime_split &&
             rep.orthogonal && rep.sigma_valid && rep.complement_certified;
    return rep;
}

// ---------------------------------------------------------------------------
// Boundary isomorphism of a split isometric injection

StableIso f_from_embedding(const TwoSidedPrimEmbedding& pe0, int degree_bound) {
    TwoSidedPrimEmbedding pe = with_sigma(pe0, degree_bound);
    const Ring ring = pe.m.ring();
    const int eps = pe.m.eps;
    const std::size_t r = pe.j.cols(), rp = pe.jprime.cols(), mr = pe.m.rank();
    if (r + rp != mr) throw ShapeError("embedding ranks do not add up");

    const RingMatrix psi = pe.m.psi;
    const RingMatrix phi = pe.m.symmetrization();
    const RingMatrix& j = pe.j;
    const RingMatrix& jperp = pe.jprime;
    const RingMatrix& sigma = *pe.sigma;
    const RingMatrix sigma_star = sigma.conj_transpose();

    // h = A * B with
    //   A = [[1, 0, 0], [jperp, sigma, j]]
    //   B = [[-sigma* phi* j, 1, -sigma* psi* sigma], [0, 0, 1], [1, 0, 0]]
    const RingMatrix a_top = RingMatrix::identity(rp, ring)
                                 .hstack(RingMatrix::zero(rp, rp, ring))
                                 .hstack(RingMatrix::zero(rp, r, ring));
    const RingMatrix a_bot = jperp.hstack(sigma).hstack(j);
    const RingMatrix A = a_top.vstack(a_bot);

    const RingMatrix b_row1 = (-(sigma_star * phi.conj_transpose() * j))
                                  .hstack(RingMatrix::identity(rp, ring))
                                  .hstack(-(sigma_star * psi.conj_transpose() * sigma));
    const RingMatrix b_row2 = RingMatrix::zero(rp, r, ring)
                                  .hstack(RingMatrix::zero(rp, rp, ring))
                                  .hstack(RingMatrix::identity(rp, ring));
    const RingMatrix b_row3 = RingMatrix::identity(r, ring)
                                  .hstack(RingMatrix::zero(r, rp, ring))
                                  .hstack(RingMatrix::zero(r, rp, ring));
    const RingMatrix B = b_row1.vstack(b_row2).vstack(b_row3);
    const RingMatrix h = A * B;

    const EpsQuadraticForm hyp = hyperbolic(rp, eps, ring);
    const RingMatrix psi_p = hyp.psi;
    const RingMatrix phi_p = hyp.symmetrization();
    const RingMatrix phi_p_inv = phi_p.inverse();
    const RingMatrix phi_inv = phi.inverse();

    StableIso f;
    f.alpha = h;
    f.beta = RingMatrix::block_diag(RingMatrix::identity(rp, ring), phi) * h *
             RingMatrix::block_diag(RingMatrix::identity(r, ring), phi_p_inv);
    const RingMatrix nu_K = RingMatrix::block_diag(
        RingMatrix::zero(r, r, ring),
        phi_p_inv.conj_transpose() * psi_p * phi_p_inv);
    const RingMatrix nu_J = RingMatrix::block_diag(
        RingMatrix::zero(rp, rp, ring),
        -(phi_inv.conj_transpose() * psi * phi_inv));
    const RingMatrix h_inv = h.inverse();
    f.nu = nu_K + h_inv * nu_J * h_inv.conj_transpose();
    f.src = boundary_formation(pe.v);
    f.dst = boundary_formation(pe.vprime.negated());
    f.src_stab = 2 * rp;
    f.dst_stab = mr;
    return f;
}

StableIso delta_map(const TwoSidedPrimEmbedding& pe, int degree_bound) {
    // The complement is already presented on vprime's coordinates via jprime,
    // so the identification of the abstract complement with vprime is absorbed.
    return f_from_embedding(pe, degree_bound);
}

RingMatrix r_iso(const TwoSidedPrimEmbedding& pe0, int degree_bound) {
    TwoSidedPrimEmbedding pe = with_sigma(pe0, degree_bound);
    return pe.j.hstack(-*pe.sigma);
}

TwoSidedPrimEmbedding pr_map(const StableIso& f) {
    StableIsoReport rep = check_stable_iso(f);
    if (!rep.ok) throw Error("invalid stable isomorphism: " + rep.detail);
    UnionResult u = glue_union(f);
    TwoSidedPrimEmbedding pe{f.src.hessian, f.dst.hessian.negated(), u.form, u.j, u.jprime,
                             std::nullopt};
    const std::size_t r = f.src.F_rank(), rp = f.dst.F_rank();
    pe.sigma = RingMatrix::zero(r, rp, u.form.ring())
                   .vstack(RingMatrix::identity(rp, u.form.ring()));
    return pe;
}

// ---------------------------------------------------------------------------
// Comparison

TwoSidedPrimEmbedding twist_embedding(const TwoSidedPrimEmbedding& pe) {
    auto tw = [](const RingMatrix& m) {
        return m.map([](const GroupRingElem& e) { return e.involute(); });
    };
    TwoSidedPrimEmbedding out{{pe.v.eps, tw(pe.v.psi)},
                              {pe.vprime.eps, tw(pe.vprime.psi)},
                              {pe.m.eps, tw(pe.m.psi)},
                              tw(pe.j),
                              tw(pe.jprime),
                              std::nullopt};
    if (pe.sigma) out.sigma = tw(*pe.sigma);
    return out;
}

namespace {

// Self-isometry candidates of a rank-2 hyperbolic-like ambient form: diagonal
// and antidiagonal monomial matrices, filtered by the isometry check later.
std::vector<RingMatrix> ambient_auto_candidates(const EpsQuadraticForm& m, int exp_bound) {
    std::vector<RingMatrix> out;
    const Ring ring = m.ring();
    out.push_back(RingMatrix::identity(m.rank(), ring));
    out.push_back(-RingMatrix::identity(m.rank(), ring));
    if (m.rank() != 2) return out;
    std::vector<GroupRingElem> units;
    if (ring.laurent)
        for (int k = -exp_bound; k <= exp_bound; ++k) {
            units.push_back(GroupRingElem::monomial(1, k, ring.modulus));
            units.push_back(GroupRingElem::monomial(-1, k, ring.modulus));
        }
    else {
        units.push_back(GroupRingElem::one(ring.modulus));
        units.push_back(GroupRingElem::constant(-1, ring.modulus));
    }
    for (const GroupRingElem& u : units) {
        const GroupRingElem w = u.involute().trivial_unit_inverse();
        for (int sign = 0; sign < 2; ++sign) {
            const GroupRingElem wv = sign ? -w : w;
            RingMatrix d(2, 2, ring);
            d.set(0, 0, u);
            d.set(1, 1, wv);
            out.push_back(d);
            RingMatrix ad(2, 2, ring);
            ad.set(0, 1, u);
            ad.set(1, 0, wv);
            out.push_back(ad);
        }
    }
    return out;
}

bool matrix_invertible(const RingMatrix& m) {
    if (!m.is_square()) return false;
    const GroupRingElem d = m.det();
    if (d.is_trivial_unit()) return true;
    if (m.ring().modulus != 0 && d.is_constant()) {
        Int g = gcd(d.constant_term(), Int(m.ring().modulus));
        return g == 1;
    }
    return false;
}

struct EqualWitness {
    RingMatrix k, phi, phiprime;
};

std::optional<EqualWitness> try_equal(const TwoSidedPrimEmbedding& a,
                                      const TwoSidedPrimEmbedding& b,
                                      const PrimCompareOptions& opts) {
    const int eps = a.m.eps;
    std::vector<RingMatrix> bases;
    if (q_canonical(a.m.psi, eps) == q_canonical(b.m.psi, eps))
        bases.push_back(RingMatrix::identity(a.m.rank(), a.m.ring()));
    // Bridges through the glued unions of the boundary images.
    auto add_bridge = [&](const RingMatrix& cand) {
        if (cand.rows() == a.m.rank() && cand.cols() == a.m.rank()) bases.push_back(cand);
    };
    try {
        StableIso da = delta_map(a, opts.degree_bound);
        UnionResult ua = glue_union(da);
        if (q_canonical(ua.form.psi, eps) == q_canonical(b.m.psi, eps))
            add_bridge(r_iso(a, opts.degree_bound).inverse());
        try {
            StableIso db = delta_map(b, opts.degree_bound);
            UnionResult ub = glue_union(db);
            RingMatrix rb = r_iso(b, opts.degree_bound);
            if (q_canonical(ub.form.psi, eps) == q_canonical(a.m.psi, eps)) add_bridge(rb);
            if (q_canonical(ua.form.psi, eps) == q_canonical(ub.form.psi, eps))
                add_bridge(rb * r_iso(a, opts.degree_bound).inverse());
        } catch (const Error&) {
        }
    } catch (const Error&) {
    }

    const std::vector<RingMatrix> autos = ambient_auto_candidates(a.m, opts.unit_exp_bound);
    for (const RingMatrix& base : bases) {
        if (!matrix_invertible(base)) continue;
        for (const RingMatrix& g : autos) {
            if (!check_isometry(g, a.m, a.m)) continue;
            const RingMatrix k = base * g;
            if (!check_isometry(k, a.m, b.m)) continue;
            std::optional<RingMatrix> phi = solve_linear(b.j, k * a.j, opts.degree_bound);
            if (!phi || b.j * *phi != k * a.j) continue;
            std::optional<RingMatrix> phip =
                solve_linear(b.jprime, k * a.jprime, opts.degree_bound);
            if (!phip || b.jprime * *phip != k * a.jprime) continue;
            if (!check_isometry(*phi, a.v, b.v) || !matrix_invertible(*phi)) continue;
            if (!check_isometry(*phip, a.vprime, b.vprime) || !matrix_invertible(*phip))
                continue;
            const bool phi_fixed =
                opts.flavor == PrimFlavor::Prim || opts.flavor == PrimFlavor::RPrim;
            const bool phip_fixed =
                opts.flavor == PrimFlavor::Prim || opts.flavor == PrimFlavor::LPrim;
            if (phi_fixed && !phi->is_identity()) continue;
            if (phip_fixed && !phip->is_identity()) continue;
            return EqualWitness{k, *phi, *phip};
        }
    }
    return std::nullopt;
}

PrimCompareOutcome compare_once(const TwoSidedPrimEmbedding& a,
                                const TwoSidedPrimEmbedding& b,
                                const PrimCompareOptions& opts) {
    PrimCompareOutcome out;
    if (a.m.ring() != b.m.ring() || a.m.eps != b.m.eps)
        throw RingMismatch("comparing embeddings over different rings");
    if (!a.v.equals(b.v) || !a.vprime.equals(b.vprime)) {
        out.verdict = Verdict::Distinct;
        out.reason = "endpoint forms differ";
        return out;
    }
    if (a.m.rank() != b.m.rank()) {
        out.verdict = Verdict::Distinct;
        out.reason = "ambient ranks differ";
        return out;
    }
    if (std::optional<EqualWitness> w = try_equal(a, b, opts)) {
        out.verdict = Verdict::Equal;
        out.k = w->k;
        out.phi = w->phi;
        out.phiprime = w->phiprime;
        out.reason = "ambient isometry found";
        return out;
    }
    try {
        StableIso da = delta_map(a, opts.degree_bound);
        StableIso db = delta_map(b, opts.degree_bound);
        CompareOutcome bc = biso_compare(da, db, {opts.degree_bound, opts.unit_exp_bound});
        if (bc.verdict == Verdict::Distinct) {
            out.verdict = Verdict::Distinct;
            out.reason = "boundary images separated: " + bc.reason;
            return out;
        }
    } catch (const Error&) {
    }
    out.verdict = Verdict::Unknown;
    out.reason = "no ambient isometry found and no separating invariant";
    return out;
}

}  // namespace

PrimCompareOutcome bprim_compare(const TwoSidedPrimEmbedding& a,
                                 const TwoSidedPrimEmbedding& b,
                                 const PrimCompareOptions& opts) {
    PrimCompareOutcome plain = compare_once(a, b, opts);
    if (!opts.allow_group_twist || plain.verdict == Verdict::Equal) return plain;
    PrimCompareOutcome twisted = compare_once(a, twist_embedding(b), opts);
    if (twisted.verdict == Verdict::Equal) {
        twisted.used_group_twist = true;
        return twisted;
    }
    if (plain.verdict == Verdict::Distinct && twisted.verdict == Verdict::Distinct) {
        plain.reason += " (also after the t -> t^-1 twist)";
        return plain;
    }
    plain.verdict = Verdict::Unknown;
    plain.reason = "undecided once the t -> t^-1 twist is allowed";
    return plain;
}

// ---------------------------------------------------------------------------
// Extended symmetric forms

EpsQuadraticForm esf_carrier(const ExtendedSymmetricForm& e) {
    const RingMatrix& lam = e.lambda;
    if (!lam.is_square()) throw ShapeError("carrier matrix must be square");
    if (lam != lam.conj_transpose()) throw DomainError("carrier matrix must be symmetric");
    const std::size_t n = lam.rows();
    RingMatrix psi(n, n, lam.ring());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) psi.set(i, j, lam.at(i, j));
        // Halve the diagonal: exponent-0 coefficient must be even, and the
        // strictly positive exponents carry the whole symmetric pair.
        const GroupRingElem& d = lam.at(i, i);
        GroupRingElem half(lam.ring().modulus);
        for (const auto& [exp, c] : d.coeffs()) {
            if (exp < 0) continue;
            if (exp == 0) {
                if (c % 2 != 0) throw DomainError("carrier matrix must be even");
                half.set_coeff(0, c / 2);
            } else {
                half.set_coeff(exp, c);
            }
        }
        psi.set(i, i, half);
    }
    return {+1, psi};
}

TwoSidedPrimEmbedding esf_to_embedding(const ExtendedSymmetricForm& e, int degree_bound) {
    const EpsQuadraticForm carrier = esf_carrier(e);
    if (!e.lambda.det().is_trivial_unit() &&
        !(e.lambda.ring().modulus != 0 && matrix_invertible(e.lambda)))
        throw NotInvertible("carrier matrix is singular");
    if (e.nu.cols() != e.lambda.rows() || 2 * e.nu.rows() != e.nu.cols())
        throw ShapeError("presentation matrix of wrong shape");
    const RingMatrix id = RingMatrix::identity(e.nu.rows(), e.nu.ring());
    if (!solve_linear(e.nu, id, degree_bound))
        throw Error("presentation matrix is not surjective");
    TwoSidedPrimEmbedding pe;
    pe.m = carrier;
    pe.j = split_kernel(e.nu, degree_bound);
    pe.jprime = e.lambda.inverse() * e.nu.conj_transpose();
    pe.v = restrict_form(carrier, pe.j);
    pe.vprime = restrict_form(carrier, pe.jprime);
    pe = with_sigma(pe, degree_bound);
    EmbeddingReport rep = validate_embedding(pe, degree_bound);
    if (!rep.ok) throw Error("presented pair is not a two-sided primitive embedding");
    return pe;
}

// ---------------------------------------------------------------------------
// Extendedness

TwoSidedPrimEmbedding augment_embedding(const TwoSidedPrimEmbedding& pe) {
    const Ring target{pe.m.ring().modulus, false};
    auto aug = [&](const RingMatrix& m) {
        return m.map([](const GroupRingElem& e) { return e.augmentation(); })
            .with_ring(target);
    };
    TwoSidedPrimEmbedding out{{pe.v.eps, aug(pe.v.psi)},
                              {pe.vprime.eps, aug(pe.vprime.psi)},
                              {pe.m.eps, aug(pe.m.psi)},
                              aug(pe.j),
                              aug(pe.jprime),
                              std::nullopt};
    if (pe.sigma) out.sigma = aug(*pe.sigma);
    return out;
}

TwoSidedPrimEmbedding extend_embedding_to_laurent(const TwoSidedPrimEmbedding& pe) {
    const Ring target{pe.m.ring().modulus, true};
    auto ext = [&](const RingMatrix& m) { return m.with_ring(target); };
    TwoSidedPrimEmbedding out{{pe.v.eps, ext(pe.v.psi)},
                              {pe.vprime.eps, ext(pe.vprime.psi)},
                              {pe.m.eps, ext(pe.m.psi)},
                              ext(pe.j),
                              ext(pe.jprime),
                              std::nullopt};
    if (pe.sigma) out.sigma = ext(*pe.sigma);
    return out;
}

TriBool check_extended(const TwoSidedPrimEmbedding& pe, int degree_bound) {
    if (!pe.m.ring().laurent)
        throw DomainError("extendedness is a question about Laurent embeddings");
    const TwoSidedPrimEmbedding model = extend_embedding_to_laurent(augment_embedding(pe));
    PrimCompareOptions opts;
    opts.degree_bound = degree_bound;
    opts.flavor = PrimFlavor::BPrim;
    const PrimCompareOutcome out = bprim_compare(pe, model, opts);
    switch (out.verdict) {
        case Verdict::Equal:
            return TriBool::True;
        case Verdict::Distinct:
            return TriBool::False;
        default:
            return TriBool::Unknown;
    }
}

// ---------------------------------------------------------------------------
// Classification over Z

std::vector<RingMatrix> hyperbolic_rank1_autos(Ring ring) {
    return {RingMatrix::from_ints({{1, 0}, {0, 1}}, ring),
            RingMatrix::from_ints({{-1, 0}, {0, -1}}, ring),
            RingMatrix::from_ints({{0, 1}, {1, 0}}, ring),
            RingMatrix::from_ints({{0, -1}, {-1, 0}}, ring)};
}

TwoSidedPrimEmbedding make_coprime_embedding_Z(const Int& y1, const Int& y2, bool plus_j) {
    if (gcd(y1, y2) != 1) throw DomainError("the two entries must be coprime");
    const Ring ring = ring_Z();
    TwoSidedPrimEmbedding pe;
    pe.m = hyperbolic(1, +1, ring);
    pe.j = RingMatrix(2, 1, ring);
    pe.j.set(0, 0, GroupRingElem::constant(y1));
    pe.j.set(1, 0, GroupRingElem::constant(y2));
    pe.jprime = RingMatrix(2, 1, ring);
    pe.jprime.set(0, 0, GroupRingElem::constant(plus_j ? -y1 : y1));
    pe.jprime.set(1, 0, GroupRingElem::constant(plus_j ? y2 : -y2));
    pe.v = restrict_form(pe.m, pe.j);
    pe.vprime = restrict_form(pe.m, pe.jprime);
    // Canonical splitting: with jprime = (c; d) the constraint
    // conj_transpose(jprime) * lambda * sigma = 1 reads d z1 + c z2 = 1.
    // Take the unique solution with z1 in [0, |c|) when c != 0.
    const Int c = plus_j ? Int(-y1) : y1;
    const Int d = plus_j ? y2 : Int(-y2);
    RingMatrix row(1, 2, ring);
    row.set(0, 0, GroupRingElem::constant(d));
    row.set(0, 1, GroupRingElem::constant(c));
    auto z = solve_Z(row, RingMatrix::identity(1, ring));
    if (!z) throw DomainError("no splitting for the complement inclusion");
    Int z1 = z->at(0, 0).constant_term(), z2 = z->at(1, 0).constant_term();
    if (c != 0) {
        const Int ac = c < 0 ? Int(-c) : c;
        Int rem = z1 % ac;
        if (rem < 0) rem += ac;
        const Int k = (rem - z1) / c;  // z -> z + k (c, -d) stays a solution
        z1 += k * c;
        z2 -= k * d;
    }
    RingMatrix sigma(2, 1, ring);
    sigma.set(0, 0, GroupRingElem::constant(z1));
    sigma.set(1, 0, GroupRingElem::constant(z2));
    pe.sigma = sigma;
    return with_sigma(pe, 0);
}

namespace {

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
    std::vector<std::pair<Int, unsigned>> out;
    if (n < 0) n = -n;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace

PrimEnumeration enumerate_prim_Z(const Int& q) {
    if (q == 0) throw DomainError("the represented value must be nonzero");
    PrimEnumeration en;
    en.q = q;
    const Int aq = q < 0 ? Int(-q) : q;
    const auto primes = factorize(aq);
    en.k_primes = primes.size();
    for (const Int& d : positive_divisors(aq)) {
        const Int other = aq / d;
        if (gcd(d, other) != 1) continue;
        if (d > other) continue;  // up to swapping the two factors
        en.factorizations.emplace_back(d, q / d);
    }
    en.count_bF = en.factorizations.size();
    en.count_F = en.k_primes == 0 ? 1 : 2 * en.count_bF;
    for (const auto& [y1, y2] : en.factorizations) {
        en.representatives.push_back(make_coprime_embedding_Z(y1, y2, true));
        if (en.k_primes > 0)
            en.representatives.push_back(make_coprime_embedding_Z(y1, y2, false));
    }
    return en;
}

namespace {

struct Pair4 {
    Int a, b, c, d;  // j = (a; b), jprime = (c; d)
    bool operator<(const Pair4& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        if (c != o.c) return c < o.c;
        return d < o.d;
    }
    bool operator==(const Pair4& o) const = default;
};

}  // namespace

PrimOrbitCounts count_prim_orbits_bruteforce(const Int& q) {
    if (q == 0) throw DomainError("the represented value must be nonzero");
    const Int aq = q < 0 ? Int(-q) : q;
    std::vector<Pair4> all;
    for (const Int& e : positive_divisors(aq))
        for (int s1 : {1, -1}) {
            const Int a = s1 * e, b = q / a;
            if (gcd(e, aq / e) != 1) continue;
            for (const Int& f : positive_divisors(aq))
                for (int s2 : {1, -1}) {
                    const Int c = s2 * f, d = -q / c;
                    if (gcd(f, aq / f) != 1) continue;
                    if (a * d + b * c != 0) continue;
                    all.push_back({a, b, c, d});
                }
        }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    // The four ambient isometries acting on both columns.
    auto act_amb = [](const Pair4& p, int which) -> Pair4 {
        switch (which) {
            case 0: return p;
            case 1: return {-p.a, -p.b, -p.c, -p.d};
            case 2: return {p.b, p.a, p.d, p.c};
            default: return {-p.b, -p.a, -p.d, -p.c};
        }
    };
    auto orbit_count = [&](bool sign_left, bool sign_right) {
        std::set<Pair4> seen;
        std::size_t orbits = 0;
        for (const Pair4& p : all) {
            if (seen.count(p)) continue;
            ++orbits;
            std::vector<Pair4> frontier{p};
            seen.insert(p);
            while (!frontier.empty()) {
                Pair4 cur = frontier.back();
                frontier.pop_back();
                std::vector<Pair4> next;
                for (int w = 0; w < 4; ++w) next.push_back(act_amb(cur, w));
                if (sign_left) next.push_back({-cur.a, -cur.b, cur.c, cur.d});
                if (sign_right) next.push_back({cur.a, cur.b, -cur.c, -cur.d});
                for (const Pair4& n : next)
                    if (seen.insert(n).second) frontier.push_back(n);
            }
        }
        return orbits;
    };
    PrimOrbitCounts counts;
    counts.F = orbit_count(false, false);
    counts.lF = orbit_count(true, false);
    counts.rF = orbit_count(false, true);
    counts.bF = orbit_count(true, true);
    return counts;
}

}  // namespace qf
