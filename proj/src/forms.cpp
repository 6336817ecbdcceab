#include "qf/forms.hpp"

namespace qf {

static GroupRingElem fold_diagonal(const GroupRingElem& d, int eps, std::int64_t modulus) {
    GroupRingElem out(modulus);
    // Move every exponent -n (n > 0) onto +n with the sign dictated by eps.
    for (const auto& [e, c] : d.coeffs()) {
        if (e >= 0)
            out.set_coeff(e, out.coeff(e) + c);
        else
            out.set_coeff(-e, out.coeff(-e) + (eps == 1 ? c : -c));
    }
    if (eps == -1) {
        // The constant term additionally dies modulo 2 (mod gcd(2, m) over Z/m).
        Int c0 = out.coeff(0);
        Int g = modulus == 0 ? Int(2) : gcd(Int(2), Int(modulus));
        if (g == 1) {
            out.set_coeff(0, 0);
        } else {
            Int r = c0 % g;
            if (r < 0) r += g;
            out.set_coeff(0, r);
        }
    }
    return out;
}

RingMatrix q_canonical(const RingMatrix& psi, int eps) {
    if (!psi.is_square()) throw ShapeError("q_canonical of a non-square matrix");
    if (eps != 1 && eps != -1) throw DomainError("eps must be +1 or -1");
    const std::size_t n = psi.rows();
    RingMatrix out(n, n, psi.ring());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            GroupRingElem folded = psi.at(i, j) + (eps == 1 ? psi.at(j, i).involute()
                                                            : -(psi.at(j, i).involute()));
            out.set(i, j, std::move(folded));
        }
        out.set(i, i, fold_diagonal(psi.at(i, i), eps, psi.ring().modulus));
    }
    return out;
}

bool q_equal(const RingMatrix& psi1, const RingMatrix& psi2, int eps) {
    if (psi1.rows() != psi2.rows() || psi1.cols() != psi2.cols()) return false;
    return q_canonical(psi1, eps) == q_canonical(psi2, eps);
}

RingMatrix EpsQuadraticForm::symmetrization() const {
    if (eps == 1) return psi + psi.conj_transpose();
    return psi - psi.conj_transpose();
}

bool EpsQuadraticForm::equals(const EpsQuadraticForm& o) const {
    return eps == o.eps && ring() == o.ring() && rank() == o.rank() && q_equal(psi, o.psi, eps);
}

EpsQuadraticForm hyperbolic(std::size_t rank, int eps, Ring ring) {
    RingMatrix psi(2 * rank, 2 * rank, ring);
    for (std::size_t i = 0; i < rank; ++i) psi.set(i, rank + i, GroupRingElem::one(ring.modulus));
    return {eps, psi};
}

EpsQuadraticForm direct_sum(const EpsQuadraticForm& a, const EpsQuadraticForm& b) {
    if (a.eps != b.eps) throw DomainError("direct sum of forms with different eps");
    return {a.eps, RingMatrix::block_diag(a.psi, b.psi)};
}

bool check_isometry(const RingMatrix& h, const EpsQuadraticForm& src,
                    const EpsQuadraticForm& dst) {
    if (src.eps != dst.eps) return false;
    if (h.rows() != dst.rank() || h.cols() != src.rank()) return false;
    return q_equal(h.conj_transpose() * dst.psi * h, src.psi, src.eps);
}

EpsQuadraticForm restrict_form(const EpsQuadraticForm& form, const RingMatrix& j) {
    if (j.rows() != form.rank()) throw ShapeError("restriction along mismatched injection");
    return {form.eps, q_canonical(j.conj_transpose() * form.psi * j, form.eps)};
}

StripResult zero_stable_strip(const EpsQuadraticForm& form) {
    RingMatrix can = q_canonical(form.psi, form.eps);
    RingMatrix lam = form.symmetrization();
    const std::size_t n = form.rank();
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < n; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < n && zero; ++j)
            zero = can.at(i, j).is_zero() && can.at(j, i).is_zero() && lam.at(i, j).is_zero() &&
                   lam.at(j, i).is_zero();
        if (!zero) kept.push_back(i);
    }
    RingMatrix psi(kept.size(), kept.size(), form.ring());
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = 0; j < kept.size(); ++j) psi.set(i, j, can.at(kept[i], kept[j]));
    return {{form.eps, psi}, kept};
}

LagrangianReport check_lagrangian(const RingMatrix& j, const EpsQuadraticForm& ambient,
                                  const std::optional<RingMatrix>& witness) {
    LagrangianReport rep;
    if (j.rows() != ambient.rank()) throw ShapeError("lagrangian columns of wrong height");
    rep.vanishes = q_equal(j.conj_transpose() * ambient.psi * j,
                           RingMatrix::zero(j.cols(), j.cols(), j.ring()), ambient.eps);
    rep.half_rank = 2 * j.cols() == ambient.rank();
    if (witness) {
        const RingMatrix& w = *witness;
        if (w.rows() != j.rows() || w.cols() != j.cols())
            throw ShapeError("lagrangian witness of wrong shape");
        rep.witness_spans = j.hstack(w).det().is_trivial_unit();
        rep.witness_dual =
            j.conj_transpose() * ambient.symmetrization() * w ==
            RingMatrix::identity(j.cols(), j.ring());
    }
    rep.certified = rep.vanishes && rep.half_rank && rep.witness_spans && rep.witness_dual;
    return rep;
}

}  // namespace qf
