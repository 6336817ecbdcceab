#include "qf/ellmonoid.hpp"

#include <algorithm>

#include "qf/linalg.hpp"

namespace qf {

bool validate_quasiformation(const QuasiFormation& x, int degree_bound) {
    if (x.V.rows() != 2 * x.K_rank || x.V.cols() != x.K_rank) return false;
    return left_inverse(x.V, degree_bound).has_value();
}

EpsQuadraticForm induced_form(const QuasiFormation& x) {
    return restrict_form(x.ambient(), x.V);
}

EpsQuadraticForm complement_form(const QuasiFormation& x, const ComplementMode& mode) {
    ComplementMode m = mode;
    if (m.kind == ComplementMode::Witness && !m.witness) m.witness = x.complement_witness;
    const RingMatrix comp = orthogonal_complement(x.ambient(), x.V, m);
    return restrict_form(x.ambient(), comp);
}

EpsQuadraticForm boundary_minus(const QuasiFormation& x) {
    return zero_stable_strip(induced_form(x)).form;
}

EpsQuadraticForm boundary_plus(const QuasiFormation& x, const ComplementMode& mode) {
    return zero_stable_strip(complement_form(x, mode)).form.negated();
}

bool is_elementary_rep(const QuasiFormation& x) {
    const Ring ring = x.V.ring();
    const RingMatrix first = RingMatrix::identity(x.K_rank, ring)
                                 .vstack(RingMatrix::zero(x.K_rank, x.K_rank, ring));
    return first.hstack(x.V).det().is_trivial_unit();
}

QuasiFormation stabilize(const QuasiFormation& x, std::size_t k) {
    const std::size_t r = x.K_rank, n = r + k;
    const Ring ring = x.V.ring();
    RingMatrix v(2 * n, n, ring);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            v.set(i, j, x.V.at(i, j));          // L part
            v.set(n + i, j, x.V.at(r + i, j));  // L* part
        }
    for (std::size_t i = 0; i < k; ++i)
        v.set(n + r + i, r + i, GroupRingElem::one(ring.modulus));  // trivial summand
    QuasiFormation out{n, v, x.eps, std::nullopt};
    return out;
}

StableIso delta_of_quasiformation(const QuasiFormation& x, const ComplementMode& mode,
                                  int degree_bound) {
    ComplementMode m = mode;
    if (m.kind == ComplementMode::Witness && !m.witness) m.witness = x.complement_witness;
    TwoSidedPrimEmbedding pe;
    pe.m = x.ambient();
    pe.j = x.V;
    pe.jprime = orthogonal_complement(pe.m, x.V, m);
    pe.v = restrict_form(pe.m, pe.j);
    pe.vprime = restrict_form(pe.m, pe.jprime);
    return f_from_embedding(pe, degree_bound);
}

EpsQuadraticForm kappa(const StableIso& f) { return glue_union(f).form; }

// ---------------------------------------------------------------------------
// Hyperbolicity

namespace {

Int quad_value(const RingMatrix& psi, const std::vector<Int>& v) {
    Int acc = 0;
    const std::size_t n = psi.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (v[i] != 0 && v[j] != 0) acc += v[i] * psi.at(i, j).constant_term() * v[j];
    return acc;
}

Int vec_gcd(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& c : v) g = gcd(g, c);
    return g;
}

// Primitive integral vector with zero quadratic value, entries bounded.
std::optional<std::vector<Int>> find_isotropic(const RingMatrix& psi, int bound) {
    const std::size_t n = psi.rows();
    std::vector<Int> v(n, 0);
    // Odometer over [-bound, bound]^n with the first nonzero entry positive.
    std::vector<long long> idx(n, -bound);
    while (true) {
        for (std::size_t i = 0; i < n; ++i) v[i] = idx[i];
        bool nonzero = false, first_pos = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i] != 0) {
                nonzero = true;
                first_pos = v[i] > 0;
                break;
            }
        }
        if (nonzero && first_pos && vec_gcd(v) == 1 && quad_value(psi, v) == 0) return v;
        std::size_t k = 0;
        while (k < n && idx[k] == bound) idx[k++] = -bound;
        if (k == n) return std::nullopt;
        ++idx[k];
    }
}

// Columns (e_1..e_r, f_1..f_r) of a hyperbolic basis for a +1-quadratic
// unimodular even form over Z, or nullopt if the isotropic search fails.
std::optional<RingMatrix> hyperbolic_basis_Z(const RingMatrix& psi, int entry_bound) {
    const std::size_t n = psi.rows();
    const Ring ring = psi.ring();
    if (n == 0) return RingMatrix(0, 0, ring);
    const int bound = n >= 5 ? std::min(entry_bound, 4) : entry_bound;
    std::optional<std::vector<Int>> ev = find_isotropic(psi, bound);
    if (!ev) return std::nullopt;
    RingMatrix e(n, 1, ring);
    for (std::size_t i = 0; i < n; ++i) e.set(i, 0, GroupRingElem::constant((*ev)[i]));
    const RingMatrix lam = psi + psi.transpose();
    std::optional<RingMatrix> f0 =
        solve_Z(e.transpose() * lam, RingMatrix::identity(1, ring));
    if (!f0) return std::nullopt;
    // Adjust to make the partner isotropic: value(f0 + c e) = value(f0) + c.
    const Int c = -(f0->transpose() * psi * *f0).at(0, 0).constant_term();
    RingMatrix f = *f0 + e.scaled(GroupRingElem::constant(c));
    const RingMatrix pair_rows =
        (e.transpose() * lam).vstack(f.transpose() * lam);
    const RingMatrix comp = kernel_Z(pair_rows);
    const RingMatrix sub_psi = comp.transpose() * psi * comp;
    std::optional<RingMatrix> rest = hyperbolic_basis_Z(sub_psi, entry_bound);
    if (!rest) return std::nullopt;
    const std::size_t r = n / 2;
    RingMatrix lifted = comp * *rest;  // columns e_2..e_r, f_2..f_r
    RingMatrix es = e, fs = f;
    for (std::size_t i = 0; i + 1 < r; ++i) {
        es = es.hstack(lifted.column(i));
        fs = fs.hstack(lifted.column(r - 1 + i));
    }
    return es.hstack(fs);
}

HypResult hyp_false(const std::string& why) {
    HypResult r;
    r.verdict = TriBool::False;
    r.obstruction = why;
    return r;
}

}  // namespace

HypResult hyperbolicity_test(const EpsQuadraticForm& form, const HypMode& mode) {
    HypResult res;
    const std::size_t n = form.rank();
    const Ring ring = form.ring();
    const RingMatrix lam = form.symmetrization();
    if (!lam.det().is_trivial_unit()) {
        if (n % 2 != 0) return hyp_false("odd rank");
        return hyp_false("non-unit determinant of the symmetrization");
    }
    if (n % 2 != 0) return hyp_false("odd rank");
    if (n == 0) {
        res.verdict = TriBool::True;
        res.witness = RingMatrix(0, 0, ring);
        return res;
    }

    if (mode.kind == HypMode::Witness) {
        if (!mode.witness) throw DomainError("witness mode without a witness");
        const EpsQuadraticForm hyp = hyperbolic(n / 2, form.eps, ring);
        if (check_isometry(*mode.witness, hyp, form) ||
            check_isometry(*mode.witness, form, hyp)) {
            res.verdict = TriBool::True;
            res.witness = mode.witness;
            return res;
        }
        res.obstruction = "supplied witness is not an isometry with the hyperbolic form";
        return res;
    }

    const bool constant_z = ring.modulus == 0;
    if (mode.kind == HypMode::Zexact) {
        if (ring.laurent) throw DomainError("exact mode works over the constants only");
        if (form.eps != +1) {
            res.obstruction = "exact decision implemented for the +1 sign only";
            return res;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (lam.at(i, i).constant_term() % 2 != 0)
                return hyp_false("odd diagonal in the symmetrization");
        if (signature_Z(lam) != 0) return hyp_false("nonzero signature");
        const RingMatrix canon = q_canonical(form.psi, form.eps);
        std::optional<RingMatrix> basis = hyperbolic_basis_Z(canon, mode.entry_bound);
        if (basis && check_isometry(*basis, hyperbolic(n / 2, +1, ring), form)) {
            res.verdict = TriBool::True;
            res.witness = basis;
            return res;
        }
        res.obstruction = "even, unimodular and signature zero, but no basis found "
                          "within the entry bound";
        return res;
    }

    // Bounded mode over a Laurent ring: necessary conditions via the
    // augmentation t -> 1, then cheap witnesses.
    if (constant_z) {
        const RingMatrix aug = form.psi
                                   .map([](const GroupRingElem& e) { return e.augmentation(); })
                                   .with_ring(ring_Z());
        HypMode zmode;
        zmode.kind = HypMode::Zexact;
        zmode.entry_bound = mode.entry_bound;
        const HypResult zres = hyperbolicity_test({form.eps, aug}, zmode);
        if (zres.verdict == TriBool::False)
            return hyp_false("augmented form: " + zres.obstruction);
    }
    const EpsQuadraticForm hyp = hyperbolic(n / 2, form.eps, ring);
    if (check_isometry(RingMatrix::identity(n, ring), hyp, form)) {
        res.verdict = TriBool::True;
        res.witness = RingMatrix::identity(n, ring);
        return res;
    }
    res.obstruction = "no witness found within the bounds";
    return res;
}

}  // namespace qf
