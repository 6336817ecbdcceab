#include "qf/linalg.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace qf {

using IntGrid = std::vector<std::vector<Int>>;

static IntGrid to_grid(const RingMatrix& a) {
    if (a.ring().modulus != 0)
        throw DomainError("integer linear algebra requires characteristic zero");
    IntGrid g(a.rows(), std::vector<Int>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const GroupRingElem& v = a.at(i, j);
            if (!v.is_constant())
                throw DomainError("integer linear algebra requires constant entries, got " +
                                  v.to_string());
            g[i][j] = v.constant_term();
        }
    return g;
}

static RingMatrix from_grid(const IntGrid& g, Ring ring = ring_Z()) {
    std::size_t r = g.size(), c = r == 0 ? 0 : g[0].size();
    RingMatrix m(r, c, ring);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, GroupRingElem::constant(g[i][j], ring.modulus));
    return m;
}

SmithResult smith_normal_form(const RingMatrix& a) {
    IntGrid s = to_grid(a);
    const std::size_t m = a.rows(), n = a.cols();
    IntGrid u(m, std::vector<Int>(m, 0)), v(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j) v[j][j] = 1;

    auto row_add = [&](std::size_t dst, std::size_t src, const Int& k) {
        for (std::size_t j = 0; j < n; ++j) s[dst][j] += k * s[src][j];
        for (std::size_t j = 0; j < m; ++j) u[dst][j] += k * u[src][j];
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const Int& k) {
        for (std::size_t i = 0; i < m; ++i) s[i][dst] += k * s[i][src];
        for (std::size_t i = 0; i < n; ++i) v[i][dst] += k * v[i][src];
    };
    auto row_swap = [&](std::size_t i1, std::size_t i2) {
        std::swap(s[i1], s[i2]);
        std::swap(u[i1], u[i2]);
    };
    auto col_swap = [&](std::size_t j1, std::size_t j2) {
        for (std::size_t i = 0; i < m; ++i) std::swap(s[i][j1], s[i][j2]);
        for (std::size_t i = 0; i < n; ++i) std::swap(v[i][j1], v[i][j2]);
    };
    auto row_negate = [&](std::size_t i) {
        for (auto& x : s[i]) x = -x;
        for (auto& x : u[i]) x = -x;
    };

    std::size_t k = 0;
    while (k < m && k < n) {
        // Find the entry of minimal nonzero absolute value in the working block.
        std::size_t pi = k, pj = k;
        Int best = 0;
        for (std::size_t i = k; i < m; ++i)
            for (std::size_t j = k; j < n; ++j) {
                if (s[i][j] == 0) continue;
                Int a_ = abs(s[i][j]);
                if (best == 0 || a_ < best) {
                    best = a_;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;  // block is zero
        row_swap(k, pi);
        col_swap(k, pj);

        bool clean = true;
        for (std::size_t i = k + 1; i < m; ++i)
            if (s[i][k] != 0) {
                Int q = s[i][k] / s[k][k];
                row_add(i, k, -q);
                if (s[i][k] != 0) clean = false;
            }
        for (std::size_t j = k + 1; j < n; ++j)
            if (s[k][j] != 0) {
                Int q = s[k][j] / s[k][k];
                col_add(j, k, -q);
                if (s[k][j] != 0) clean = false;
            }
        if (!clean) continue;  // smaller remainder surfaced; re-pivot

        // Enforce divisibility of the remaining block by the pivot.
        bool divisible = true;
        for (std::size_t i = k + 1; i < m && divisible; ++i)
            for (std::size_t j = k + 1; j < n && divisible; ++j)
                if (s[i][j] % s[k][k] != 0) {
                    row_add(k, i, 1);
                    divisible = false;
                }
        if (!divisible) continue;

        if (s[k][k] < 0) row_negate(k);
        ++k;
    }

    SmithResult res{from_grid(u), from_grid(s), from_grid(v), {}};
    for (std::size_t i = 0; i < std::min(m, n); ++i) {
        if (s[i][i] != 0) res.divisors.push_back(s[i][i]);
    }
    return res;
}

RingMatrix kernel_Z(const RingMatrix& a) {
    SmithResult snf = smith_normal_form(a);
    const std::size_t n = a.cols(), r = snf.divisors.size();
    RingMatrix basis(n, n - r, ring_Z());
    for (std::size_t j = r; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) basis.set(i, j - r, snf.V.at(i, j));
    return basis;
}

std::optional<RingMatrix> solve_Z(const RingMatrix& a, const RingMatrix& b) {
    if (a.rows() != b.rows()) throw ShapeError("solve_Z shape mismatch");
    SmithResult snf = smith_normal_form(a);
    const std::size_t r = snf.divisors.size();
    RingMatrix ub = snf.U * b;
    RingMatrix y(a.cols(), b.cols(), ring_Z());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            Int rhs = ub.at(i, c).constant_term();
            if (i < r) {
                const Int& d = snf.divisors[i];
                if (rhs % d != 0) return std::nullopt;
                y.set(i, c, GroupRingElem::constant(rhs / d));
            } else if (rhs != 0) {
                return std::nullopt;
            }
        }
    }
    return snf.V * y;
}

// Residue solve: A x = b mod m lifted to Z by adjoining slack columns m*I.
static std::optional<RingMatrix> solve_mod(const RingMatrix& a, const RingMatrix& b,
                                           std::int64_t m) {
    Ring z = ring_Z();
    RingMatrix a_lift = a.with_ring(z);
    RingMatrix slack = RingMatrix::identity(a.rows(), z).scaled(GroupRingElem::constant(m));
    auto sol = solve_Z(a_lift.hstack(slack), b.with_ring(z));
    if (!sol) return std::nullopt;
    return sol->submatrix(0, 0, a.cols(), b.cols()).with_ring(a.ring());
}

// Degree-bounded Laurent solve by expanding into one integer unknown per
// (entry, exponent) pair and matching coefficients of every output exponent.
static std::optional<RingMatrix> solve_laurent(const RingMatrix& a, const RingMatrix& b,
                                               int degree_bound) {
    const std::size_t m = a.rows(), n = a.cols();
    const std::int64_t mod = a.ring().modulus;
    if (n == 0) return b.is_zero() ? std::optional<RingMatrix>(RingMatrix(0, b.cols(), a.ring()))
                                   : std::nullopt;

    std::int64_t a_min = 0, a_max = 0;
    bool a_zero = true;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const GroupRingElem& v = a.at(i, j);
            if (v.is_zero()) continue;
            if (a_zero) {
                a_min = v.min_exponent();
                a_max = v.max_exponent();
                a_zero = false;
            } else {
                a_min = std::min(a_min, v.min_exponent());
                a_max = std::max(a_max, v.max_exponent());
            }
        }
    if (a_zero)
        return b.is_zero() ? std::optional<RingMatrix>(RingMatrix(n, b.cols(), a.ring()))
                           : std::nullopt;

    const std::int64_t D = degree_bound;
    std::int64_t e_min = a_min - D, e_max = a_max + D;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            const GroupRingElem& v = b.at(i, c);
            if (v.is_zero()) continue;
            e_min = std::min(e_min, v.min_exponent());
            e_max = std::max(e_max, v.max_exponent());
        }
    const std::size_t e_count = static_cast<std::size_t>(e_max - e_min + 1);
    const std::size_t d_count = static_cast<std::size_t>(2 * D + 1);
    const std::size_t sys_rows = m * e_count;
    const std::size_t sys_cols = n * d_count + (mod != 0 ? sys_rows : 0);

    Ring z = ring_Z();
    RingMatrix sys(sys_rows, sys_cols, z);
    RingMatrix rhs(sys_rows, b.cols(), z);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t e_idx = 0; e_idx < e_count; ++e_idx) {
            const std::int64_t e = e_min + static_cast<std::int64_t>(e_idx);
            const std::size_t row = i * e_count + e_idx;
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t d_idx = 0; d_idx < d_count; ++d_idx) {
                    const std::int64_t d = -D + static_cast<std::int64_t>(d_idx);
                    Int coeff = a.at(i, j).coeff(e - d);
                    if (coeff != 0)
                        sys.set(row, j * d_count + d_idx, GroupRingElem::constant(coeff));
                }
            if (mod != 0)
                sys.set(row, n * d_count + row, GroupRingElem::constant(mod));
            for (std::size_t c = 0; c < b.cols(); ++c) {
                Int coeff = b.at(i, c).coeff(e);
                if (coeff != 0) rhs.set(row, c, GroupRingElem::constant(coeff));
            }
        }

    auto sol = solve_Z(sys, rhs);
    if (!sol) return std::nullopt;
    RingMatrix x(n, b.cols(), a.ring());
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            GroupRingElem v(mod);
            for (std::size_t d_idx = 0; d_idx < d_count; ++d_idx) {
                const std::int64_t d = -D + static_cast<std::int64_t>(d_idx);
                v.set_coeff(d, sol->at(j * d_count + d_idx, c).constant_term());
            }
            x.set(j, c, v);
        }
    return x;
}

std::optional<RingMatrix> solve_linear(const RingMatrix& a, const RingMatrix& b,
                                       int degree_bound) {
    if (!(a.ring() == b.ring())) throw RingMismatch("solve_linear over mismatched rings");
    if (a.rows() != b.rows()) throw ShapeError("solve_linear shape mismatch");
    if (a.ring().laurent) return solve_laurent(a, b, degree_bound);
    if (a.ring().modulus != 0) return solve_mod(a, b, a.ring().modulus);
    return solve_Z(a, b);
}

std::optional<RingMatrix> left_inverse(const RingMatrix& a, int degree_bound) {
    RingMatrix id = RingMatrix::identity(a.cols(), a.ring());
    auto yt = solve_linear(a.transpose(), id, degree_bound);
    if (!yt) return std::nullopt;
    return yt->transpose();
}

bool same_column_span_Z(const RingMatrix& a, const RingMatrix& b) {
    return solve_Z(a, b).has_value() && solve_Z(b, a).has_value();
}

long long signature_Z(const RingMatrix& sym) {
    if (!sym.is_square()) throw DomainError("signature of a non-square matrix");
    if (sym != sym.transpose()) throw DomainError("signature of a non-symmetric matrix");
    IntGrid g = to_grid(sym);
    const std::size_t n = g.size();
    using Rat = boost::multiprecision::cpp_rational;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(g[i][j]);

    long long sig = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            // Bring a nonzero diagonal entry to position k via congruence moves.
            std::size_t piv = k;
            while (piv < n && a[piv][piv] == 0) ++piv;
            if (piv < n) {
                for (std::size_t j = 0; j < n; ++j) std::swap(a[k][j], a[piv][j]);
                for (std::size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][piv]);
            } else {
                std::size_t j2 = n;
                for (std::size_t j = k + 1; j < n && j2 == n; ++j)
                    if (a[k][j] != 0) j2 = j;
                if (j2 == n) continue;  // row is zero: contributes nothing
                for (std::size_t j = 0; j < n; ++j) a[k][j] += a[j2][j];
                for (std::size_t i = 0; i < n; ++i) a[i][k] += a[i][j2];
            }
        }
        const Rat d = a[k][k];
        if (d == 0) continue;
        sig += d > 0 ? 1 : -1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = a[i][k] / d;
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
            for (std::size_t j = 0; j < n; ++j) a[j][i] -= f * a[j][k];
        }
    }
    return sig;
}

std::vector<Int> positive_divisors(const Int& n) {
    if (n <= 0) throw DomainError("positive_divisors requires n > 0");
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

}  // namespace qf
