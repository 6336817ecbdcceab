#include "qf/matrix.hpp"

#include <numeric>
#include <sstream>

namespace qf {

RingMatrix::RingMatrix(std::size_t rows, std::size_t cols, Ring ring)
    : rows_(rows), cols_(cols), ring_(ring),
      e_(rows * cols, GroupRingElem::zero(ring.modulus)) {}

RingMatrix RingMatrix::identity(std::size_t n, Ring ring) {
    RingMatrix m(n, n, ring);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, GroupRingElem::one(ring.modulus));
    return m;
}

RingMatrix RingMatrix::from_ints(std::initializer_list<std::initializer_list<long long>> rows,
                                 Ring ring) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    RingMatrix m(r, c, ring);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw ShapeError("ragged initializer for matrix");
        std::size_t j = 0;
        for (long long v : row) m.set(i, j++, GroupRingElem::constant(v, ring.modulus));
        ++i;
    }
    return m;
}

RingMatrix RingMatrix::scalar(GroupRingElem value, Ring ring) {
    RingMatrix m(1, 1, ring);
    m.set(0, 0, std::move(value));
    return m;
}

const GroupRingElem& RingMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
    return e_[i * cols_ + j];
}

void RingMatrix::set(std::size_t i, std::size_t j, GroupRingElem v) {
    if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
    if (v.modulus() != ring_.modulus) v = v.with_modulus(ring_.modulus);
    if (!ring_.laurent && !v.is_constant())
        throw RingMismatch("non-constant entry " + v.to_string() + " in a matrix over " +
                           ring_.describe());
    e_[i * cols_ + j] = std::move(v);
}

void RingMatrix::require_same_ring(const RingMatrix& o) const {
    if (!(ring_ == o.ring_))
        throw RingMismatch("matrices over different rings: " + ring_.describe() + " vs " +
                           o.ring_.describe());
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
    require_same_ring(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("shape mismatch in matrix sum");
    RingMatrix r(rows_, cols_, ring_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const {
    require_same_ring(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("shape mismatch in matrix difference");
    RingMatrix r(rows_, cols_, ring_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
    require_same_ring(o);
    if (cols_ != o.rows_)
        throw ShapeError("shape mismatch in matrix product: " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " times " + std::to_string(o.rows_) + "x" +
                         std::to_string(o.cols_));
    RingMatrix r(rows_, o.cols_, ring_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) {
            GroupRingElem s(ring_.modulus);
            for (std::size_t k = 0; k < cols_; ++k) s += e_[i * cols_ + k] * o.e_[k * o.cols_ + j];
            r.e_[i * o.cols_ + j] = std::move(s);
        }
    return r;
}

RingMatrix RingMatrix::operator-() const {
    RingMatrix r(rows_, cols_, ring_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
}

bool RingMatrix::operator==(const RingMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && ring_ == o.ring_ && e_ == o.e_;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix r(cols_, rows_, ring_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.e_[j * rows_ + i] = e_[i * cols_ + j];
    return r;
}

RingMatrix RingMatrix::conj_transpose() const {
    RingMatrix r(cols_, rows_, ring_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.e_[j * rows_ + i] = e_[i * cols_ + j].involute();
    return r;
}

RingMatrix RingMatrix::map(const std::function<GroupRingElem(const GroupRingElem&)>& f) const {
    RingMatrix r = *this;
    for (auto& v : r.e_) v = f(v);
    return r;
}

RingMatrix RingMatrix::with_ring(Ring ring) const {
    RingMatrix r(rows_, cols_, ring);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, e_[i * cols_ + j].with_modulus(ring.modulus));
    return r;
}

RingMatrix RingMatrix::scaled(const GroupRingElem& k) const {
    RingMatrix r(rows_, cols_, ring_);
    for (std::size_t idx = 0; idx < e_.size(); ++idx) r.e_[idx] = e_[idx] * k;
    return r;
}

bool RingMatrix::is_zero() const {
    for (const auto& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

bool RingMatrix::is_identity() const {
    if (!is_square()) return false;
    return *this == identity(rows_, ring_);
}

GroupRingElem RingMatrix::det_recursive(std::vector<std::size_t> row_idx,
                                        std::vector<std::size_t> col_idx) const {
    const std::size_t n = row_idx.size();
    if (n == 0) return GroupRingElem::one(ring_.modulus);
    if (n == 1) return at(row_idx[0], col_idx[0]);
    GroupRingElem acc(ring_.modulus);
    std::vector<std::size_t> sub_rows(row_idx.begin() + 1, row_idx.end());
    for (std::size_t j = 0; j < n; ++j) {
        const GroupRingElem& pivot = at(row_idx[0], col_idx[j]);
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(n - 1);
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) sub_cols.push_back(col_idx[k]);
        GroupRingElem term = pivot * det_recursive(sub_rows, sub_cols);
        if (j % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

GroupRingElem RingMatrix::det() const {
    if (!is_square()) throw ShapeError("determinant of a non-square matrix");
    std::vector<std::size_t> idx(rows_);
    std::iota(idx.begin(), idx.end(), 0);
    return det_recursive(idx, idx);
}

// Inverse of a constant unit in Z/m via the extended Euclid algorithm.
static Int mod_inverse(Int a, Int m) {
    Int old_r = a % m, r = m, old_s = 1, s = 0;
    if (old_r < 0) old_r += m;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw NotInvertible("element not invertible mod " + m.str());
    Int inv = old_s % m;
    if (inv < 0) inv += m;
    return inv;
}

RingMatrix RingMatrix::inverse() const {
    if (!is_square()) throw ShapeError("inverse of a non-square matrix");
    GroupRingElem d = det();
    GroupRingElem d_inv(ring_.modulus);
    if (d.is_trivial_unit()) {
        d_inv = d.trivial_unit_inverse();
    } else if (ring_.modulus != 0 && d.is_constant() && !d.is_zero()) {
        d_inv = GroupRingElem::constant(mod_inverse(d.constant_term(), ring_.modulus),
                                        ring_.modulus);
    } else {
        throw NotInvertible("matrix determinant " + d.to_string() + " is not a unit over " +
                            ring_.describe());
    }
    const std::size_t n = rows_;
    RingMatrix adj(n, n, ring_);
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> rs, cs;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != i) rs.push_back(k);
                if (k != j) cs.push_back(k);
            }
            GroupRingElem cof = det_recursive(rs, cs);
            if ((i + j) % 2 == 1) cof = -cof;
            adj.set(j, i, cof * d_inv);  // adjugate transposes the cofactors
        }
    return adj;
}

RingMatrix RingMatrix::submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                                 std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_) throw ShapeError("submatrix out of range");
    RingMatrix r(nrows, ncols, ring_);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) r.e_[i * ncols + j] = at(row0 + i, col0 + j);
    return r;
}

RingMatrix RingMatrix::hstack(const RingMatrix& right) const {
    require_same_ring(right);
    if (rows_ != right.rows_) throw ShapeError("hstack row mismatch");
    RingMatrix r(rows_, cols_ + right.cols_, ring_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
        for (std::size_t j = 0; j < right.cols_; ++j) r.set(i, cols_ + j, right.at(i, j));
    }
    return r;
}

RingMatrix RingMatrix::vstack(const RingMatrix& below) const {
    require_same_ring(below);
    if (cols_ != below.cols_) throw ShapeError("vstack column mismatch");
    RingMatrix r(rows_ + below.rows_, cols_, ring_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (std::size_t i = 0; i < below.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(rows_ + i, j, below.at(i, j));
    return r;
}

RingMatrix RingMatrix::block_diag(const RingMatrix& a, const RingMatrix& b) {
    a.require_same_ring(b);
    RingMatrix r(a.rows_ + b.rows_, a.cols_ + b.cols_, a.ring_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) r.set(i, j, a.at(i, j));
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) r.set(a.rows_ + i, a.cols_ + j, b.at(i, j));
    return r;
}

std::string RingMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    }
    os << "]";
    return os.str();
}

}  // namespace qf
