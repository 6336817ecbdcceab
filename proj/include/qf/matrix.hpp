#pragma once

// Dense matrices over the rings described in ring.hpp, with the exact
// operations needed elsewhere: arithmetic, the conjugate-transpose twisted by
// the t -> t^-1 involution, cofactor determinants and adjugate inverses.

#include <functional>
#include <initializer_list>
#include <vector>

#include "qf/ring.hpp"

namespace qf {

class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(std::size_t rows, std::size_t cols, Ring ring);

    static RingMatrix identity(std::size_t n, Ring ring);
    static RingMatrix zero(std::size_t rows, std::size_t cols, Ring ring) {
        return RingMatrix(rows, cols, ring);
    }
    // Build from integer literals (convenient for fixtures/tests).
    static RingMatrix from_ints(std::initializer_list<std::initializer_list<long long>> rows,
                                Ring ring);
    static RingMatrix scalar(GroupRingElem value, Ring ring);  // 1x1

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Ring& ring() const { return ring_; }
    bool is_square() const { return rows_ == cols_; }

    const GroupRingElem& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, GroupRingElem v);

    RingMatrix operator+(const RingMatrix& o) const;
    RingMatrix operator-(const RingMatrix& o) const;
    RingMatrix operator*(const RingMatrix& o) const;
    RingMatrix operator-() const;
    bool operator==(const RingMatrix& o) const;
    bool operator!=(const RingMatrix& o) const { return !(*this == o); }

    RingMatrix transpose() const;
    // Entrywise involution t -> t^-1 composed with transpose ("bar-transpose").
    RingMatrix conj_transpose() const;
    RingMatrix map(const std::function<GroupRingElem(const GroupRingElem&)>& f) const;
    RingMatrix with_ring(Ring ring) const;  // re-reduce entries into the new ring
    RingMatrix scaled(const GroupRingElem& k) const;

    bool is_zero() const;
    bool is_identity() const;

    GroupRingElem det() const;
    // Inverse via adjugate/det; requires det to be a trivial unit (always the
    // case for invertible matrices over Z and Z[t,t^-1]) or, over a residue
    // ring, a constant unit mod m.
    RingMatrix inverse() const;

    RingMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                         std::size_t ncols) const;
    RingMatrix hstack(const RingMatrix& right) const;
    RingMatrix vstack(const RingMatrix& below) const;
    static RingMatrix block_diag(const RingMatrix& a, const RingMatrix& b);

    // Column/row utilities used by lattice computations.
    RingMatrix column(std::size_t j) const { return submatrix(0, j, rows_, 1); }
    RingMatrix row(std::size_t i) const { return submatrix(i, 0, 1, cols_); }

    std::string to_string() const;

private:
    void require_same_ring(const RingMatrix& o) const;
    GroupRingElem det_recursive(std::vector<std::size_t> row_idx,
                                std::vector<std::size_t> col_idx) const;

    std::size_t rows_ = 0, cols_ = 0;
    Ring ring_;
    std::vector<GroupRingElem> e_;
};

}  // namespace qf
