#pragma once

// Sparse Laurent-polynomial arithmetic over the integers, with an optional
// coefficient modulus.  Elements of Z, Z[t,t^-1] and (Z/m)[t,t^-1] are all
// represented by the same type; the ambient ring of a matrix or form is
// described separately by a Ring descriptor so that Z-valued problems are not
// silently promoted to Laurent ones (unit groups differ).

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qf {

using Int = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct RingMismatch : Error {
    explicit RingMismatch(const std::string& what) : Error(what) {}
};

struct ShapeError : Error {
    explicit ShapeError(const std::string& what) : Error(what) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& what) : Error(what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// ---------------------------------------------------------------------------
// Ring descriptor

struct Ring {
    // modulus == 0 means characteristic zero; otherwise coefficients live in
    // Z/modulus (stored as canonical representatives in [0, modulus)).
    std::int64_t modulus = 0;
    // laurent == false restricts to constant elements (the subring Z or Z/m);
    // this only affects which units count as "trivial" and which witnesses
    // searches may produce, not the arithmetic itself.
    bool laurent = true;

    bool operator==(const Ring&) const = default;

    std::string describe() const;
};

inline Ring ring_Z() { return Ring{0, false}; }
inline Ring ring_laurent(std::int64_t modulus = 0) { return Ring{modulus, true}; }

// ---------------------------------------------------------------------------
// Elements

class GroupRingElem {
public:
    GroupRingElem() = default;
    explicit GroupRingElem(std::int64_t modulus) : modulus_(modulus) {}

    static GroupRingElem constant(Int c, std::int64_t modulus = 0);
    static GroupRingElem monomial(Int c, std::int64_t exponent, std::int64_t modulus = 0);
    static GroupRingElem zero(std::int64_t modulus = 0) { return GroupRingElem(modulus); }
    static GroupRingElem one(std::int64_t modulus = 0) { return constant(1, modulus); }

    std::int64_t modulus() const { return modulus_; }
    const std::map<std::int64_t, Int>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const;
    // Constant term (coefficient of t^0).
    Int constant_term() const;
    Int coeff(std::int64_t exponent) const;
    void set_coeff(std::int64_t exponent, Int value);

    // Degree window; both are 0 for the zero element.
    std::int64_t min_exponent() const { return c_.empty() ? 0 : c_.begin()->first; }
    std::int64_t max_exponent() const { return c_.empty() ? 0 : c_.rbegin()->first; }
    std::size_t term_count() const { return c_.size(); }

    GroupRingElem operator+(const GroupRingElem& o) const;
    GroupRingElem operator-(const GroupRingElem& o) const;
    GroupRingElem operator*(const GroupRingElem& o) const;
    GroupRingElem operator-() const;
    GroupRingElem& operator+=(const GroupRingElem& o) { return *this = *this + o; }
    GroupRingElem& operator-=(const GroupRingElem& o) { return *this = *this - o; }
    GroupRingElem& operator*=(const GroupRingElem& o) { return *this = *this * o; }

    bool operator==(const GroupRingElem& o) const;
    bool operator!=(const GroupRingElem& o) const { return !(*this == o); }

    // The involution t -> t^-1 extended linearly (identity on coefficients).
    GroupRingElem involute() const;

    // Coefficientwise reduction into Z/m.  modulus 0 strips an existing one
    // (lifting canonical representatives).
    GroupRingElem with_modulus(std::int64_t modulus) const;

    // Multiply by the monomial t^k.
    GroupRingElem shifted(std::int64_t k) const;

    // True iff the element is +-t^k (over a residue ring: coefficient +-1 mod m).
    bool is_trivial_unit() const;

    // For a trivial unit, return its inverse; throws NotInvertible otherwise.
    GroupRingElem trivial_unit_inverse() const;

    // Exact division: returns quotient iff o divides *this exactly in the
    // coefficient-characteristic-zero Laurent ring.  Requires modulus() == 0.
    std::optional<GroupRingElem> divide_exact(const GroupRingElem& o) const;

    // Sum of coefficients (the augmentation t -> 1).
    GroupRingElem augmentation() const;

    std::string to_string() const;

private:
    void normalize();
    static void require_same_modulus(const GroupRingElem& a, const GroupRingElem& b);

    std::map<std::int64_t, Int> c_;  // exponent -> nonzero coefficient
    std::int64_t modulus_ = 0;
};

GroupRingElem operator*(const Int& k, const GroupRingElem& e);

}  // namespace qf
