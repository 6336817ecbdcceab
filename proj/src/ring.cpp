#include "qf/ring.hpp"

#include <sstream>

namespace qf {

std::string Ring::describe() const {
    std::ostringstream os;
    if (modulus == 0) {
        os << (laurent ? "Z[t,t^-1]" : "Z");
    } else {
        os << "(Z/" << modulus << ")" << (laurent ? "[t,t^-1]" : "");
    }
    return os.str();
}

static Int reduce_coeff(Int v, std::int64_t m) {
    if (m == 0) return v;
    Int r = v % m;
    if (r < 0) r += m;
    return r;
}

GroupRingElem GroupRingElem::constant(Int c, std::int64_t modulus) {
    return monomial(std::move(c), 0, modulus);
}

GroupRingElem GroupRingElem::monomial(Int c, std::int64_t exponent, std::int64_t modulus) {
    GroupRingElem e(modulus);
    c = reduce_coeff(std::move(c), modulus);
    if (c != 0) e.c_[exponent] = std::move(c);
    return e;
}

bool GroupRingElem::is_constant() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

Int GroupRingElem::constant_term() const { return coeff(0); }

Int GroupRingElem::coeff(std::int64_t exponent) const {
    auto it = c_.find(exponent);
    return it == c_.end() ? Int(0) : it->second;
}

void GroupRingElem::set_coeff(std::int64_t exponent, Int value) {
    value = reduce_coeff(std::move(value), modulus_);
    if (value == 0)
        c_.erase(exponent);
    else
        c_[exponent] = std::move(value);
}

void GroupRingElem::normalize() {
    for (auto it = c_.begin(); it != c_.end();) {
        it->second = reduce_coeff(std::move(it->second), modulus_);
        if (it->second == 0)
            it = c_.erase(it);
        else
            ++it;
    }
}

void GroupRingElem::require_same_modulus(const GroupRingElem& a, const GroupRingElem& b) {
    if (a.modulus_ != b.modulus_)
        throw RingMismatch("elements over different coefficient rings (moduli " +
                           std::to_string(a.modulus_) + " and " + std::to_string(b.modulus_) + ")");
}

GroupRingElem GroupRingElem::operator+(const GroupRingElem& o) const {
    require_same_modulus(*this, o);
    GroupRingElem r = *this;
    for (const auto& [e, c] : o.c_) r.c_[e] += c;
    r.normalize();
    return r;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem& o) const {
    require_same_modulus(*this, o);
    GroupRingElem r = *this;
    for (const auto& [e, c] : o.c_) r.c_[e] -= c;
    r.normalize();
    return r;
}

GroupRingElem GroupRingElem::operator*(const GroupRingElem& o) const {
    require_same_modulus(*this, o);
    GroupRingElem r(modulus_);
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) r.c_[e1 + e2] += c1 * c2;
    r.normalize();
    return r;
}

GroupRingElem GroupRingElem::operator-() const {
    GroupRingElem r(modulus_);
    for (const auto& [e, c] : c_) r.c_[e] = reduce_coeff(-c, modulus_);
    return r;
}

bool GroupRingElem::operator==(const GroupRingElem& o) const {
    return modulus_ == o.modulus_ && c_ == o.c_;
}

GroupRingElem GroupRingElem::involute() const {
    GroupRingElem r(modulus_);
    for (const auto& [e, c] : c_) r.c_[-e] = c;
    return r;
}

GroupRingElem GroupRingElem::with_modulus(std::int64_t modulus) const {
    GroupRingElem r(modulus);
    for (const auto& [e, c] : c_) r.c_[e] = c;
    r.normalize();
    return r;
}

GroupRingElem GroupRingElem::shifted(std::int64_t k) const {
    GroupRingElem r(modulus_);
    for (const auto& [e, c] : c_) r.c_[e + k] = c;
    return r;
}

bool GroupRingElem::is_trivial_unit() const {
    if (c_.size() != 1) return false;
    const Int& c = c_.begin()->second;
    if (modulus_ == 0) return c == 1 || c == -1;
    return c == 1 || c == modulus_ - 1;
}

GroupRingElem GroupRingElem::trivial_unit_inverse() const {
    if (!is_trivial_unit())
        throw NotInvertible("element " + to_string() + " is not a trivial unit");
    const auto& [e, c] = *c_.begin();
    return monomial(c, -e, modulus_);  // (+-t^k)^-1 = +-t^-k
}

std::optional<GroupRingElem> GroupRingElem::divide_exact(const GroupRingElem& o) const {
    if (modulus_ != 0 || o.modulus_ != 0)
        throw DomainError("divide_exact requires characteristic zero");
    if (o.is_zero()) {
        if (is_zero()) return zero();
        return std::nullopt;
    }
    if (is_zero()) return zero();
    // Long division of Laurent polynomials: divide leading terms repeatedly.
    GroupRingElem rem = *this;
    GroupRingElem quot;
    const std::int64_t de = o.max_exponent();
    const Int& dc = o.c_.rbegin()->second;
    while (!rem.is_zero()) {
        std::int64_t re = rem.max_exponent();
        Int rc = rem.c_.rbegin()->second;
        if (rc % dc != 0) return std::nullopt;
        GroupRingElem term = monomial(rc / dc, re - de);
        quot += term;
        rem -= term * o;
        if (!rem.is_zero() && rem.max_exponent() >= re) return std::nullopt;  // no progress
    }
    return quot;
}

GroupRingElem GroupRingElem::augmentation() const {
    Int s = 0;
    for (const auto& [e, c] : c_) s += c;
    return constant(std::move(s), modulus_);
}

std::string GroupRingElem::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
        Int abs_c = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (abs_c != 1 || e == 0) os << abs_c;
        if (e != 0) {
            if (abs_c != 1) os << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

GroupRingElem operator*(const Int& k, const GroupRingElem& e) {
    return GroupRingElem::constant(k, e.modulus()) * e;
}

}  // namespace qf
