#include "seqproof/field.hpp"

#include <ostream>
#include <string>
#include <utility>

namespace seqproof {

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    if (v < 4) return true;
    if (v % 2 == 0 || v % 3 == 0) return false;
    for (std::uint64_t d = 5; d * d <= v; d += 6) {
        if (v % d == 0 || v % (d + 2) == 0) return false;
    }
    return true;
}

Prime::Prime(std::uint64_t v) : value_(v) {
    if (v > kMaxPrime) throw FieldError("modulus " + std::to_string(v) + " exceeds 2^40");
    if (!is_prime(v)) throw FieldError(std::to_string(v) + " is not prime");
}

Prime next_prime_at_least(std::uint64_t bound) {
    if (bound > kMaxPrime) throw FieldError("prime bound " + std::to_string(bound) + " exceeds 2^40");
    for (std::uint64_t c = bound < 2 ? 2 : bound; c <= kMaxPrime; ++c) {
        if (is_prime(c)) return Prime(c);
    }
    throw FieldError("no prime >= " + std::to_string(bound) + " below 2^40");
}

FieldElement FieldElement::from_signed(std::int64_t value, Prime p) {
    const auto m = static_cast<std::int64_t>(p.value());
    std::int64_t r = value % m;
    if (r < 0) r += m;
    return FieldElement(static_cast<std::uint64_t>(r), p);
}

void FieldElement::require_same_field(const FieldElement& o) const {
    if (modulus_ != o.modulus_) {
        throw FieldError("modulus mismatch: " + std::to_string(modulus_) + " vs " +
                         std::to_string(o.modulus_));
    }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(o);
    std::uint64_t r = residue_ + o.residue_;
    if (r >= modulus_) r -= modulus_;
    return {r, modulus_, Prime::Trusted{}};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(o);
    const std::uint64_t r = residue_ >= o.residue_ ? residue_ - o.residue_ : residue_ + modulus_ - o.residue_;
    return {r, modulus_, Prime::Trusted{}};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(o);
    const auto prod = static_cast<unsigned __int128>(residue_) * o.residue_;
    return {static_cast<std::uint64_t>(prod % modulus_), modulus_, Prime::Trusted{}};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same_field(o);
    return *this * o.inverse();
}

FieldElement FieldElement::operator-() const {
    return {residue_ == 0 ? 0 : modulus_ - residue_, modulus_, Prime::Trusted{}};
}

FieldElement FieldElement::inverse() const {
    if (residue_ == 0) throw FieldError("division by zero");
    std::int64_t t = 0, new_t = 1;
    auto r = static_cast<std::int64_t>(modulus_), new_r = static_cast<std::int64_t>(residue_);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(modulus_);
    return {static_cast<std::uint64_t>(t), modulus_, Prime::Trusted{}};
}

FieldElement FieldElement::pow(std::uint64_t exp) const {
    FieldElement result{1 % modulus_, modulus_, Prime::Trusted{}};
    FieldElement base = *this;
    while (exp != 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

bool FieldElement::operator==(const FieldElement& o) const {
    require_same_field(o);
    return residue_ == o.residue_;
}

FieldElement field_op(const FieldElement& a, const FieldElement& b, FieldOp kind) {
    switch (kind) {
        case FieldOp::Add: return a + b;
        case FieldOp::Sub: return a - b;
        case FieldOp::Mul: return a * b;
        case FieldOp::InvMul: return a / b;
    }
    throw FieldError("unknown field operation");
}

FieldElement mod_pow(const FieldElement& base, std::uint64_t exp) { return base.pow(exp); }

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.residue(); }

}  // namespace seqproof
