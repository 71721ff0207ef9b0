#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>

namespace seqproof {

/// Largest modulus accepted; products of two residues fit in 128 bits with room to spare.
inline constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 40;

class FieldError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Deterministic trial division up to sqrt(v).
bool is_prime(std::uint64_t v);

/// A prime modulus in [2, 2^40].
class Prime {
public:
    /// Throws FieldError if v is not prime or exceeds kMaxPrime.
    explicit Prime(std::uint64_t v);

    std::uint64_t value() const { return value_; }

    friend bool operator==(Prime, Prime) = default;

private:
    friend class FieldElement;
    struct Trusted {};
    Prime(std::uint64_t v, Trusted) : value_(v) {}

    std::uint64_t value_;
};

/// Smallest prime >= bound. Throws FieldError if that prime would exceed kMaxPrime.
Prime next_prime_at_least(std::uint64_t bound);

/// A residue in [0, p). Immutable value type; the modulus travels with the value.
class FieldElement {
public:
    FieldElement(std::uint64_t value, Prime p) : residue_(value % p.value()), modulus_(p.value()) {}
    /// Reduces signed values into [0, p).
    static FieldElement from_signed(std::int64_t value, Prime p);
    static FieldElement zero(Prime p) { return FieldElement(0, p); }
    static FieldElement one(Prime p) { return FieldElement(1, p); }

    std::uint64_t residue() const { return residue_; }
    Prime modulus() const { return Prime(modulus_, Prime::Trusted{}); }
    bool is_zero() const { return residue_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    /// Multiplication by the inverse of o. Throws FieldError on o == 0.
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t exp) const;

    /// Equality requires the same modulus; comparing across moduli throws.
    bool operator==(const FieldElement& o) const;

private:
    FieldElement(std::uint64_t residue, std::uint64_t modulus, Prime::Trusted)
        : residue_(residue), modulus_(modulus) {}
    void require_same_field(const FieldElement& o) const;

    std::uint64_t residue_;
    std::uint64_t modulus_;
};

enum class FieldOp { Add, Sub, Mul, InvMul };

/// a (op) b; InvMul computes a * b^-1.
FieldElement field_op(const FieldElement& a, const FieldElement& b, FieldOp kind);

FieldElement mod_pow(const FieldElement& base, std::uint64_t exp);

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace seqproof
