#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seqproof/field.hpp"

namespace seqproof {

/// Univariate polynomial over F_p, coefficients lowest degree first.
/// Always canonical: no trailing zero coefficient, so the zero polynomial
/// has an empty coefficient list and no degree.
class UniPoly {
public:
    explicit UniPoly(Prime p) : modulus_(p) {}
    /// Trims trailing zeros. Throws FieldError if a coefficient has another modulus.
    UniPoly(std::vector<FieldElement> coefficients, Prime p);

    static UniPoly constant(const FieldElement& c);
    /// c * prod (x - root).
    static UniPoly from_roots(std::span<const FieldElement> roots, const FieldElement& c);

    Prime modulus() const { return modulus_; }
    const std::vector<FieldElement>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    /// "zero" or the decimal degree.
    std::string degree_string() const;

    FieldElement evaluate(const FieldElement& x) const;
    FieldElement evaluate(std::uint64_t x) const { return evaluate(FieldElement(x, modulus_)); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const FieldElement& c) const;

    bool operator==(const UniPoly& o) const;

private:
    void trim();

    std::vector<FieldElement> coeffs_;
    Prime modulus_;
};

using EvalPoint = std::pair<FieldElement, FieldElement>;

/// Unique polynomial of degree < points.size() through every point.
/// Throws FieldError on an empty set, duplicate x, or mixed moduli.
UniPoly lagrange_interpolate(std::span<const EvalPoint> points);

}  // namespace seqproof
