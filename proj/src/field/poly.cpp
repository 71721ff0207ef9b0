#include "seqproof/poly.hpp"

#include <algorithm>

namespace seqproof {

UniPoly::UniPoly(std::vector<FieldElement> coefficients, Prime p)
    : coeffs_(std::move(coefficients)), modulus_(p) {
    for (const auto& c : coeffs_) {
        if (c.modulus() != p) throw FieldError("coefficient modulus differs from polynomial modulus");
    }
    trim();
}

UniPoly UniPoly::constant(const FieldElement& c) { return UniPoly({c}, c.modulus()); }

UniPoly UniPoly::from_roots(std::span<const FieldElement> roots, const FieldElement& c) {
    const Prime p = c.modulus();
    std::vector<FieldElement> acc{c};
    for (const auto& root : roots) {
        // acc * (x - root)
        std::vector<FieldElement> next(acc.size() + 1, FieldElement::zero(p));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i];
            next[i] -= acc[i] * root;
        }
        acc = std::move(next);
    }
    return UniPoly(std::move(acc), p);
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> UniPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

std::string UniPoly::degree_string() const {
    const auto d = degree();
    return d ? std::to_string(*d) : "zero";
}

FieldElement UniPoly::evaluate(const FieldElement& x) const {
    FieldElement acc = FieldElement::zero(modulus_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    if (o.modulus_ != modulus_) throw FieldError("modulus mismatch");
    std::vector<FieldElement> out(std::max(coeffs_.size(), o.coeffs_.size()), FieldElement::zero(modulus_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return UniPoly(std::move(out), modulus_);
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o * -FieldElement::one(modulus_); }

UniPoly UniPoly::operator*(const FieldElement& c) const {
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.push_back(a * c);
    return UniPoly(std::move(out), modulus_);
}

bool UniPoly::operator==(const UniPoly& o) const {
    return modulus_ == o.modulus_ && coeffs_ == o.coeffs_;
}

UniPoly lagrange_interpolate(std::span<const EvalPoint> points) {
    if (points.empty()) throw FieldError("interpolation needs at least one point");
    const Prime p = points.front().first.modulus();
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].first == points[j].first) {
                throw FieldError("duplicate x-coordinate " + std::to_string(points[i].first.residue()));
            }
        }
    }

    UniPoly result(p);
    std::vector<FieldElement> others;
    others.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        others.clear();
        FieldElement denom = FieldElement::one(p);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            others.push_back(points[j].first);
            denom *= points[i].first - points[j].first;
        }
        result = result + UniPoly::from_roots(others, points[i].second / denom);
    }
    return result;
}

}  // namespace seqproof
