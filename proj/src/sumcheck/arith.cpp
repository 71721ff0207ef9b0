#include "seqproof/sumcheck.hpp"

#include <limits>

namespace seqproof::sumcheck {

FieldElement ArithPoly::evaluate(std::span<const FieldElement> point) const {
    if (point.size() != num_vars()) {
        throw SumcheckError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                            std::to_string(num_vars()));
    }
    const FieldElement one = FieldElement::one(p_);
    FieldElement acc = one;
    for (const auto& clause : formula_.clauses()) {
        FieldElement unsat = one;
        for (const auto& lit : clause) {
            const FieldElement& a = point[lit.variable - 1];
            unsat *= lit.negated ? a : one - a;
        }
        acc *= one - unsat;
        if (acc.is_zero()) break;
    }
    return acc;
}

ArithPoly arithmetize(const Qbf& formula, Prime p) { return ArithPoly(formula, p); }

std::uint64_t minimum_prime_bound(std::size_t n, std::size_t m) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t bound = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (bound > kMax / 2) return kMax;
        bound *= 2;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (bound > kMax / 3) return kMax;
        bound *= 3;
    }
    return bound;
}

Prime default_prime(const Qbf& formula) {
    return next_prime_at_least(minimum_prime_bound(formula.num_vars(), formula.num_clauses()));
}

}  // namespace seqproof::sumcheck
