#include <bit>
#include <stdexcept>

#include "seqproof/cube_sum.hpp"
#include "seqproof/sumcheck.hpp"

namespace seqproof::simd {

namespace {

// Lane patterns for x_1..x_6 inside a 64-assignment block.
constexpr std::uint64_t kLanePattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

}  // namespace

PackedCnf pack(const Qbf& formula) {
    PackedCnf cnf;
    cnf.num_vars = static_cast<unsigned>(formula.num_vars());
    for (const auto& clause : formula.clauses()) {
        for (const auto& lit : clause) {
            cnf.variables.push_back(static_cast<std::uint8_t>(lit.variable - 1));
            cnf.negated.push_back(lit.negated ? 1 : 0);
        }
    }
    return cnf;
}

std::uint64_t count_scalar(const PackedCnf& cnf, std::uint64_t begin, std::uint64_t end) {
    const std::size_t m = cnf.num_clauses();
    std::uint64_t count = 0;
    for (std::uint64_t z = begin; z < end; ++z) {
        bool all = true;
        for (std::size_t c = 0; c < m && all; ++c) {
            bool any = false;
            for (std::size_t i = 3 * c; i < 3 * c + 3; ++i) {
                any |= (((z >> cnf.variables[i]) & 1) != 0) != (cnf.negated[i] != 0);
            }
            all = any;
        }
        count += all ? 1 : 0;
    }
    return count;
}

std::uint64_t count_swar64(const PackedCnf& cnf, std::uint64_t begin, std::uint64_t end) {
    const std::size_t m = cnf.num_clauses();
    if (cnf.num_vars < 6) {
        if (begin != 0 || end != (std::uint64_t{1} << cnf.num_vars)) {
            throw std::invalid_argument("small cubes are counted in one piece");
        }
        std::uint64_t all = end == 64 ? ~0ull : (std::uint64_t{1} << end) - 1;
        for (std::size_t c = 0; c < m; ++c) {
            std::uint64_t any = 0;
            for (std::size_t i = 3 * c; i < 3 * c + 3; ++i) {
                any |= cnf.negated[i] ? ~kLanePattern[cnf.variables[i]] : kLanePattern[cnf.variables[i]];
            }
            all &= any;
        }
        return static_cast<std::uint64_t>(std::popcount(all));
    }
    if (begin % 64 != 0 || end % 64 != 0) throw std::invalid_argument("SWAR range must be 64-aligned");
    std::uint64_t count = 0;
    for (std::uint64_t block = begin; block < end; block += 64) {
        std::uint64_t all = ~0ull;
        for (std::size_t c = 0; c < m && all; ++c) {
            std::uint64_t any = 0;
            for (std::size_t i = 3 * c; i < 3 * c + 3; ++i) {
                const unsigned v = cnf.variables[i];
                const std::uint64_t word =
                    v < 6 ? kLanePattern[v] : (((block >> v) & 1) ? ~0ull : 0ull);
                any |= cnf.negated[i] ? ~word : word;
            }
            all &= any;
        }
        count += static_cast<std::uint64_t>(std::popcount(all));
    }
    return count;
}

FieldElement cube_sum_field(const Qbf& formula, Prime p) {
    const std::size_t n = formula.num_vars();
    if (n > kCubeVarLimit) throw std::invalid_argument("cube too large");
    const auto f = sumcheck::arithmetize(formula, p);
    FieldElement total = FieldElement::zero(p);
    std::vector<FieldElement> point(n, FieldElement::zero(p));
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
        for (std::size_t i = 0; i < n; ++i) point[i] = FieldElement((z >> i) & 1, p);
        total = total + f.evaluate(point);
    }
    return total;
}

}  // namespace seqproof::simd
