#include <immintrin.h>

#include <bit>
#include <stdexcept>

#include "seqproof/cube_sum.hpp"

namespace seqproof::simd {

namespace {

constexpr std::uint64_t kLanePattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

}  // namespace

std::uint64_t count_avx2(const PackedCnf& cnf, std::uint64_t begin, std::uint64_t end) {
    if (cnf.num_vars < 8 || begin % 256 != 0 || end % 256 != 0) {
        throw std::invalid_argument("AVX2 range must be 256-aligned with at least 8 variables");
    }
    const std::size_t m = cnf.num_clauses();
    const __m256i ones = _mm256_set1_epi64x(-1);

    // Fixed words for x_1..x_8; 64-bit lane k holds assignments block + 64k + j.
    __m256i fixed[8];
    for (unsigned v = 0; v < 6; ++v) fixed[v] = _mm256_set1_epi64x(static_cast<long long>(kLanePattern[v]));
    fixed[6] = _mm256_set_epi64x(-1, 0, -1, 0);
    fixed[7] = _mm256_set_epi64x(-1, -1, 0, 0);

    std::uint64_t count = 0;
    for (std::uint64_t block = begin; block < end; block += 256) {
        __m256i all = ones;
        for (std::size_t c = 0; c < m; ++c) {
            __m256i any = _mm256_setzero_si256();
            for (std::size_t i = 3 * c; i < 3 * c + 3; ++i) {
                const unsigned v = cnf.variables[i];
                __m256i word = v < 8 ? fixed[v] : (((block >> v) & 1) ? ones : _mm256_setzero_si256());
                if (cnf.negated[i]) word = _mm256_xor_si256(word, ones);
                any = _mm256_or_si256(any, word);
            }
            all = _mm256_and_si256(all, any);
            if (_mm256_testz_si256(all, all)) break;
        }
        alignas(32) std::uint64_t lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), all);
        for (auto lane : lanes) count += static_cast<std::uint64_t>(std::popcount(lane));
    }
    return count;
}

}  // namespace seqproof::simd
