#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "oracles/qbf_oracle.hpp"
#include "seqproof/cube_sum.hpp"
#include "seqproof/harness.hpp"

using namespace seqproof;
using namespace seqproof::simd;

TEST(CubeSum, KernelsMatchOracleCount) {
    std::mt19937_64 rng(5);
    for (std::size_t n = 1; n <= 20; ++n) {
        const Qbf f = harness::random_qbf(n, 2 * n, rng);
        const std::uint64_t expected = oracle::count_models(f);
        const auto packed = pack(f);
        EXPECT_EQ(count_scalar(packed, 0, std::uint64_t{1} << n), expected) << "n=" << n;
        for (auto kind : available_kernels()) {
            for (unsigned w : {1u, 2u, 4u, 8u}) {
                EXPECT_EQ(cube_count(f, {w, kind}), expected) << "n=" << n << " " << to_string(kind) << " w=" << w;
            }
        }
    }
}

TEST(CubeSum, FieldRouteAgrees) {
    std::mt19937_64 rng(6);
    for (std::size_t n = 1; n <= 10; ++n) {
        const Qbf f = harness::random_qbf(n, n + 1, rng);
        const Prime p = next_prime_at_least(std::uint64_t{1} << (n + 1));
        EXPECT_EQ(cube_sum(f, p), cube_sum_field(f, p));
        EXPECT_EQ(cube_sum(f, p).residue(), oracle::count_models(f) % p.value());
    }
}

TEST(CubeSum, RangeKernelsAgreeOnSubranges) {
    std::mt19937_64 rng(7);
    const Qbf f = harness::random_qbf(12, 20, rng);
    const auto packed = pack(f);
    for (std::uint64_t begin = 0; begin < 4096; begin += 512) {
        const std::uint64_t ref = count_scalar(packed, begin, begin + 512);
        EXPECT_EQ(count_swar64(packed, begin, begin + 512), ref);
        if (kernel_available(KernelKind::Avx2)) EXPECT_EQ(count_avx2(packed, begin, begin + 512), ref);
    }
}

TEST(CubeSum, Guards) {
    const Qbf f = parse_qbf("p cnf 1 1\ne 1 0\n1 0\n");
    EXPECT_THROW(cube_count(f, {0, std::nullopt}), std::invalid_argument);
    EXPECT_EQ(cube_count(f, {8, std::nullopt}), 1u);
    EXPECT_THROW(parse_kernel("gpu"), std::invalid_argument);
    EXPECT_EQ(parse_kernel("swar64"), KernelKind::Swar64);
}

TEST(CubeSum, EnvironmentOverride) {
    ::setenv("SEQPROOF_KERNEL", "scalar", 1);
    EXPECT_EQ(select_kernel(), KernelKind::Scalar);
    ::setenv("SEQPROOF_KERNEL", "swar64", 1);
    EXPECT_EQ(select_kernel(), KernelKind::Swar64);
    ::unsetenv("SEQPROOF_KERNEL");
    EXPECT_TRUE(kernel_available(select_kernel()));
}
