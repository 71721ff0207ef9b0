#include <gtest/gtest.h>

#include <random>

#include "seqproof/poly.hpp"

using namespace seqproof;

namespace {

const Prime kP(1009);

FieldElement fe(std::uint64_t v) { return FieldElement(v, kP); }

}  // namespace

TEST(Poly, CanonicalFormTrimsZeros) {
    const UniPoly z({fe(0), fe(0)}, kP);
    EXPECT_TRUE(z.is_zero());
    EXPECT_FALSE(z.degree().has_value());
    EXPECT_EQ(z.degree_string(), "zero");
    const UniPoly s({fe(1), fe(2), fe(0)}, kP);
    EXPECT_EQ(s.degree(), 1u);
    EXPECT_EQ(s, UniPoly({fe(1), fe(2)}, kP));
    EXPECT_EQ(UniPoly::constant(fe(5)).degree(), 0u);
}

TEST(Poly, EvaluateAndArithmetic) {
    const UniPoly s({fe(1), fe(2), fe(3)}, kP);  // 1 + 2x + 3x^2
    EXPECT_EQ(s.evaluate(2).residue(), 17u);
    EXPECT_EQ((s - s).is_zero(), true);
    EXPECT_EQ((s + s).evaluate(2).residue(), 34u);
    EXPECT_EQ((s * fe(2)).evaluate(1).residue(), 12u);
}

TEST(Poly, FromRootsVanishesOnRoots) {
    const std::vector<FieldElement> roots{fe(3), fe(7), fe(100)};
    const UniPoly r = UniPoly::from_roots(roots, fe(5));
    EXPECT_EQ(r.degree(), 3u);
    for (const auto& x : roots) EXPECT_TRUE(r.evaluate(x).is_zero());
    EXPECT_EQ(r.evaluate(0), fe(5) * -(fe(3) * fe(7) * fe(100)));
}

TEST(Poly, InterpolationRecoversRandomPolynomials) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> d(0, kP.value() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<FieldElement> coeffs;
        const int degree = trial % 8;
        for (int i = 0; i <= degree; ++i) coeffs.push_back(fe(d(rng)));
        const UniPoly s(coeffs, kP);
        std::vector<EvalPoint> pts;
        for (int i = 0; i <= degree; ++i) pts.emplace_back(fe(i), s.evaluate(i));
        EXPECT_EQ(lagrange_interpolate(pts), s);
    }
}

TEST(Poly, InterpolationGuards) {
    std::vector<EvalPoint> none;
    EXPECT_THROW(lagrange_interpolate(none), FieldError);
    std::vector<EvalPoint> dup{{fe(1), fe(2)}, {fe(1), fe(3)}};
    EXPECT_THROW(lagrange_interpolate(dup), FieldError);
}
