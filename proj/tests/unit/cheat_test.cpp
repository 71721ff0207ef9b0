#include <gtest/gtest.h>

#include "seqproof/harness.hpp"
#include "seqproof/sumcheck.hpp"

using namespace seqproof;
using namespace seqproof::sumcheck;

namespace {

double accept_rate(CheatStrategy s, std::size_t round, const Qbf& f, Prime p, int trials) {
    int accepted = 0;
    for (int i = 0; i < trials; ++i) {
        RandomChallenges coins(p, harness::trial_seed(99, i));
        auto prover = make_cheat_prover({s, round, static_cast<std::uint64_t>(i)}, f, p);
        Verifier verifier(f, p, coins);
        accepted += run_session(*prover, verifier).verdict.accepted();
    }
    return static_cast<double>(accepted) / trials;
}

}  // namespace

TEST(Cheat, StrategyNamesRoundTrip) {
    for (auto s : {CheatStrategy::WrongClaim, CheatStrategy::RandomRound, CheatStrategy::ConstantPoly}) {
        EXPECT_EQ(parse_cheat_strategy(to_string(s)), s);
    }
    EXPECT_THROW(parse_cheat_strategy("bogus"), SumcheckError);
}

TEST(Cheat, CheatersPassEveryRoundCheck) {
    // Every rejection must come from the final evaluation: the patched
    // polynomials always satisfy the round equations.
    const Qbf f = parse_qbf("p cnf 2 2\ne 1 0\na 2 0\n1 2 0\n1 -2 0\n");
    const Prime p(1009);
    for (auto s : {CheatStrategy::WrongClaim, CheatStrategy::RandomRound, CheatStrategy::ConstantPoly}) {
        for (std::size_t k = 1; k <= chain_length(2); ++k) {
            RandomChallenges coins(p, k);
            auto prover = make_cheat_prover({s, k, 7}, f, p);
            Verifier verifier(f, p, coins);
            const auto v = run_session(*prover, verifier).verdict;
            EXPECT_TRUE(v.accepted() || v.reason == RejectReason::FinalMismatch)
                << to_string(s) << " round " << k << ": " << to_string(v.reason) << " " << v.detail;
        }
    }
}

TEST(Cheat, WrongClaimOnSingleVariableStaysNearBound) {
    const Qbf f = parse_qbf("p cnf 1 1\ne 1 0\n1 0\n");
    const Prime p(223);
    const double bound = 4.0 / 223.0;
    const double rate = accept_rate(CheatStrategy::WrongClaim, 1, f, p, 4000);
    EXPECT_LE(rate, bound + harness::binomial_3sigma(bound, 4000));
}

TEST(Cheat, RandomRoundIndexValidated) {
    const Qbf f = parse_qbf("p cnf 1 1\ne 1 0\n1 0\n");
    EXPECT_THROW(make_cheat_prover({CheatStrategy::RandomRound, 0, 1}, f, Prime(223)), SumcheckError);
    EXPECT_THROW(make_cheat_prover({CheatStrategy::RandomRound, 3, 1}, f, Prime(223)), SumcheckError);
}

TEST(Cheat, DrivenWithoutVerifierRecordsFullTranscript) {
    const Qbf f = parse_qbf("p cnf 2 1\ne 1 0\na 2 0\n1 2 0\n");
    const Prime p(223);
    RandomChallenges coins(p, 4);
    const Transcript t = cheat_prover({CheatStrategy::ConstantPoly, 1, 0}, f, p, coins);
    EXPECT_EQ(t.rounds.size(), chain_length(2));
    EXPECT_EQ(t.final_point.size(), 2u);
}
