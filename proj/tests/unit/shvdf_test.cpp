#include <gtest/gtest.h>

#include <random>

#include "oracles/golden.hpp"
#include "seqproof/shvdf.hpp"

using namespace seqproof;
using namespace seqproof::vdf;

namespace {

VdfParams golden_pp() { return vdf_setup(16, 1024, 32, seed_from_integer(7)); }

std::string z_string(const std::vector<tm::Symbol>& z) {
    std::string s;
    for (auto sym : z) s.push_back(tm::to_char(sym));
    return s;
}

}  // namespace

TEST(Vdf, SetupIsDeterministicAndGuarded) {
    const auto a = vdf_setup(16, 1024, 32, seed_from_integer(0));
    EXPECT_EQ(a, vdf_setup(16, 1024, 32, seed_from_integer(0)));
    EXPECT_EQ(a.state_bits, 32u);
    EXPECT_EQ(vdf_setup(40, 1024, 32, seed_from_integer(0)).state_bits, 64u);
    EXPECT_THROW(vdf_setup(16, 16, 32, seed_from_integer(0)), VdfError);   // T <= lambda
    EXPECT_THROW(vdf_setup(7, 1024, 32, seed_from_integer(0)), VdfError);  // lambda < 8
    EXPECT_THROW(vdf_setup(8, std::uint64_t{1} << 13, 32, seed_from_integer(0)), VdfError);  // 13 > 1.5 * 8
    EXPECT_THROW(vdf_setup(16, 1024, 32, seed_from_integer(0), {.state_bits = 12}), VdfError);
    EXPECT_THROW(vdf_setup(16, 1024, 1, seed_from_integer(0)), VdfError);
}

TEST(Vdf, SeedsChangeTheRule) {
    const auto m0 = vdf_machine(vdf_setup(16, 1024, 32, seed_from_integer(0)));
    const auto m1 = vdf_machine(vdf_setup(16, 1024, 32, seed_from_integer(1)));
    std::mt19937_64 rng(2);
    int differ = 0;
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t q = rng() & 0xffffffffu;
        const auto a = static_cast<tm::Symbol>(rng() % 3);
        differ += !(m0.transition(q, a) == m1.transition(q, a));
    }
    EXPECT_GE(differ, 1);
}

TEST(Vdf, HaltingSetExemptsInitialState) {
    const auto m = vdf_machine(golden_pp());
    EXPECT_FALSE(m.halt.contains(0));
    EXPECT_TRUE(m.halt.contains(1));
    EXPECT_TRUE(m.halt.contains(15));
    EXPECT_FALSE(m.halt.contains(16));
}

TEST(Vdf, GoldenEvalAndOpen) {
    const auto pp = golden_pp();
    EXPECT_EQ(to_hex(encode_params(pp)), golden::kParamsHex);
    const auto eval = vdf_eval(pp, "10110");
    EXPECT_EQ(eval.output.y, golden::kQT);
    EXPECT_EQ(eval.steps, 1024u);
    const auto open = vdf_open(pp, "10110", {golden::kOpenT});
    EXPECT_EQ(open.proof.qt, golden::kQt);
    EXPECT_EQ(z_string(open.proof.z), golden::kZ);
    EXPECT_EQ(open.steps, 1024u);
    EXPECT_TRUE(vdf_verify(pp, "10110", eval.output, {golden::kOpenT}, open.proof));
}

TEST(Vdf, CompleteForEveryChallenge) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto pp = vdf_setup(16, 2048, 32, seed_from_integer(seed));
        const auto y = vdf_eval(pp, "0110").output;
        for (std::uint64_t t = pp.T - pp.lambda; t < pp.T; ++t) {
            const auto open = vdf_open(pp, "0110", {t});
            EXPECT_EQ(open.proof.z.size(), pp.T - t + 1);
            const auto r = vdf_verify_counted(pp, "0110", y, {t}, open.proof);
            EXPECT_TRUE(r.accepted) << r.reason;
            EXPECT_LE(r.steps, pp.lambda);
        }
    }
}

TEST(Vdf, StepCounterDoublesWithT) {
    const auto a = vdf_eval(vdf_setup(16, 1024, 32, seed_from_integer(3)), "1");
    const auto b = vdf_eval(vdf_setup(16, 2048, 32, seed_from_integer(3)), "1");
    EXPECT_EQ(b.steps, 2 * a.steps);
}

TEST(Vdf, TamperedProofsRejected) {
    const auto pp = golden_pp();
    const auto y = vdf_eval(pp, "10110").output;
    const auto open = vdf_open(pp, "10110", {pp.T - 1});
    EXPECT_EQ(open.proof.z.size(), 2u);
    EXPECT_TRUE(vdf_verify(pp, "10110", y, {pp.T - 1}, open.proof));

    int rejected = 0;
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        const auto inst = vdf_setup(16, 1024, 32, seed_from_integer(rng()));
        const std::uint64_t t = inst.T - 1 - rng() % inst.lambda;
        const auto honest_y = vdf_eval(inst, "1").output;
        auto proof = vdf_open(inst, "1", {t}).proof;
        proof.qt += 1;
        rejected += !vdf_verify(inst, "1", honest_y, {t}, proof);
    }
    EXPECT_GE(rejected, 198);

    auto short_z = open.proof;
    short_z.z.pop_back();
    EXPECT_FALSE(vdf_verify(pp, "10110", y, {pp.T - 1}, short_z));
    EXPECT_FALSE(vdf_verify(pp, "10110", y, {pp.T}, open.proof));
    EXPECT_THROW(vdf_open(pp, "10110", {pp.T - pp.lambda - 1}), VdfError);
    EXPECT_THROW(vdf_eval(pp, std::string(32, '1')), VdfError);
}

TEST(Vdf, AttackForgesAcceptedProofsCheaply) {
    const auto pp = vdf_setup(32, std::uint64_t{1} << 16, 32, seed_from_integer(5));
    const auto adversary = vdf_attack(pp, "101", 11);
    EXPECT_LE(adversary.steps(), pp.lambda + 1);
    EXPECT_FALSE(vdf_machine(pp).halt.contains(adversary.start_state()));
    for (std::uint64_t t = pp.T - pp.lambda; t < pp.T; ++t) {
        EXPECT_TRUE(vdf_verify(pp, "101", adversary.forged_output(), {t}, adversary.respond({t})));
    }
    EXPECT_THROW(adversary.respond({pp.T}), VdfError);
}

TEST(Vdf, EncodingsRoundTrip) {
    const auto pp = vdf_setup(12, 300, 9, Bytes{0xde, 0xad}, {.state_bits = 20});
    EXPECT_EQ(decode_params(encode_params(pp)), pp);
    EXPECT_EQ(encode_output(pp, {0xabcde}).size(), 3u);
    EXPECT_EQ(decode_output(pp, encode_output(pp, {0xabcde})).y, 0xabcdeu);
    EXPECT_THROW(decode_output(pp, Bytes{0xff, 0xff, 0xff}), DecodeError);  // above 2^20

    const VdfProof proof{77, {tm::Symbol::One, tm::Symbol::LeftEnd, tm::Symbol::Zero, tm::Symbol::One,
                              tm::Symbol::One}};
    const Bytes enc = encode_proof(pp, proof);
    EXPECT_EQ(to_hex(enc), "00004d00000005" "61" "40");
    EXPECT_EQ(decode_proof(pp, enc), proof);
    Bytes bad_pad = enc;
    bad_pad.back() |= 1;
    EXPECT_THROW(decode_proof(pp, bad_pad), DecodeError);
    Bytes bad_code = enc;
    bad_code[7] = 0xc0;
    EXPECT_THROW(decode_proof(pp, bad_code), DecodeError);
    Bytes truncated = encode_params(pp);
    truncated.pop_back();
    EXPECT_THROW(decode_params(truncated), DecodeError);
}
