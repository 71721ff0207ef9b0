#include <gtest/gtest.h>

#include <random>

#include "oracles/golden.hpp"
#include "seqproof/fiatshamir.hpp"
#include "seqproof/harness.hpp"

using namespace seqproof;
using namespace seqproof::fs;

namespace {

const char* kMixed3 = "p cnf 3 3\ne 1 0\na 2 0\ne 3 0\n1 2 3 0\n-2 3 0\n1 -3 0\n";

std::vector<Message> random_messages(std::mt19937_64& rng) {
    const std::uint8_t tags[] = {0x01, 0x02, 0x03, 0x04, 0x05, 0x10, 0x11, 0x12, 0x13, 0x14};
    std::vector<Message> ms(rng() % 6);
    for (auto& m : ms) {
        m.tag = tags[rng() % std::size(tags)];
        m.payload.resize(rng() % 20);
        for (auto& b : m.payload) b = static_cast<std::uint8_t>(rng());
    }
    return ms;
}

}  // namespace

TEST(Transcript, EncodingRoundTripsAndIsInjective) {
    EXPECT_TRUE(transcript_encode(std::vector<Message>{}).empty());
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        const auto ms = random_messages(rng);
        const Bytes enc = transcript_encode(ms);
        EXPECT_EQ(transcript_decode(enc), ms);
        for (std::size_t k = 0; k < ms.size(); ++k) {
            if (ms[k].payload.empty()) continue;
            auto other = ms;
            other[k].payload[rng() % other[k].payload.size()] ^= 0x01;
            EXPECT_NE(transcript_encode(other), enc);
        }
    }
    const std::vector<Message> one{{MessageKind::Claim, Bytes{0xaa}}};
    EXPECT_EQ(to_hex(transcript_encode(one)), "0300000001aa");
    const std::vector<Message> bad{{std::uint8_t{0x7f}, Bytes{}}};
    EXPECT_THROW(transcript_encode(bad), TranscriptError);
    EXPECT_THROW(transcript_decode(Bytes{0x7f, 0, 0, 0, 0}), DecodeError);
    EXPECT_THROW(transcript_decode(Bytes{0x03, 0, 0, 0, 2, 0xaa}), DecodeError);
}

TEST(Transcript, FileMagic) {
    const std::vector<Message> one{{MessageKind::Prime, Bytes{1}}};
    const Bytes file = transcript_file(one);
    EXPECT_EQ(std::string(file.begin(), file.begin() + 8), "SEQPROOF");
    EXPECT_EQ(read_transcript_file(file), one);
    Bytes bad = file;
    bad[0] = 'X';
    EXPECT_THROW(read_transcript_file(bad), DecodeError);
}

TEST(Oracle, DeterministicAndInRange) {
    const Bytes t{1, 2, 3};
    const auto spec = OracleSpec::tqbf();
    EXPECT_EQ(ro_challenge(spec, t, Prime(223)), ro_challenge(spec, t, Prime(223)));
    EXPECT_NE(ro_digest(OracleSpec::tqbf(), t), ro_digest(OracleSpec::shvdf(), t));
    std::mt19937_64 rng(4);
    for (int i = 0; i < 500; ++i) {
        const Bytes x{static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng())};
        const std::uint64_t v = ro_challenge(spec, x, 1008, 1023);
        EXPECT_GE(v, 1008u);
        EXPECT_LE(v, 1023u);
        EXPECT_LT(ro_challenge(spec, x, Prime(7)).residue(), 7u);
    }
    EXPECT_THROW(ro_challenge(spec, t, 5, 4), std::invalid_argument);
    // Digest of "SHVDF-v1" as a big-endian integer mod 16, shifted.
    const std::string ds = "SHVDF-v1";
    const auto d = sha256(Bytes(ds.begin(), ds.end()));
    EXPECT_EQ(ro_challenge(OracleSpec::shvdf(), Bytes{}, 100, 115), 100u + d[31] % 16);
}

TEST(FsSumcheck, HonestTranscriptVerifies) {
    const Qbf f = parse_qbf(kMixed3);
    const Prime p = sumcheck::default_prime(f);
    const auto proof = fs_prove_tqbf(f, p);
    EXPECT_TRUE(fs_verify_tqbf(f, proof.file).accepted());
    EXPECT_EQ(fs_prove_tqbf(f, p).file, proof.file);  // replays are bit-identical
    EXPECT_EQ(sumcheck_from_messages(read_transcript_file(proof.file)).final_point, proof.transcript.final_point);

    const Qbf other = parse_qbf("p cnf 3 3\ne 1 0\na 2 0\ne 3 0\n1 2 3 0\n-2 3 0\n1 3 0\n");
    EXPECT_EQ(fs_verify_tqbf(other, proof.file).reason, sumcheck::RejectReason::Malformed);
    OracleSpec foreign = OracleSpec::tqbf();
    foreign.domain_separator.push_back('!');
    EXPECT_EQ(fs_verify_tqbf(f, proof.file, foreign).reason, sumcheck::RejectReason::ChallengeMismatch);
}

TEST(FsSumcheck, InteractiveAndFsAgreeOnHonestProvers) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 20; ++i) {
        const bool truth = i % 2 == 0;
        const Qbf f = harness::random_qbf_with_truth(1 + i % 3, 1 + i % 4, truth, rng);
        const Prime p = sumcheck::default_prime(f);
        sumcheck::RandomChallenges coins(p, i);
        sumcheck::HonestProver prover(f, p);
        const bool interactive = sumcheck::sumcheck_verify(f, p, prover, coins).accepted();
        const bool fs = fs_verify_tqbf(f, fs_prove_tqbf(f, p).file).accepted();
        EXPECT_EQ(interactive, fs);
        EXPECT_EQ(fs, truth);
    }
}

TEST(FsSumcheck, SingleByteTamperingRejected) {
    const Qbf f = parse_qbf(kMixed3);
    const auto proof = fs_prove_tqbf(f, sumcheck::default_prime(f));
    std::mt19937_64 rng(21);
    int rejected = 0;
    for (int i = 0; i < 100; ++i) {
        Bytes t = proof.file;
        t[rng() % t.size()] ^= static_cast<std::uint8_t>(1 + rng() % 255);
        rejected += !fs_verify_tqbf(f, t).accepted();
    }
    EXPECT_GE(rejected, 99);
}

TEST(FsSumcheck, CheatingProverStillBoundBySoundness) {
    const Qbf f = parse_qbf("p cnf 1 1\ne 1 0\n1 0\n");
    const Prime p(223);
    int accepted = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto prover = sumcheck::make_cheat_prover({sumcheck::CheatStrategy::WrongClaim, 1, seed}, f, p);
        const auto proof = fs_run_prover(*prover, f, p);
        accepted += fs_verify_tqbf(f, proof.file).accepted();
    }
    EXPECT_LE(accepted, 20);
}

TEST(FsVdf, GoldenChallengeAndRoundTrip) {
    const auto pp = vdf::vdf_setup(16, 1024, 32, vdf::seed_from_integer(7));
    const auto proof = fs_prove_vdf(pp, "10110");
    EXPECT_EQ(proof.y.y, golden::kQT);
    EXPECT_EQ(proof.t.t, golden::kFsT);
    EXPECT_EQ(proof.eval_steps, 1024u);
    const auto v = fs_verify_vdf(proof.file, &pp, std::string_view("10110"));
    EXPECT_TRUE(v.accepted) << v.reason;
    EXPECT_EQ(v.t.t, golden::kFsT);
    EXPECT_FALSE(fs_verify_vdf(proof.file, &pp, std::string_view("10111")).accepted);
}

TEST(FsVdf, SingleByteTamperingRejected) {
    const auto pp = vdf::vdf_setup(16, 1024, 32, vdf::seed_from_integer(7));
    const auto proof = fs_prove_vdf(pp, "10110");
    std::mt19937_64 rng(22);
    int rejected = 0;
    for (int i = 0; i < 100; ++i) {
        Bytes t = proof.file;
        t[rng() % t.size()] ^= static_cast<std::uint8_t>(1 + rng() % 255);
        rejected += !fs_verify_vdf(t, &pp, std::string_view("10110")).accepted;
    }
    EXPECT_GE(rejected, 99);
}

TEST(FsVdf, ForgeryCarriesOverToNonInteractiveMode) {
    const auto pp = vdf::vdf_setup(32, std::uint64_t{1} << 16, 32, vdf::seed_from_integer(3));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto forged = fs_forge_vdf(pp, "1011", seed);
        EXPECT_TRUE(fs_verify_vdf(forged.file, &pp, std::string_view("1011")).accepted);
        EXPECT_LE(forged.eval_steps, pp.lambda + 1);
    }
}
