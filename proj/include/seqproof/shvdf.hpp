#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seqproof/bytes.hpp"
#include "seqproof/turing.hpp"

namespace seqproof::vdf {

class VdfError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint32_t kParamsVersion = 1;

/// Public parameters. The machine is implicit: a seeded rule over
/// {0,1}^state_bits with halting set {1, ..., lambda - 1} (state 0, the
/// initial state, is never halting).
struct VdfParams {
    unsigned lambda = 0;
    std::uint64_t T = 0;
    std::size_t S = 0;
    unsigned state_bits = 0;
    Bytes seed;
    std::uint32_t version = kParamsVersion;

    std::uint64_t halt_bound() const { return lambda; }
    friend bool operator==(const VdfParams&, const VdfParams&) = default;
};

struct SetupOptions {
    /// 0 selects min(2 lambda, 64).
    unsigned state_bits = 0;
    /// Delay guard: log2 T must not exceed this multiple of lambda.
    double max_log2t_per_lambda = 1.5;
};

/// 8-byte big-endian encoding of an integer seed.
Bytes seed_from_integer(std::uint64_t seed);

/// Throws VdfError unless 8 <= lambda <= state_bits <= 64, T > lambda,
/// log2 T <= ratio * lambda and 2 <= S <= 2^20.
VdfParams vdf_setup(unsigned lambda, std::uint64_t T, std::size_t S, Bytes seed, SetupOptions options = {});

/// Structural checks for deserialized parameters (everything but the log2 T ratio).
void validate_params(const VdfParams& pp);

tm::TmDescription vdf_machine(const VdfParams& pp);

struct VdfOutput {
    std::uint64_t y = 0;
    friend bool operator==(const VdfOutput&, const VdfOutput&) = default;
};

struct Challenge {
    std::uint64_t t = 0;
    friend bool operator==(const Challenge&, const Challenge&) = default;
};

/// (q_t, z): the state at time t and the symbols scanned at times t..T.
struct VdfProof {
    std::uint64_t qt = 0;
    std::vector<tm::Symbol> z;
    friend bool operator==(const VdfProof&, const VdfProof&) = default;
};

bool is_valid_challenge(const VdfParams& pp, Challenge t);
/// t uniform on [T - lambda, T - 1].
Challenge sample_challenge(const VdfParams& pp, std::mt19937_64& rng);

struct EvalResult {
    VdfOutput output;
    std::uint64_t steps = 0;
};

/// T sequential steps from (0, ⊢x, 0). Throws VdfError if |x| > S - 1.
EvalResult vdf_eval(const VdfParams& pp, std::string_view x);

struct OpenResult {
    VdfProof proof;
    std::uint64_t steps = 0;
};

/// Re-runs t steps to reach q_t, then T - t more recording the scanned symbols.
OpenResult vdf_open(const VdfParams& pp, std::string_view x, Challenge t);

struct VerifyResult {
    bool accepted = false;
    std::uint64_t steps = 0;
    std::string reason;
};

/// Replays the trace: state := q_t, then state := delta(state, z[j]).next for
/// j < T - t, and accepts iff the result is y. Nothing ties q_t or z to x.
VerifyResult vdf_verify_counted(const VdfParams& pp, std::string_view x, VdfOutput y, Challenge t,
                                const VdfProof& proof);
bool vdf_verify(const VdfParams& pp, std::string_view x, VdfOutput y, Challenge t, const VdfProof& proof);

/// Forger that never runs Eval: starts from a random non-halting state on ⊢x,
/// simulates lambda steps, announces the last state, and answers any
/// challenge with the matching tail of its own trace.
class Adversary {
public:
    Adversary(const VdfParams& pp, std::string_view x, std::uint64_t seed);

    VdfOutput forged_output() const { return {states_.back()}; }
    /// Throws VdfError on an invalid challenge.
    VdfProof respond(Challenge t) const;
    std::uint64_t steps() const { return steps_; }
    std::uint64_t start_state() const { return states_.front(); }

private:
    VdfParams pp_;
    std::vector<std::uint64_t> states_;   // lambda + 1 entries
    std::vector<tm::Symbol> scanned_;     // lambda + 1 entries
    std::uint64_t steps_ = 0;
};

Adversary vdf_attack(const VdfParams& pp, std::string_view x, std::uint64_t seed);

// Wire formats (big-endian).

/// Each field as a 4-byte length and its bytes: lambda, T, S, stateBits (8-byte
/// integers), seed (raw), version (8-byte integer).
Bytes encode_params(const VdfParams& pp);
VdfParams decode_params(std::span<const std::uint8_t> bytes);

/// ceil(b / 8) bytes.
Bytes encode_output(const VdfParams& pp, VdfOutput y);
VdfOutput decode_output(const VdfParams& pp, std::span<const std::uint8_t> bytes);

/// q_t as ceil(b / 8) bytes, 4-byte symbol count, then z packed 2 bits per
/// symbol (0, 1, ⊢ = 00, 01, 10) most significant first, zero padded.
Bytes encode_proof(const VdfParams& pp, const VdfProof& proof);
VdfProof decode_proof(const VdfParams& pp, std::span<const std::uint8_t> bytes);

}  // namespace seqproof::vdf
