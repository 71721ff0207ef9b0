#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqproof/cube_sum.hpp"
#include "seqproof/qbf.hpp"
#include "seqproof/shvdf.hpp"
#include "seqproof/sumcheck.hpp"

namespace seqproof::harness {

using Json = nlohmann::ordered_json;

class HarnessError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ExperimentReport {
    std::string name;
    Json parameters = Json::object();
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double rate = 0.0;
    std::optional<double> bound;
    std::optional<double> tolerance;
    Json step_counts = Json::object();
    Json wall_times = Json::object();
    Json extra = Json::object();
    unsigned workers = 1;
    bool passed = false;
    std::vector<std::string> failures;

    void set_rate() { rate = trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials); }
    void check(bool condition, const std::string& what);

    Json to_json() const;
    std::string to_text() const;
};

/// Per-trial seed: first 8 bytes of SHA-256(seed || index), both 8-byte big-endian.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

/// n variables, m clauses of three literals over random variables and signs,
/// random quantifiers.
Qbf random_qbf(std::size_t n, std::size_t m, std::mt19937_64& rng);
/// Rejection-samples random_qbf until its truth value is `truth`. Throws after 10^4 misses.
Qbf random_qbf_with_truth(std::size_t n, std::size_t m, bool truth, std::mt19937_64& rng);

/// 3 sqrt(q (1 - q) / trials).
double binomial_3sigma(double q, std::uint64_t trials);

struct SoundnessConfig {
    std::size_t n = 1;
    std::size_t m = 1;
    std::uint64_t p = 223;
    /// Empty runs the honest control on true formulas.
    std::optional<sumcheck::CheatStrategy> strategy;
    /// Round for random-round (1-based); 0 picks one uniformly per trial.
    std::size_t round = 0;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

/// Each trial draws a fresh formula, prover seed and verifier coins from
/// trial_seed(seed, i). Cheating runs pass when rate <= bound + 3 sigma with
/// bound (3mn + n^2) / p; the honest control passes at rate 1.
ExperimentReport exp_soundness(const SoundnessConfig& config);

struct ParallelConfig {
    std::size_t n = 16;
    std::size_t m = 0;  // 0 selects 2n
    std::optional<std::uint64_t> p;  // default next_prime_at_least(2^(n+1))
    std::vector<unsigned> workers = {1, 2, 4, 8};
    std::uint64_t seed = 1;
};

/// Sum of f over {0,1}^n with every worker count and every available kernel,
/// cross-checked against the field route. Passes iff all results agree.
ExperimentReport exp_parallel_sum(const ParallelConfig& config);

struct GrowthConfig {
    unsigned lambda = 16;
    std::size_t space = 32;
    std::vector<unsigned> log2_T = {10, 11, 12, 13, 14};
    std::string input = "10110";
    std::uint64_t seed = 1;
};

/// Eval and Open step counters per T; passes iff Eval = T and Eval + Open <= 2T + lambda + 1.
ExperimentReport exp_vdf_growth(const GrowthConfig& config);

struct AttackConfig {
    unsigned lambda = 32;
    unsigned log2_T = 16;
    std::size_t space = 32;
    std::uint64_t trials = 100;
    std::uint64_t seed = 1;
    bool compare_honest = true;
};

/// Forge, challenge, verify per trial; passes iff every forgery is accepted,
/// the adversary never exceeds lambda + 1 steps and (when compared) forged
/// outputs differ from the honest one in at least 99% of trials.
ExperimentReport exp_attack(const AttackConfig& config);

/// Smallest n with n(n+3)/2 >= T. Throws HarnessError if T == 0.
std::size_t min_formula_vars(std::uint64_t T);

}  // namespace seqproof::harness
