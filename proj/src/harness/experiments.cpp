#include <chrono>
#include <cmath>
#include <future>
#include <map>

#include "seqproof/harness.hpp"

namespace seqproof::harness {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct TrialTally {
    std::uint64_t successes = 0;
    std::map<std::string, std::uint64_t> reasons;
};

// Runs trials [0, trials) split into contiguous ranges, one per worker.
template <typename Trial>
TrialTally run_trials(std::uint64_t trials, unsigned workers, Trial trial) {
    workers = std::max(1u, workers);
    auto range = [&](std::uint64_t begin, std::uint64_t end) {
        TrialTally tally;
        for (std::uint64_t i = begin; i < end; ++i) trial(i, tally);
        return tally;
    };
    std::vector<std::future<TrialTally>> parts;
    for (unsigned w = 1; w < workers; ++w) {
        parts.push_back(std::async(std::launch::async, range, trials * w / workers, trials * (w + 1) / workers));
    }
    TrialTally total = range(0, trials / workers);
    for (auto& part : parts) {
        const TrialTally t = part.get();
        total.successes += t.successes;
        for (const auto& [k, v] : t.reasons) total.reasons[k] += v;
    }
    return total;
}

}  // namespace

ExperimentReport exp_soundness(const SoundnessConfig& config) {
    if (config.trials < 1000) throw HarnessError("soundness experiments need at least 1000 trials");
    if (config.n == 0 || config.n > sumcheck::kProverVarLimit) throw HarnessError("n out of range");
    const Prime p(config.p);
    if (p.value() < sumcheck::minimum_prime_bound(config.n, config.m)) throw HarnessError("p is below 2^n 3^m");
    const std::size_t rounds = sumcheck::chain_length(config.n);
    if (config.round > rounds) throw HarnessError("round exceeds the chain length");

    ExperimentReport report;
    report.name = "soundness";
    report.seed = config.seed;
    report.trials = config.trials;
    report.workers = config.workers;
    report.parameters = {{"n", config.n},
                         {"m", config.m},
                         {"p", config.p},
                         {"strategy", config.strategy ? sumcheck::to_string(*config.strategy) : "honest"},
                         {"round", config.round}};

    const auto start = Clock::now();
    const TrialTally tally = run_trials(config.trials, config.workers, [&](std::uint64_t i, TrialTally& t) {
        std::mt19937_64 rng(trial_seed(config.seed, i));
        const sumcheck::Verdict verdict = [&] {
            if (!config.strategy) {
                const Qbf formula = random_qbf_with_truth(config.n, config.m, true, rng);
                sumcheck::RandomChallenges coins(p, rng());
                sumcheck::HonestProver prover(formula, p);
                sumcheck::Verifier verifier(formula, p, coins);
                return sumcheck::run_session(prover, verifier).verdict;
            } else {
                const Qbf formula = random_qbf(config.n, config.m, rng);
                sumcheck::CheatConfig cheat{*config.strategy, config.round, rng()};
                if (cheat.round == 0) cheat.round = std::uniform_int_distribution<std::size_t>(1, rounds)(rng);
                sumcheck::RandomChallenges coins(p, rng());
                auto prover = sumcheck::make_cheat_prover(cheat, formula, p);
                sumcheck::Verifier verifier(formula, p, coins);
                return sumcheck::run_session(*prover, verifier).verdict;
            }
        }();
        if (verdict.accepted()) ++t.successes;
        ++t.reasons[sumcheck::to_string(verdict.reason)];
    });
    report.wall_times["total"] = seconds_since(start);
    report.successes = tally.successes;
    report.set_rate();
    for (const auto& [k, v] : tally.reasons) report.extra["verdicts"][k] = v;

    if (config.strategy) {
        const double bound = static_cast<double>(3 * config.m * config.n + config.n * config.n) /
                             static_cast<double>(config.p);
        report.bound = bound;
        report.tolerance = binomial_3sigma(bound, config.trials);
        report.check(report.rate <= bound + *report.tolerance, "accept rate exceeds bound + 3 sigma");
    } else {
        report.check(report.successes == report.trials, "honest prover was rejected");
    }
    report.passed = report.failures.empty();
    return report;
}

ExperimentReport exp_parallel_sum(const ParallelConfig& config) {
    if (config.n == 0 || config.n > 20) throw HarnessError("parallel sum needs 1 <= n <= 20");
    if (config.workers.empty()) throw HarnessError("no worker counts given");
    for (unsigned w : config.workers) {
        if (w == 0) throw HarnessError("worker counts must be positive");
    }
    const std::size_t m = config.m == 0 ? 2 * config.n : config.m;
    const Prime p = config.p ? Prime(*config.p) : next_prime_at_least(std::uint64_t{1} << (config.n + 1));

    std::mt19937_64 rng(config.seed);
    const Qbf formula = random_qbf(config.n, m, rng);

    ExperimentReport report;
    report.name = "parallel-sum";
    report.seed = config.seed;
    report.workers = *std::max_element(config.workers.begin(), config.workers.end());
    report.parameters = {{"n", config.n}, {"m", m}, {"p", p.value()}, {"workers", config.workers}};

    auto start = Clock::now();
    const FieldElement reference = simd::cube_sum_field(formula, p);
    report.wall_times["field"] = seconds_since(start);
    report.extra["sum"] = reference.residue();

    const simd::KernelKind selected = simd::select_kernel();
    report.extra["selectedKernel"] = simd::to_string(selected);
    std::map<unsigned, double> selected_times;
    for (const auto kernel : simd::available_kernels()) {
        const std::string name = simd::to_string(kernel);
        for (unsigned w : config.workers) {
            start = Clock::now();
            const FieldElement sum = simd::cube_sum(formula, p, {w, kernel});
            const double t = seconds_since(start);
            report.wall_times[name][std::to_string(w)] = t;
            if (kernel == selected) selected_times[w] = t;
            ++report.trials;
            if (sum == reference) {
                ++report.successes;
            } else {
                report.check(false, name + " with " + std::to_string(w) + " workers gave " +
                                        std::to_string(sum.residue()));
            }
        }
    }
    report.set_rate();
    const auto one = selected_times.find(1);
    const auto most = selected_times.rbegin();
    if (one != selected_times.end() && most->second > 0) {
        report.extra["speedup"] = {{"workers", most->first}, {"factor", one->second / most->second}};
    }
    report.extra["hardwareThreads"] = std::thread::hardware_concurrency();
    report.passed = report.failures.empty();
    return report;
}

ExperimentReport exp_vdf_growth(const GrowthConfig& config) {
    if (config.log2_T.empty()) throw HarnessError("no T values given");
    for (unsigned k : config.log2_T) {
        if (k > 22) throw HarnessError("T values are limited to 2^22");
    }
    ExperimentReport report;
    report.name = "vdf-growth";
    report.seed = config.seed;
    report.parameters = {{"lambda", config.lambda}, {"S", config.space}, {"log2T", config.log2_T},
                         {"input", config.input}};

    std::mt19937_64 rng(config.seed);
    std::optional<std::uint64_t> previous_eval;
    for (unsigned k : config.log2_T) {
        const std::uint64_t T = std::uint64_t{1} << k;
        const auto pp = vdf::vdf_setup(config.lambda, T, config.space, vdf::seed_from_integer(config.seed));
        const auto start = Clock::now();
        const auto eval = vdf::vdf_eval(pp, config.input);
        const auto t = vdf::sample_challenge(pp, rng);
        const auto open = vdf::vdf_open(pp, config.input, t);
        const auto verify = vdf::vdf_verify_counted(pp, config.input, eval.output, t, open.proof);
        const std::string key = std::to_string(T);
        report.wall_times[key] = seconds_since(start);
        report.step_counts[key] = {{"eval", eval.steps}, {"open", open.steps}, {"verify", verify.steps}};
        ++report.trials;

        bool ok = true;
        if (eval.steps != T) {
            report.check(false, "eval used " + std::to_string(eval.steps) + " steps for T=" + key);
            ok = false;
        }
        if (eval.steps + open.steps > 2 * T + config.lambda + 1) {
            report.check(false, "eval + open exceeds 2T + lambda + 1 for T=" + key);
            ok = false;
        }
        if (!verify.accepted || verify.steps > config.lambda) {
            report.check(false, "honest proof failed verification for T=" + key);
            ok = false;
        }
        if (previous_eval && k > 0 && eval.steps != 2 * *previous_eval && T == 2 * (*previous_eval)) {
            report.check(false, "eval counter did not double at T=" + key);
            ok = false;
        }
        previous_eval = eval.steps;
        if (ok) ++report.successes;
    }
    report.set_rate();
    report.passed = report.failures.empty();
    return report;
}

ExperimentReport exp_attack(const AttackConfig& config) {
    if (config.trials < 100) throw HarnessError("attack experiments need at least 100 trials");
    if (config.log2_T > 22) throw HarnessError("T is limited to 2^22");
    const std::uint64_t T = std::uint64_t{1} << config.log2_T;

    ExperimentReport report;
    report.name = "attack";
    report.seed = config.seed;
    report.trials = config.trials;
    report.parameters = {{"lambda", config.lambda}, {"T", T}, {"S", config.space},
                         {"compareHonest", config.compare_honest}};

    std::uint64_t mismatches = 0, max_adversary = 0, max_verify = 0;
    const auto start = Clock::now();
    for (std::uint64_t i = 0; i < config.trials; ++i) {
        std::mt19937_64 rng(trial_seed(config.seed, i));
        const auto pp = vdf::vdf_setup(config.lambda, T, config.space, vdf::seed_from_integer(rng()));
        std::string x(std::uniform_int_distribution<std::size_t>(1, config.space - 1)(rng), '0');
        for (auto& c : x) c = static_cast<char>('0' + (rng() & 1));

        const auto adversary = vdf::vdf_attack(pp, x, rng());
        const auto t = vdf::sample_challenge(pp, rng);
        const auto verify = vdf::vdf_verify_counted(pp, x, adversary.forged_output(), t, adversary.respond(t));
        if (verify.accepted) ++report.successes;
        max_adversary = std::max(max_adversary, adversary.steps());
        max_verify = std::max(max_verify, verify.steps);
        if (config.compare_honest && vdf::vdf_eval(pp, x).output != adversary.forged_output()) ++mismatches;
    }
    report.wall_times["total"] = seconds_since(start);
    report.set_rate();
    report.step_counts = {{"adversaryMax", max_adversary}, {"verifyMax", max_verify}, {"honestEval", T}};
    report.check(report.successes == report.trials, "a forgery was rejected");
    report.check(max_adversary <= config.lambda + 1, "adversary exceeded lambda + 1 steps");
    if (config.compare_honest) {
        const double mismatch_rate = static_cast<double>(mismatches) / static_cast<double>(config.trials);
        report.extra["mismatchRate"] = mismatch_rate;
        report.check(mismatch_rate >= 0.99, "forged outputs matched the honest one too often");
    }
    report.passed = report.failures.empty();
    return report;
}

}  // namespace seqproof::harness
