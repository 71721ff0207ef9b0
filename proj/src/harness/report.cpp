#include <cmath>
#include <sstream>

#include "seqproof/bytes.hpp"
#include "seqproof/harness.hpp"
#include "seqproof/hash.hpp"

namespace seqproof::harness {

void ExperimentReport::check(bool condition, const std::string& what) {
    if (!condition) failures.push_back(what);
}

Json ExperimentReport::to_json() const {
    Json j;
    j["name"] = name;
    j["parameters"] = parameters;
    j["seed"] = seed;
    j["trials"] = trials;
    j["successes"] = successes;
    j["rate"] = rate;
    j["bound"] = bound ? Json(*bound) : Json(nullptr);
    j["tolerance"] = tolerance ? Json(*tolerance) : Json(nullptr);
    j["stepCounts"] = step_counts;
    j["wallTimes"] = wall_times;
    j["workerCount"] = workers;
    for (const auto& [k, v] : extra.items()) j[k] = v;
    j["passed"] = passed;
    j["failures"] = failures;
    return j;
}

std::string ExperimentReport::to_text() const {
    std::ostringstream out;
    out << "experiment: " << name << '\n';
    for (const auto& [k, v] : parameters.items()) out << "param " << k << ": " << v.dump() << '\n';
    out << "seed: " << seed << '\n';
    out << "trials: " << trials << '\n';
    out << "successes: " << successes << '\n';
    out << "rate: " << rate << '\n';
    if (bound) out << "bound: " << *bound << '\n';
    if (tolerance) out << "tolerance: " << *tolerance << '\n';
    for (const auto& [k, v] : step_counts.items()) out << "steps " << k << ": " << v.dump() << '\n';
    for (const auto& [k, v] : wall_times.items()) out << "wall " << k << ": " << v.dump() << '\n';
    for (const auto& [k, v] : extra.items()) out << k << ": " << v.dump() << '\n';
    out << "workers: " << workers << '\n';
    for (const auto& f : failures) out << "failure: " << f << '\n';
    out << "result: " << (passed ? "PASS" : "FAIL") << '\n';
    return out.str();
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
    ByteWriter w;
    w.u64(seed);
    w.u64(index);
    const Digest256 d = sha256(std::move(w).take());
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < 8; ++i) v = (v << 8) | d[i];
    return v;
}

Qbf random_qbf(std::size_t n, std::size_t m, std::mt19937_64& rng) {
    if (n == 0) throw HarnessError("formulas need at least one variable");
    std::uniform_int_distribution<std::uint32_t> var(1, static_cast<std::uint32_t>(n));
    std::bernoulli_distribution coin(0.5);
    std::vector<Quantifier> quantifiers;
    for (std::size_t i = 0; i < n; ++i) quantifiers.push_back(coin(rng) ? Quantifier::Exists : Quantifier::Forall);
    std::vector<Clause> clauses;
    for (std::size_t c = 0; c < m; ++c) {
        Clause clause;
        for (auto& lit : clause) lit = Literal{var(rng), coin(rng)};
        clauses.push_back(clause);
    }
    return Qbf(std::move(quantifiers), std::move(clauses));
}

Qbf random_qbf_with_truth(std::size_t n, std::size_t m, bool truth, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Qbf f = random_qbf(n, m, rng);
        if (eval_qbf_bruteforce(f) == truth) return f;
    }
    throw HarnessError("no formula with the requested truth value found");
}

double binomial_3sigma(double q, std::uint64_t trials) {
    if (trials == 0) return 0.0;
    return 3.0 * std::sqrt(q * (1.0 - q) / static_cast<double>(trials));
}

std::size_t min_formula_vars(std::uint64_t T) {
    if (T == 0) throw HarnessError("T must be at least 1");
    std::size_t n = static_cast<std::size_t>(std::sqrt(2.0 * static_cast<double>(T)));
    while (n > 0 && sumcheck::chain_length(n - 1) >= T) --n;
    while (sumcheck::chain_length(n) < T) ++n;
    return n;
}

}  // namespace seqproof::harness
