#include <algorithm>
#include <cmath>

#include "seqproof/shvdf.hpp"

namespace seqproof::vdf {

namespace {
constexpr std::size_t kMaxSpace = std::size_t{1} << 20;
}

Bytes seed_from_integer(std::uint64_t seed) {
    ByteWriter w;
    w.u64(seed);
    return std::move(w).take();
}

void validate_params(const VdfParams& pp) {
    if (pp.version != kParamsVersion) throw VdfError("unsupported parameter version " + std::to_string(pp.version));
    if (pp.lambda < 8) throw VdfError("lambda must be at least 8");
    if (pp.state_bits < pp.lambda || pp.state_bits > 64) {
        throw VdfError("state bits must satisfy lambda <= b <= 64");
    }
    if (pp.T <= pp.lambda) throw VdfError("T must exceed lambda");
    if (pp.S < 2 || pp.S > kMaxSpace) throw VdfError("space must be in [2, 2^20]");
}

VdfParams vdf_setup(unsigned lambda, std::uint64_t T, std::size_t S, Bytes seed, SetupOptions options) {
    VdfParams pp;
    pp.lambda = lambda;
    pp.T = T;
    pp.S = S;
    pp.state_bits = options.state_bits != 0 ? options.state_bits : std::min(2 * lambda, 64u);
    pp.seed = std::move(seed);
    validate_params(pp);
    if (std::log2(static_cast<double>(T)) > options.max_log2t_per_lambda * lambda) {
        throw VdfError("log2 T exceeds " + std::to_string(options.max_log2t_per_lambda) + " * lambda");
    }
    return pp;
}

tm::TmDescription vdf_machine(const VdfParams& pp) {
    return tm::TmDescription{pp.state_bits, tm::SeededRule(pp.seed, pp.state_bits),
                             tm::HaltSet::below(pp.halt_bound(), /*exempt_zero=*/true), 0};
}

bool is_valid_challenge(const VdfParams& pp, Challenge t) {
    return t.t >= pp.T - pp.lambda && t.t <= pp.T - 1;
}

Challenge sample_challenge(const VdfParams& pp, std::mt19937_64& rng) {
    return {std::uniform_int_distribution<std::uint64_t>(pp.T - pp.lambda, pp.T - 1)(rng)};
}

EvalResult vdf_eval(const VdfParams& pp, std::string_view x) {
    validate_params(pp);
    const auto machine = vdf_machine(pp);
    if (x.size() > pp.S - 1) throw VdfError("input longer than S - 1");
    auto run = tm::tm_run(machine, tm::TmConfiguration::initial(0, x, pp.S), pp.T);
    return {{run.final.state}, run.steps};
}

OpenResult vdf_open(const VdfParams& pp, std::string_view x, Challenge t) {
    validate_params(pp);
    if (!is_valid_challenge(pp, t)) throw VdfError("challenge t outside [T - lambda, T - 1]");
    if (x.size() > pp.S - 1) throw VdfError("input longer than S - 1");
    const auto machine = vdf_machine(pp);
    auto head = tm::tm_run(machine, tm::TmConfiguration::initial(0, x, pp.S), t.t);
    auto tail = tm::tm_run(machine, std::move(head.final), pp.T - t.t, /*trace=*/true);
    return {{tail.trace->states.front(), std::move(tail.trace->scanned)}, head.steps + tail.steps};
}

VerifyResult vdf_verify_counted(const VdfParams& pp, std::string_view, VdfOutput y, Challenge t,
                                const VdfProof& proof) {
    VerifyResult r;
    if (!is_valid_challenge(pp, t)) {
        r.reason = "challenge outside [T - lambda, T - 1]";
        return r;
    }
    const std::uint64_t distance = pp.T - t.t;
    if (proof.z.size() != distance + 1) {
        r.reason = "|z| = " + std::to_string(proof.z.size()) + ", expected " + std::to_string(distance + 1);
        return r;
    }
    const std::uint64_t limit = pp.state_bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pp.state_bits) - 1;
    if (proof.qt > limit || y.y > limit) {
        r.reason = "state outside {0,1}^b";
        return r;
    }

    const auto machine = vdf_machine(pp);
    std::uint64_t state = proof.qt;
    for (std::uint64_t j = 0; j < distance; ++j) {
        if (!machine.halt.contains(state)) state = machine.transition(state, proof.z[j]).next_state;
        ++r.steps;
    }
    r.accepted = state == y.y;
    if (!r.accepted) r.reason = "replayed state differs from y";
    return r;
}

bool vdf_verify(const VdfParams& pp, std::string_view x, VdfOutput y, Challenge t, const VdfProof& proof) {
    return vdf_verify_counted(pp, x, y, t, proof).accepted;
}

Adversary::Adversary(const VdfParams& pp, std::string_view x, std::uint64_t seed) : pp_(pp) {
    validate_params(pp);
    const auto machine = vdf_machine(pp);
    std::mt19937_64 rng(seed);
    const std::uint64_t limit = pp.state_bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pp.state_bits) - 1;
    std::uniform_int_distribution<std::uint64_t> pick(0, limit);
    std::uint64_t start = 0;
    do start = pick(rng); while (machine.halt.contains(start));

    auto run = tm::tm_run(machine, tm::TmConfiguration::initial(start, x, pp.S), pp.lambda, /*trace=*/true);
    states_ = std::move(run.trace->states);
    scanned_ = std::move(run.trace->scanned);
    steps_ = run.steps;
}

VdfProof Adversary::respond(Challenge t) const {
    if (!is_valid_challenge(pp_, t)) throw VdfError("challenge t outside [T - lambda, T - 1]");
    const std::size_t d = pp_.T - t.t;
    const std::size_t from = pp_.lambda - d;
    return {states_[from], std::vector<tm::Symbol>(scanned_.begin() + static_cast<std::ptrdiff_t>(from), scanned_.end())};
}

Adversary vdf_attack(const VdfParams& pp, std::string_view x, std::uint64_t seed) { return Adversary(pp, x, seed); }

}  // namespace seqproof::vdf
