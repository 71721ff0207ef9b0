#include "seqproof/sumcheck.hpp"

namespace seqproof::sumcheck {

namespace {

void check_prover_guards(const Qbf& formula, Prime p) {
    if (formula.num_vars() > kProverVarLimit) {
        throw SumcheckError("prover limited to " + std::to_string(kProverVarLimit) + " variables");
    }
    if (p.value() < minimum_prime_bound(formula.num_vars(), formula.num_clauses())) {
        throw SumcheckError("prime " + std::to_string(p.value()) + " is below 2^n 3^m");
    }
}

}  // namespace

HonestProver::HonestProver(const Qbf& formula, Prime p, ProverOptions options)
    : f_(formula, p), chain_(build_operator_chain(formula)), bindings_(formula.num_vars()), options_(options) {
    check_prover_guards(formula, p);
}

FieldElement HonestProver::announce() {
    return eval_chain(chain_.ops(), bindings_, f_, {.workers = options_.workers});
}

FieldElement HonestProver::current_value() const {
    return eval_chain(chain_.suffix(position_), bindings_, f_, {.workers = options_.workers});
}

UniPoly HonestProver::round_polynomial() {
    if (position_ >= chain_.size()) throw std::logic_error("no rounds left");
    const Operator& op = chain_[position_];
    const std::size_t d = round_degree_bound(chain_, position_, f_.formula().num_clauses());
    const auto rest = chain_.suffix(position_ + 1);

    Bindings trial = bindings_;
    std::vector<EvalPoint> points;
    points.reserve(d + 1);
    for (std::uint64_t x = 0; x <= d; ++x) {
        const FieldElement fx(x, f_.modulus());
        trial.bind(op.variable, fx);
        points.emplace_back(fx, eval_chain(rest, trial, f_, {.workers = options_.workers}));
    }
    return lagrange_interpolate(points);
}

void HonestProver::receive_challenge(const FieldElement& r) {
    if (position_ >= chain_.size()) throw std::logic_error("no rounds left");
    bindings_.bind(chain_[position_].variable, r);
    ++position_;
}

namespace {

Transcript drive_without_verifier(Prover& prover, const Qbf& formula, Prime p, ChallengeSource& challenges) {
    const OperatorChain chain = build_operator_chain(formula);
    Bindings bindings(formula.num_vars());
    Transcript t{formula, p, prover.announce(), {}, {}};
    t.rounds.reserve(chain.size());
    for (std::size_t k = 0; k < chain.size(); ++k) {
        UniPoly s = prover.round_polynomial();
        const FieldElement r = challenges.challenge(k, s);
        prover.receive_challenge(r);
        bindings.bind(chain[k].variable, r);
        t.rounds.push_back({k, std::move(s), r});
    }
    t.final_point = bindings.point();
    return t;
}

}  // namespace

Transcript sumcheck_prove(const Qbf& formula, Prime p, ChallengeSource& challenges, ProverOptions options) {
    HonestProver prover(formula, p, options);
    return drive_without_verifier(prover, formula, p, challenges);
}

Transcript cheat_prover(const CheatConfig& config, const Qbf& formula, Prime p, ChallengeSource& challenges) {
    auto prover = make_cheat_prover(config, formula, p);
    return drive_without_verifier(*prover, formula, p, challenges);
}

SessionResult run_session(Prover& prover, Verifier& verifier) {
    SessionResult result{Verdict::accept(),
                         Transcript{verifier.formula(), verifier.prime(), prover.announce(), {}, {}}};
    Transcript& t = result.transcript;

    if (auto rejected = verifier.receive_claim(t.claimed_value)) {
        result.verdict = std::move(*rejected);
        return result;
    }
    while (!verifier.rounds_done()) {
        const std::size_t k = verifier.position();
        UniPoly s = prover.round_polynomial();
        auto reply = verifier.receive_round(s);
        if (auto* v = std::get_if<Verdict>(&reply)) {
            t.rounds.push_back({k, std::move(s), std::nullopt});
            result.verdict = std::move(*v);
            return result;
        }
        const FieldElement r = std::get<FieldElement>(reply);
        prover.receive_challenge(r);
        t.rounds.push_back({k, std::move(s), r});
    }
    t.final_point = verifier.bindings().point();
    result.verdict = verifier.finish();
    return result;
}

Verdict sumcheck_verify(const Qbf& formula, Prime p, Prover& peer, ChallengeSource& coins) {
    Verifier verifier(formula, p, coins);
    return run_session(peer, verifier).verdict;
}

Verdict verify_transcript(const Qbf& formula, const Transcript& transcript, ChallengeSource& coins) {
    if (!(transcript.formula == formula)) return Verdict::reject(RejectReason::Malformed, "transcript is for another formula");
    if (transcript.claimed_value.modulus() != transcript.prime) {
        return Verdict::reject(RejectReason::Malformed, "claim is over another field");
    }
    if (transcript.prime.value() < minimum_prime_bound(formula.num_vars(), formula.num_clauses())) {
        return Verdict::reject(RejectReason::Malformed, "prime is below 2^n 3^m");
    }

    Verifier verifier(formula, transcript.prime, coins);
    if (transcript.rounds.size() != verifier.num_rounds()) {
        return Verdict::reject(RejectReason::Malformed, "transcript has " + std::to_string(transcript.rounds.size()) +
                                                            " rounds, expected " +
                                                            std::to_string(verifier.num_rounds()));
    }
    if (auto rejected = verifier.receive_claim(transcript.claimed_value)) return *rejected;

    for (const auto& round : transcript.rounds) {
        const std::size_t k = verifier.position();
        if (round.position != k) return Verdict::reject(RejectReason::Malformed, "round out of order", k);
        if (!round.challenge) return Verdict::reject(RejectReason::Malformed, "round has no challenge", k);
        auto reply = verifier.receive_round(round.s);
        if (auto* v = std::get_if<Verdict>(&reply)) return *v;
        if (std::get<FieldElement>(reply) != *round.challenge) {
            return Verdict::reject(RejectReason::ChallengeMismatch, "recorded challenge differs from derived one", k);
        }
    }
    const auto point = verifier.bindings().point();
    if (transcript.final_point != point) {
        return Verdict::reject(RejectReason::Malformed, "final point does not match the challenges");
    }
    return verifier.finish();
}

}  // namespace seqproof::sumcheck
