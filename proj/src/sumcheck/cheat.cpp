#include <algorithm>
#include <random>

#include "seqproof/sumcheck.hpp"

namespace seqproof::sumcheck {

std::string to_string(CheatStrategy strategy) {
    switch (strategy) {
        case CheatStrategy::WrongClaim: return "wrong-claim";
        case CheatStrategy::RandomRound: return "random-round";
        case CheatStrategy::ConstantPoly: return "constant-poly";
    }
    return "unknown";
}

CheatStrategy parse_cheat_strategy(const std::string& name) {
    if (name == "wrong-claim") return CheatStrategy::WrongClaim;
    if (name == "random-round") return CheatStrategy::RandomRound;
    if (name == "constant-poly") return CheatStrategy::ConstantPoly;
    throw SumcheckError("unknown cheat strategy '" + name + "'");
}

namespace {

class CheatingProver final : public Prover {
public:
    CheatingProver(const CheatConfig& config, const Qbf& formula, Prime p)
        : config_(config), honest_(formula, p), p_(p), rng_(config.seed), claim_(FieldElement::zero(p)), last_(p) {
        if (config.strategy == CheatStrategy::RandomRound &&
            (config.round < 1 || config.round > honest_.chain().size())) {
            throw SumcheckError("random-round index must be in [1, " + std::to_string(honest_.chain().size()) + "]");
        }
    }

    FieldElement announce() override {
        const FieldElement h = honest_.announce();
        const FieldElement one = FieldElement::one(p_);
        switch (config_.strategy) {
            case CheatStrategy::WrongClaim:
            case CheatStrategy::ConstantPoly: claim_ = h + one; break;
            case CheatStrategy::RandomRound: claim_ = h.is_zero() ? one : h; break;
        }
        return claim_;
    }

    UniPoly round_polynomial() override {
        const std::size_t k = honest_.position();
        const std::size_t d = round_degree_bound(honest_.chain(), k, honest_.arith().formula().num_clauses());
        if (config_.strategy == CheatStrategy::ConstantPoly) {
            last_ = constant_answer(honest_.chain()[k]);
        } else if (config_.strategy == CheatStrategy::RandomRound && k + 1 == config_.round) {
            last_ = random_consistent(honest_.chain()[k], d);
        } else {
            last_ = patched_answer(honest_.chain()[k], d);
        }
        return last_;
    }

    void receive_challenge(const FieldElement& r) override {
        claim_ = last_.evaluate(r);
        honest_.receive_challenge(r);
    }

private:
    FieldElement random_element() { return FieldElement(std::uniform_int_distribution<std::uint64_t>(0, p_.value() - 1)(rng_), p_); }

    FieldElement check_value(const Operator& op, const UniPoly& s) const {
        const FieldElement s0 = s.evaluate(FieldElement::zero(p_));
        const FieldElement s1 = s.evaluate(FieldElement::one(p_));
        switch (op.kind) {
            case OpKind::Sum: return s0 + s1;
            case OpKind::Prod: return s0 * s1;
            case OpKind::Lin: {
                const FieldElement r = honest_.bindings().at(op.variable);
                return r * s1 + (FieldElement::one(p_) - r) * s0;
            }
        }
        throw std::logic_error("unknown operator");
    }

    UniPoly constant_answer(const Operator& op) const {
        const FieldElement one = FieldElement::one(p_);
        switch (op.kind) {
            case OpKind::Sum: return UniPoly::constant(claim_ / (one + one));
            case OpKind::Lin: return UniPoly::constant(claim_);
            case OpKind::Prod: return UniPoly({one, claim_ - one}, p_);
        }
        throw std::logic_error("unknown operator");
    }

    // Uniformly random among polynomials of degree <= d that pass the round check.
    UniPoly random_consistent(const Operator& op, std::size_t d) {
        if (op.kind == OpKind::Prod) return line_through_claim();
        std::vector<FieldElement> coeffs;
        for (std::size_t i = 0; i <= d; ++i) coeffs.push_back(random_element());
        // The check is affine in the constant term with slope 2 (Sum) or 1 (Lin).
        UniPoly s(coeffs, p_);
        const FieldElement slope = op.kind == OpKind::Sum ? FieldElement(2, p_) : FieldElement::one(p_);
        coeffs[0] = coeffs[0] + (claim_ - check_value(op, s)) / slope;
        return UniPoly(std::move(coeffs), p_);
    }

    // s linear with s(0) s(1) = claim.
    UniPoly line_through_claim() {
        FieldElement v0 = FieldElement::zero(p_), v1 = FieldElement::zero(p_);
        if (claim_.is_zero()) {
            v1 = random_element();
        } else {
            do v0 = random_element(); while (v0.is_zero());
            v1 = claim_ / v0;
        }
        return UniPoly({v0, v1 - v0}, p_);
    }

    // Honest polynomial when the running claim is still true; otherwise the
    // honest polynomial plus a correction with as many roots as the degree
    // bound allows, so the lie survives unless the challenge hits a root.
    UniPoly patched_answer(const Operator& op, std::size_t d) {
        const UniPoly honest = honest_.round_polynomial();
        const FieldElement target = check_value(op, honest);
        if (target == claim_) return honest;

        if (op.kind == OpKind::Prod) return line_through_claim();

        const FieldElement delta = claim_ - target;
        for (;;) {
            std::vector<FieldElement> roots;
            while (roots.size() < d) {
                const FieldElement c = random_element();
                if (std::find(roots.begin(), roots.end(), c) == roots.end()) roots.push_back(c);
            }
            const UniPoly base = UniPoly::from_roots(roots, FieldElement::one(p_));
            const FieldElement c0 = check_value(op, base);
            if (c0.is_zero()) continue;
            return honest + base * (delta / c0);
        }
    }

    CheatConfig config_;
    HonestProver honest_;
    Prime p_;
    std::mt19937_64 rng_;
    FieldElement claim_;
    UniPoly last_;
};

}  // namespace

std::unique_ptr<Prover> make_cheat_prover(const CheatConfig& config, const Qbf& formula, Prime p) {
    return std::make_unique<CheatingProver>(config, formula, p);
}

}  // namespace seqproof::sumcheck
