#include "seqproof/sumcheck.hpp"

namespace seqproof::sumcheck {

Verifier::Verifier(const Qbf& formula, Prime p, ChallengeSource& coins)
    : f_(formula, p), chain_(build_operator_chain(formula)), coins_(coins), bindings_(formula.num_vars()) {
    if (p.value() < minimum_prime_bound(formula.num_vars(), formula.num_clauses())) {
        throw SumcheckError("prime " + std::to_string(p.value()) + " is below 2^n 3^m");
    }
}

std::optional<Verdict> Verifier::receive_claim(const FieldElement& y) {
    if (claim_ || failed_) throw std::logic_error("claim already received");
    if (y.modulus() != f_.modulus()) {
        failed_ = true;
        return Verdict::reject(RejectReason::Malformed, "claim is over another field");
    }
    if (y.is_zero()) {
        failed_ = true;
        return Verdict::reject(RejectReason::ZeroClaim, "announced value is 0; membership needs h' != 0");
    }
    claim_ = y;
    return std::nullopt;
}

std::variant<FieldElement, Verdict> Verifier::receive_round(const UniPoly& s) {
    if (!claim_ || failed_ || rounds_done()) throw std::logic_error("round received out of order");
    const std::size_t k = position_;
    const Operator& op = chain_[k];
    const std::size_t bound = round_degree_bound(chain_, k, f_.formula().num_clauses());

    auto fail = [&](RejectReason reason, std::string detail) {
        failed_ = true;
        return Verdict::reject(reason, std::move(detail), k);
    };

    if (s.modulus() != f_.modulus()) return fail(RejectReason::Malformed, "round polynomial over another field");
    if (s.degree() && *s.degree() > bound) {
        return fail(RejectReason::DegreeOverflow,
                    "degree " + s.degree_string() + " exceeds bound " + std::to_string(bound));
    }

    const Prime p = f_.modulus();
    const FieldElement s0 = s.evaluate(FieldElement::zero(p));
    const FieldElement s1 = s.evaluate(FieldElement::one(p));
    FieldElement expected = s0;
    switch (op.kind) {
        case OpKind::Sum: expected = s0 + s1; break;
        case OpKind::Prod: expected = s0 * s1; break;
        case OpKind::Lin: {
            // Q_i precedes every L_i in the chain, so x_i always carries a challenge here.
            const FieldElement r = bindings_.at(op.variable);
            expected = r * s1 + (FieldElement::one(p) - r) * s0;
            break;
        }
    }
    if (expected != *claim_) {
        return fail(RejectReason::CaseMismatch, "round check gives " + std::to_string(expected.residue()) +
                                                    ", claim is " + std::to_string(claim_->residue()));
    }

    const FieldElement r = coins_.challenge(k, s);
    if (r.modulus() != p) throw std::logic_error("challenge source produced a value over another field");
    bindings_.bind(op.variable, r);
    claim_ = s.evaluate(r);
    ++position_;
    return r;
}

Verdict Verifier::finish() const {
    if (!claim_ || failed_ || !rounds_done()) throw std::logic_error("finish called before all rounds");
    const FieldElement value = f_.evaluate(bindings_.point());
    if (value != *claim_) {
        return Verdict::reject(RejectReason::FinalMismatch, "f(r) = " + std::to_string(value.residue()) +
                                                                 ", claim is " + std::to_string(claim_->residue()));
    }
    return Verdict::accept();
}

}  // namespace seqproof::sumcheck
