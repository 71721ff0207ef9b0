#include "seqproof/fiatshamir.hpp"

namespace seqproof::fs {

using sumcheck::Transcript;
using sumcheck::Verdict;
using sumcheck::RejectReason;

namespace {

Bytes u64_payload(std::uint64_t v) {
    ByteWriter w;
    w.u64(v);
    return std::move(w).take();
}

Message formula_message(const Qbf& formula) {
    const std::string text = serialize_qbf(formula);
    return {MessageKind::Formula, Bytes(text.begin(), text.end())};
}

Message round_message(std::size_t position, const UniPoly& s) {
    ByteWriter w;
    w.u32(static_cast<std::uint32_t>(position));
    for (const auto& c : s.coefficients()) w.u64(c.residue());
    return {MessageKind::RoundPoly, std::move(w).take()};
}

std::uint64_t read_u64_payload(const Message& m) {
    ByteReader r(m.payload);
    const std::uint64_t v = r.u64();
    r.expect_done();
    return v;
}

FieldElement read_residue(std::uint64_t v, Prime p) {
    if (v >= p.value()) throw DecodeError("field element not reduced mod p");
    return FieldElement(v, p);
}

void expect_kind(const Message& m, MessageKind kind, const char* what) {
    if (m.tag != static_cast<std::uint8_t>(kind)) throw DecodeError(std::string("expected ") + what + " message");
}

}  // namespace

FsChallenges::FsChallenges(OracleSpec spec, const Qbf& formula, Prime p, const FieldElement& claim)
    : spec_(std::move(spec)), p_(p), hasher_(spec_.algorithm) {
    hasher_.update(spec_.domain_separator);
    absorb(formula_message(formula));
    absorb({MessageKind::Prime, u64_payload(p.value())});
    absorb({MessageKind::Claim, u64_payload(claim.residue())});
}

void FsChallenges::absorb(Message m) {
    const Message one[] = {m};
    hasher_.update(transcript_encode(one));
    messages_.push_back(std::move(m));
}

FieldElement FsChallenges::challenge(std::size_t position, const UniPoly& s) {
    absorb(round_message(position, s));
    const Digest256 d = hasher_.digest();
    unsigned __int128 acc = 0;
    for (auto byte : d) acc = ((acc << 8) | byte) % p_.value();
    const FieldElement r(static_cast<std::uint64_t>(acc), p_);
    absorb({MessageKind::Challenge, u64_payload(r.residue())});
    return r;
}

std::vector<Message> sumcheck_messages(const Transcript& t) {
    std::vector<Message> out;
    out.push_back(formula_message(t.formula));
    out.push_back({MessageKind::Prime, u64_payload(t.prime.value())});
    out.push_back({MessageKind::Claim, u64_payload(t.claimed_value.residue())});
    for (const auto& round : t.rounds) {
        out.push_back(round_message(round.position, round.s));
        if (round.challenge) out.push_back({MessageKind::Challenge, u64_payload(round.challenge->residue())});
    }
    return out;
}

Transcript sumcheck_from_messages(std::span<const Message> messages) {
    if (messages.size() < 3) throw DecodeError("sumcheck transcript needs formula, prime and claim");
    expect_kind(messages[0], MessageKind::Formula, "formula");
    expect_kind(messages[1], MessageKind::Prime, "prime");
    expect_kind(messages[2], MessageKind::Claim, "claim");

    const std::string text(messages[0].payload.begin(), messages[0].payload.end());
    std::optional<Qbf> formula;
    try {
        formula = parse_qbf(text);
    } catch (const QbfError& e) {
        throw DecodeError(std::string("embedded formula: ") + e.what());
    }
    if (serialize_qbf(*formula) != text) throw DecodeError("embedded formula is not in canonical form");

    std::optional<Prime> p;
    try {
        p = Prime(read_u64_payload(messages[1]));
    } catch (const FieldError& e) {
        throw DecodeError(e.what());
    }
    Transcript t{*formula, *p, read_residue(read_u64_payload(messages[2]), *p), {}, {}};

    const auto chain = sumcheck::build_operator_chain(*formula);
    sumcheck::Bindings bindings(formula->num_vars());
    const auto rest = messages.subspan(3);
    if (rest.size() != 2 * chain.size()) throw DecodeError("wrong number of round messages");
    for (std::size_t k = 0; k < chain.size(); ++k) {
        const Message& poly = rest[2 * k];
        const Message& chal = rest[2 * k + 1];
        expect_kind(poly, MessageKind::RoundPoly, "round polynomial");
        expect_kind(chal, MessageKind::Challenge, "challenge");

        ByteReader r(poly.payload);
        const std::uint32_t position = r.u32();
        if (r.remaining() % 8 != 0) throw DecodeError("ragged coefficient list");
        std::vector<FieldElement> coeffs;
        while (!r.done()) coeffs.push_back(read_residue(r.u64(), *p));
        if (!coeffs.empty() && coeffs.back().is_zero()) throw DecodeError("round polynomial not canonical");

        const FieldElement challenge = read_residue(read_u64_payload(chal), *p);
        bindings.bind(chain[k].variable, challenge);
        t.rounds.push_back({position, UniPoly(std::move(coeffs), *p), challenge});
    }
    t.final_point = bindings.point();
    return t;
}

FsTqbfProof fs_run_prover(sumcheck::Prover& prover, const Qbf& formula, Prime p, const OracleSpec& spec) {
    const FieldElement claim = prover.announce();
    FsChallenges oracle(spec, formula, p, claim);
    const auto chain = sumcheck::build_operator_chain(formula);
    sumcheck::Bindings bindings(formula.num_vars());
    Transcript t{formula, p, claim, {}, {}};
    for (std::size_t k = 0; k < chain.size(); ++k) {
        UniPoly s = prover.round_polynomial();
        const FieldElement r = oracle.challenge(k, s);
        prover.receive_challenge(r);
        bindings.bind(chain[k].variable, r);
        t.rounds.push_back({k, std::move(s), r});
    }
    t.final_point = bindings.point();
    return {std::move(t), transcript_file(oracle.messages())};
}

FsTqbfProof fs_prove_tqbf(const Qbf& formula, Prime p, const OracleSpec& spec, sumcheck::ProverOptions options) {
    sumcheck::HonestProver prover(formula, p, options);
    return fs_run_prover(prover, formula, p, spec);
}

Verdict fs_verify_tqbf(const Qbf& formula, std::span<const std::uint8_t> file, const OracleSpec& spec) {
    Transcript t{formula, Prime(2), FieldElement::zero(Prime(2)), {}, {}};
    try {
        t = sumcheck_from_messages(read_transcript_file(file));
    } catch (const DecodeError& e) {
        return Verdict::reject(RejectReason::Malformed, e.what());
    }
    if (!(t.formula == formula)) return Verdict::reject(RejectReason::Malformed, "transcript is for another formula");
    if (t.prime.value() < sumcheck::minimum_prime_bound(formula.num_vars(), formula.num_clauses())) {
        return Verdict::reject(RejectReason::Malformed, "prime is below 2^n 3^m");
    }
    FsChallenges oracle(spec, formula, t.prime, t.claimed_value);
    return sumcheck::verify_transcript(formula, t, oracle);
}

}  // namespace seqproof::fs
