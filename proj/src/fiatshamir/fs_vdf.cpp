#include "seqproof/fiatshamir.hpp"

namespace seqproof::fs {

namespace {

Bytes u64_payload(std::uint64_t v) {
    ByteWriter w;
    w.u64(v);
    return std::move(w).take();
}

std::vector<Message> statement_messages(const vdf::VdfParams& pp, std::string_view x, vdf::VdfOutput y) {
    return {{MessageKind::VdfParams, vdf::encode_params(pp)},
            {MessageKind::VdfInput, Bytes(x.begin(), x.end())},
            {MessageKind::VdfOutput, vdf::encode_output(pp, y)}};
}

FsVdfProof finish(const vdf::VdfParams& pp, std::string_view x, vdf::VdfOutput y, vdf::Challenge t,
                  vdf::VdfProof proof) {
    auto messages = statement_messages(pp, x, y);
    messages.push_back({MessageKind::VdfChallenge, u64_payload(t.t)});
    messages.push_back({MessageKind::VdfProof, vdf::encode_proof(pp, proof)});
    FsVdfProof out;
    out.y = y;
    out.t = t;
    out.proof = std::move(proof);
    out.file = transcript_file(messages);
    return out;
}

}  // namespace

vdf::Challenge fs_vdf_challenge(const OracleSpec& spec, const vdf::VdfParams& pp, std::string_view x,
                                vdf::VdfOutput y) {
    const Bytes prefix = transcript_encode(statement_messages(pp, x, y));
    return {ro_challenge(spec, prefix, pp.T - pp.lambda, pp.T - 1)};
}

FsVdfProof fs_prove_vdf(const vdf::VdfParams& pp, std::string_view x, const OracleSpec& spec) {
    const auto eval = vdf::vdf_eval(pp, x);
    const auto t = fs_vdf_challenge(spec, pp, x, eval.output);
    auto open = vdf::vdf_open(pp, x, t);
    FsVdfProof out = finish(pp, x, eval.output, t, std::move(open.proof));
    out.eval_steps = eval.steps;
    out.open_steps = open.steps;
    return out;
}

FsVdfProof fs_forge_vdf(const vdf::VdfParams& pp, std::string_view x, std::uint64_t seed, const OracleSpec& spec) {
    const auto adversary = vdf::vdf_attack(pp, x, seed);
    const auto t = fs_vdf_challenge(spec, pp, x, adversary.forged_output());
    FsVdfProof out = finish(pp, x, adversary.forged_output(), t, adversary.respond(t));
    out.eval_steps = adversary.steps();
    return out;
}

FsVdfVerdict fs_verify_vdf(std::span<const std::uint8_t> file, const vdf::VdfParams* expected_pp,
                           std::optional<std::string_view> expected_x, const OracleSpec& spec) {
    FsVdfVerdict v;
    try {
        const auto messages = read_transcript_file(file);
        const MessageKind layout[] = {MessageKind::VdfParams, MessageKind::VdfInput, MessageKind::VdfOutput,
                                      MessageKind::VdfChallenge, MessageKind::VdfProof};
        if (messages.size() != std::size(layout)) throw DecodeError("VDF transcript must have 5 messages");
        for (std::size_t i = 0; i < messages.size(); ++i) {
            if (messages[i].tag != static_cast<std::uint8_t>(layout[i])) throw DecodeError("unexpected message order");
        }
        v.pp = vdf::decode_params(messages[0].payload);
        v.x.assign(messages[1].payload.begin(), messages[1].payload.end());
        if (v.x.size() > v.pp->S - 1 || v.x.find_first_not_of("01") != std::string::npos) {
            throw DecodeError("input is not a binary string fitting the tape");
        }
        v.y = vdf::decode_output(*v.pp, messages[2].payload);
        ByteReader tr(messages[3].payload);
        v.t = {tr.u64()};
        tr.expect_done();
        const auto proof = vdf::decode_proof(*v.pp, messages[4].payload);

        if (expected_pp && !(*expected_pp == *v.pp)) {
            v.reason = "parameters differ from the expected ones";
            return v;
        }
        if (expected_x && *expected_x != v.x) {
            v.reason = "input differs from the expected one";
            return v;
        }
        if (fs_vdf_challenge(spec, *v.pp, v.x, v.y) != v.t) {
            v.reason = "challenge mismatch";
            return v;
        }
        const auto result = vdf::vdf_verify_counted(*v.pp, v.x, v.y, v.t, proof);
        v.accepted = result.accepted;
        v.reason = result.accepted ? "accepted" : result.reason;
    } catch (const DecodeError& e) {
        v.accepted = false;
        v.reason = std::string("malformed transcript: ") + e.what();
    }
    return v;
}

}  // namespace seqproof::fs
