#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqproof/bytes.hpp"
#include "seqproof/field.hpp"
#include "seqproof/hash.hpp"
#include "seqproof/qbf.hpp"
#include "seqproof/shvdf.hpp"
#include "seqproof/sumcheck.hpp"

namespace seqproof::fs {

enum class MessageKind : std::uint8_t {
    Formula = 0x01,     // canonical QDIMACS text
    Prime = 0x02,       // 8-byte p
    Claim = 0x03,       // 8-byte y
    RoundPoly = 0x04,   // 4-byte position, then 8-byte coefficients, lowest first
    Challenge = 0x05,   // 8-byte r
    VdfParams = 0x10,   // encode_params
    VdfInput = 0x11,    // ASCII '0'/'1'
    VdfOutput = 0x12,   // encode_output
    VdfChallenge = 0x13,  // 8-byte t
    VdfProof = 0x14,    // encode_proof
};

bool is_registered(std::uint8_t tag);

struct Message {
    std::uint8_t tag = 0;
    Bytes payload;

    Message() = default;
    Message(MessageKind kind, Bytes data) : tag(static_cast<std::uint8_t>(kind)), payload(std::move(data)) {}
    Message(std::uint8_t raw_tag, Bytes data) : tag(raw_tag), payload(std::move(data)) {}

    friend bool operator==(const Message&, const Message&) = default;
};

class TranscriptError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Concatenation of tag || 4-byte big-endian length || payload.
/// Throws TranscriptError on an unregistered tag.
Bytes transcript_encode(std::span<const Message> messages);
/// Inverse of transcript_encode; throws DecodeError.
std::vector<Message> transcript_decode(std::span<const std::uint8_t> bytes);

inline constexpr std::string_view kFileMagic = "SEQPROOF";

/// "SEQPROOF" || transcript_encode(messages).
Bytes transcript_file(std::span<const Message> messages);
std::vector<Message> read_transcript_file(std::span<const std::uint8_t> bytes);

/// Random oracle: a 256-bit hash named by EVP algorithm, with a domain separator.
struct OracleSpec {
    std::string algorithm = "SHA256";
    Bytes domain_separator;

    static OracleSpec tqbf();   // "TQBF-SC-v1"
    static OracleSpec shvdf();  // "SHVDF-v1"
};

/// H(domain_separator || transcript).
Digest256 ro_digest(const OracleSpec& spec, std::span<const std::uint8_t> transcript);
/// Digest as a big-endian integer mod p.
FieldElement ro_challenge(const OracleSpec& spec, std::span<const std::uint8_t> transcript, Prime p);
/// Digest as a big-endian integer mod (hi - lo + 1), plus lo. Requires lo <= hi.
std::uint64_t ro_challenge(const OracleSpec& spec, std::span<const std::uint8_t> transcript, std::uint64_t lo,
                           std::uint64_t hi);

// ---------------------------------------------------------------------------
// Sumcheck

/// Challenge source that replaces the verifier: each challenge is the oracle
/// applied to every message so far, including the round polynomial just sent.
class FsChallenges final : public sumcheck::ChallengeSource {
public:
    FsChallenges(OracleSpec spec, const Qbf& formula, Prime p, const FieldElement& claim);

    FieldElement challenge(std::size_t position, const UniPoly& s) override;
    const std::vector<Message>& messages() const { return messages_; }

private:
    void absorb(Message m);

    OracleSpec spec_;
    Prime p_;
    Hasher hasher_;
    std::vector<Message> messages_;
};

std::vector<Message> sumcheck_messages(const sumcheck::Transcript& transcript);
/// Rebuilds a transcript (final point included) from Formula, Prime, Claim,
/// then alternating RoundPoly/Challenge messages. Throws DecodeError.
sumcheck::Transcript sumcheck_from_messages(std::span<const Message> messages);

struct FsTqbfProof {
    sumcheck::Transcript transcript;
    Bytes file;
};

FsTqbfProof fs_prove_tqbf(const Qbf& formula, Prime p, const OracleSpec& spec = OracleSpec::tqbf(),
                          sumcheck::ProverOptions options = {});
/// Drives any prover (honest or cheating) with oracle challenges.
FsTqbfProof fs_run_prover(sumcheck::Prover& prover, const Qbf& formula, Prime p,
                          const OracleSpec& spec = OracleSpec::tqbf());
sumcheck::Verdict fs_verify_tqbf(const Qbf& formula, std::span<const std::uint8_t> file,
                                 const OracleSpec& spec = OracleSpec::tqbf());

// ---------------------------------------------------------------------------
// VDF

/// t = T - lambda + (H(pp, x, y) mod lambda).
vdf::Challenge fs_vdf_challenge(const OracleSpec& spec, const vdf::VdfParams& pp, std::string_view x,
                                vdf::VdfOutput y);

struct FsVdfProof {
    vdf::VdfOutput y;
    vdf::Challenge t;
    vdf::VdfProof proof;
    Bytes file;
    std::uint64_t eval_steps = 0;
    std::uint64_t open_steps = 0;
};

FsVdfProof fs_prove_vdf(const vdf::VdfParams& pp, std::string_view x, const OracleSpec& spec = OracleSpec::shvdf());
/// Non-interactive forgery: the adversary's output, oracle challenge, and answer.
FsVdfProof fs_forge_vdf(const vdf::VdfParams& pp, std::string_view x, std::uint64_t seed,
                        const OracleSpec& spec = OracleSpec::shvdf());

struct FsVdfVerdict {
    bool accepted = false;
    std::string reason;
    std::optional<vdf::VdfParams> pp;
    std::string x;
    vdf::VdfOutput y;
    vdf::Challenge t;
};

/// Checks message layout, optional expected pp and x, recomputes t, then vdf_verify.
FsVdfVerdict fs_verify_vdf(std::span<const std::uint8_t> file, const vdf::VdfParams* expected_pp = nullptr,
                           std::optional<std::string_view> expected_x = std::nullopt,
                           const OracleSpec& spec = OracleSpec::shvdf());

}  // namespace seqproof::fs
