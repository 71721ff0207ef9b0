#include <algorithm>

#include "seqproof/fiatshamir.hpp"

namespace seqproof::fs {

bool is_registered(std::uint8_t tag) {
    switch (static_cast<MessageKind>(tag)) {
        case MessageKind::Formula:
        case MessageKind::Prime:
        case MessageKind::Claim:
        case MessageKind::RoundPoly:
        case MessageKind::Challenge:
        case MessageKind::VdfParams:
        case MessageKind::VdfInput:
        case MessageKind::VdfOutput:
        case MessageKind::VdfChallenge:
        case MessageKind::VdfProof: return true;
    }
    return false;
}

Bytes transcript_encode(std::span<const Message> messages) {
    ByteWriter w;
    for (const auto& m : messages) {
        if (!is_registered(m.tag)) throw TranscriptError("unregistered message tag " + std::to_string(m.tag));
        w.u8(m.tag);
        w.prefixed(m.payload);
    }
    return std::move(w).take();
}

std::vector<Message> transcript_decode(std::span<const std::uint8_t> bytes) {
    ByteReader r(bytes);
    std::vector<Message> out;
    while (!r.done()) {
        const std::uint8_t tag = r.u8();
        if (!is_registered(tag)) throw DecodeError("unregistered message tag " + std::to_string(tag));
        const auto payload = r.prefixed();
        out.emplace_back(tag, Bytes(payload.begin(), payload.end()));
    }
    return out;
}

Bytes transcript_file(std::span<const Message> messages) {
    ByteWriter w;
    w.raw(kFileMagic);
    w.raw(transcript_encode(messages));
    return std::move(w).take();
}

std::vector<Message> read_transcript_file(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kFileMagic.size() ||
        !std::equal(kFileMagic.begin(), kFileMagic.end(), bytes.begin())) {
        throw DecodeError("missing SEQPROOF header");
    }
    return transcript_decode(bytes.subspan(kFileMagic.size()));
}

}  // namespace seqproof::fs
