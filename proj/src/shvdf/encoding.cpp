#include "seqproof/shvdf.hpp"

namespace seqproof::vdf {

namespace {

std::size_t state_width(const VdfParams& pp) { return (pp.state_bits + 7) / 8; }

void put_int(ByteWriter& w, std::uint64_t v) {
    ByteWriter field;
    field.u64(v);
    w.prefixed(field.bytes());
}

std::uint64_t get_int(ByteReader& r) {
    const auto field = r.prefixed();
    if (field.size() != 8) throw DecodeError("integer field must be 8 bytes");
    ByteReader inner(field);
    return inner.u64();
}

std::uint64_t get_state(const VdfParams& pp, ByteReader& r) {
    const std::uint64_t v = r.uint_be(state_width(pp));
    if (pp.state_bits < 64 && (v >> pp.state_bits) != 0) throw DecodeError("state has bits above b");
    return v;
}

}  // namespace

Bytes encode_params(const VdfParams& pp) {
    ByteWriter w;
    put_int(w, pp.lambda);
    put_int(w, pp.T);
    put_int(w, pp.S);
    put_int(w, pp.state_bits);
    w.prefixed(pp.seed);
    put_int(w, pp.version);
    return std::move(w).take();
}

VdfParams decode_params(std::span<const std::uint8_t> bytes) {
    ByteReader r(bytes);
    VdfParams pp;
    const std::uint64_t lambda = get_int(r);
    pp.T = get_int(r);
    const std::uint64_t space = get_int(r);
    const std::uint64_t bits = get_int(r);
    const auto seed = r.prefixed();
    const std::uint64_t version = get_int(r);
    r.expect_done();
    if (lambda > 64 || bits > 64 || version > 0xffffffffu || space > (std::uint64_t{1} << 20)) {
        throw DecodeError("parameter out of range");
    }
    pp.lambda = static_cast<unsigned>(lambda);
    pp.S = static_cast<std::size_t>(space);
    pp.state_bits = static_cast<unsigned>(bits);
    pp.seed.assign(seed.begin(), seed.end());
    pp.version = static_cast<std::uint32_t>(version);
    try {
        validate_params(pp);
    } catch (const VdfError& e) {
        throw DecodeError(e.what());
    }
    return pp;
}

Bytes encode_output(const VdfParams& pp, VdfOutput y) {
    ByteWriter w;
    w.uint_be(y.y, state_width(pp));
    return std::move(w).take();
}

VdfOutput decode_output(const VdfParams& pp, std::span<const std::uint8_t> bytes) {
    ByteReader r(bytes);
    const VdfOutput y{get_state(pp, r)};
    r.expect_done();
    return y;
}

Bytes encode_proof(const VdfParams& pp, const VdfProof& proof) {
    ByteWriter w;
    w.uint_be(proof.qt, state_width(pp));
    w.u32(static_cast<std::uint32_t>(proof.z.size()));
    std::uint8_t acc = 0;
    std::size_t filled = 0;
    for (auto s : proof.z) {
        acc = static_cast<std::uint8_t>(acc | (static_cast<std::uint8_t>(s) << (6 - 2 * filled)));
        if (++filled == 4) {
            w.u8(acc);
            acc = 0;
            filled = 0;
        }
    }
    if (filled != 0) w.u8(acc);
    return std::move(w).take();
}

VdfProof decode_proof(const VdfParams& pp, std::span<const std::uint8_t> bytes) {
    ByteReader r(bytes);
    VdfProof proof;
    proof.qt = get_state(pp, r);
    const std::uint32_t count = r.u32();
    if (count > pp.lambda + 1) throw DecodeError("proof trace longer than lambda + 1");
    const auto packed = r.raw((count + 3) / 4);
    r.expect_done();
    proof.z.reserve(count);
    for (std::size_t i = 0; i < packed.size() * 4; ++i) {
        const unsigned code = (packed[i / 4] >> (6 - 2 * (i % 4))) & 3u;
        if (i >= count) {
            if (code != 0) throw DecodeError("nonzero padding bits in packed trace");
            continue;
        }
        if (code == 3) throw DecodeError("invalid symbol code in packed trace");
        proof.z.push_back(static_cast<tm::Symbol>(code));
    }
    return proof;
}

}  // namespace seqproof::vdf
