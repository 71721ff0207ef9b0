#include "seqproof/fiatshamir.hpp"

namespace seqproof::fs {

namespace {

Bytes ascii(std::string_view s) { return Bytes(s.begin(), s.end()); }

std::uint64_t reduce(const Digest256& d, std::uint64_t modulus) {
    unsigned __int128 r = 0;
    for (auto byte : d) r = ((r << 8) | byte) % modulus;
    return static_cast<std::uint64_t>(r);
}

}  // namespace

OracleSpec OracleSpec::tqbf() { return {"SHA256", ascii("TQBF-SC-v1")}; }

OracleSpec OracleSpec::shvdf() { return {"SHA256", ascii("SHVDF-v1")}; }

Digest256 ro_digest(const OracleSpec& spec, std::span<const std::uint8_t> transcript) {
    Hasher h(spec.algorithm);
    h.update(spec.domain_separator);
    h.update(transcript);
    return h.digest();
}

FieldElement ro_challenge(const OracleSpec& spec, std::span<const std::uint8_t> transcript, Prime p) {
    return FieldElement(reduce(ro_digest(spec, transcript), p.value()), p);
}

std::uint64_t ro_challenge(const OracleSpec& spec, std::span<const std::uint8_t> transcript, std::uint64_t lo,
                           std::uint64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty challenge range");
    const Digest256 d = ro_digest(spec, transcript);
    const std::uint64_t size = hi - lo + 1;
    if (size == 0) {  // the full 64-bit range
        std::uint64_t v = 0;
        for (std::size_t i = 24; i < 32; ++i) v = (v << 8) | d[i];
        return v;
    }
    return lo + reduce(d, size);
}

}  // namespace seqproof::fs
