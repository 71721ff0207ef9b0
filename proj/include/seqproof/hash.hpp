#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>

namespace seqproof {

using Digest256 = std::array<std::uint8_t, 32>;

/// Incremental 256-bit hash backed by an OpenSSL EVP digest.
/// The algorithm name is anything EVP knows with a 32-byte output
/// ("SHA256", "SHA3-256", "BLAKE2s256", ...).
class Hasher {
public:
    explicit Hasher(const std::string& algorithm = "SHA256");
    Hasher(const Hasher& other);
    Hasher& operator=(const Hasher& other);
    Hasher(Hasher&&) noexcept;
    Hasher& operator=(Hasher&&) noexcept;
    ~Hasher();

    Hasher& update(std::span<const std::uint8_t> data);
    /// Finalizes a copy, so the hasher can keep absorbing afterwards.
    Digest256 digest() const;

private:
    struct State;
    std::unique_ptr<State> state_;
};

Digest256 sha256(std::span<const std::uint8_t> data);

}  // namespace seqproof
