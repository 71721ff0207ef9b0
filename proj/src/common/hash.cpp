#include "seqproof/hash.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace seqproof {

struct Hasher::State {
    EVP_MD* md = nullptr;
    EVP_MD_CTX* ctx = nullptr;

    ~State() {
        EVP_MD_CTX_free(ctx);
        EVP_MD_free(md);
    }
};

Hasher::Hasher(const std::string& algorithm) : state_(std::make_unique<State>()) {
    state_->md = EVP_MD_fetch(nullptr, algorithm.c_str(), nullptr);
    if (state_->md == nullptr) throw std::invalid_argument("unknown hash algorithm: " + algorithm);
    if (EVP_MD_get_size(state_->md) != 32) {
        throw std::invalid_argument("hash algorithm must produce 256-bit digests: " + algorithm);
    }
    state_->ctx = EVP_MD_CTX_new();
    if (state_->ctx == nullptr || EVP_DigestInit_ex(state_->ctx, state_->md, nullptr) != 1) {
        throw std::runtime_error("EVP_DigestInit_ex failed");
    }
}

Hasher::Hasher(const Hasher& other) : state_(std::make_unique<State>()) {
    EVP_MD_up_ref(other.state_->md);
    state_->md = other.state_->md;
    state_->ctx = EVP_MD_CTX_new();
    if (state_->ctx == nullptr || EVP_MD_CTX_copy_ex(state_->ctx, other.state_->ctx) != 1) {
        throw std::runtime_error("EVP_MD_CTX_copy_ex failed");
    }
}

Hasher& Hasher::operator=(const Hasher& other) {
    if (this != &other) *this = Hasher(other);
    return *this;
}

Hasher::Hasher(Hasher&&) noexcept = default;
Hasher& Hasher::operator=(Hasher&&) noexcept = default;
Hasher::~Hasher() = default;

Hasher& Hasher::update(std::span<const std::uint8_t> data) {
    if (EVP_DigestUpdate(state_->ctx, data.data(), data.size()) != 1) {
        throw std::runtime_error("EVP_DigestUpdate failed");
    }
    return *this;
}

Digest256 Hasher::digest() const {
    Digest256 out{};
    EVP_MD_CTX* copy = EVP_MD_CTX_new();
    unsigned int len = 0;
    const bool ok = copy != nullptr && EVP_MD_CTX_copy_ex(copy, state_->ctx) == 1 &&
                    EVP_DigestFinal_ex(copy, out.data(), &len) == 1 && len == out.size();
    EVP_MD_CTX_free(copy);
    if (!ok) throw std::runtime_error("EVP_DigestFinal_ex failed");
    return out;
}

Digest256 sha256(std::span<const std::uint8_t> data) {
    return Hasher("SHA256").update(data).digest();
}

}  // namespace seqproof
