#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seqproof {

using Bytes = std::vector<std::uint8_t>;

/// Raised when a byte string does not decode under the expected layout.
class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Append-only big-endian writer.
class ByteWriter {
public:
    void u8(std::uint8_t v) { out_.push_back(v); }
    void u32(std::uint32_t v);
    void u64(std::uint64_t v);
    /// Writes the low `width` bytes of v, most significant first.
    void uint_be(std::uint64_t v, std::size_t width);
    void raw(std::span<const std::uint8_t> data);
    void raw(std::string_view text);
    /// 4-byte big-endian length followed by the data.
    void prefixed(std::span<const std::uint8_t> data);

    const Bytes& bytes() const& { return out_; }
    Bytes take() && { return std::move(out_); }

private:
    Bytes out_;
};

/// Bounds-checked big-endian reader; every overrun throws DecodeError.
class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t u8();
    std::uint32_t u32();
    std::uint64_t u64();
    std::uint64_t uint_be(std::size_t width);
    std::span<const std::uint8_t> raw(std::size_t n);
    std::span<const std::uint8_t> prefixed();

    std::size_t remaining() const { return data_.size() - pos_; }
    bool done() const { return pos_ == data_.size(); }
    void expect_done() const;

private:
    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

std::string to_hex(std::span<const std::uint8_t> data);
Bytes from_hex(std::string_view hex);

Bytes read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> data);

}  // namespace seqproof
