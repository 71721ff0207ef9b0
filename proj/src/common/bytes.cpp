#include "seqproof/bytes.hpp"

#include <fstream>
#include <iterator>

namespace seqproof {

void ByteWriter::u32(std::uint32_t v) { uint_be(v, 4); }

void ByteWriter::u64(std::uint64_t v) { uint_be(v, 8); }

void ByteWriter::uint_be(std::uint64_t v, std::size_t width) {
    for (std::size_t i = width; i-- > 0;) {
        out_.push_back(i >= 8 ? 0 : static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

void ByteWriter::raw(std::span<const std::uint8_t> data) {
    out_.insert(out_.end(), data.begin(), data.end());
}

void ByteWriter::raw(std::string_view text) {
    out_.insert(out_.end(), text.begin(), text.end());
}

void ByteWriter::prefixed(std::span<const std::uint8_t> data) {
    if (data.size() > 0xffffffffu) throw std::length_error("field longer than 2^32-1 bytes");
    u32(static_cast<std::uint32_t>(data.size()));
    raw(data);
}

std::uint8_t ByteReader::u8() { return raw(1)[0]; }

std::uint32_t ByteReader::u32() { return static_cast<std::uint32_t>(uint_be(4)); }

std::uint64_t ByteReader::u64() { return uint_be(8); }

std::uint64_t ByteReader::uint_be(std::size_t width) {
    auto bytes = raw(width);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        if (width - i > 8 && bytes[i] != 0) throw DecodeError("integer does not fit 64 bits");
        v = (v << 8) | bytes[i];
    }
    return v;
}

std::span<const std::uint8_t> ByteReader::raw(std::size_t n) {
    if (n > remaining()) throw DecodeError("unexpected end of data");
    auto out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
}

std::span<const std::uint8_t> ByteReader::prefixed() {
    const std::uint32_t len = u32();
    return raw(len);
}

void ByteReader::expect_done() const {
    if (!done()) throw DecodeError("trailing bytes after message");
}

std::string to_hex(std::span<const std::uint8_t> data) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (auto b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

namespace {
int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}
}  // namespace

Bytes from_hex(std::string_view hex) {
    if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
    if (hex.size() % 2 != 0) throw DecodeError("hex string has odd length");
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        const int hi = hex_value(hex[i]);
        const int lo = hex_value(hex[i + 1]);
        if (hi < 0 || lo < 0) throw DecodeError("invalid hex digit");
        out.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
    }
    return out;
}

Bytes read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, std::span<const std::uint8_t> data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
}

}  // namespace seqproof
