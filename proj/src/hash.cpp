#include "bda/hash.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

namespace bda {

namespace {

std::string to_hex(std::span<const unsigned char> raw) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(raw.size() * 2);
    for (unsigned char b : raw) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0x0f]);
    }
    return out;
}

}  // namespace

std::string sha256_hex(std::span<const std::uint8_t> data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int md_len = 0;
    if (EVP_Digest(data.data(), data.size(), md.data(), &md_len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 digest failed");
    }
    return to_hex({md.data(), md_len});
}

std::string sha256_hex(std::string_view data) {
    return sha256_hex(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
}

void CanonicalEncoder::u64(std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8) {
        buf_.push_back(static_cast<std::uint8_t>((v >> shift) & 0xff));
    }
}

void CanonicalEncoder::i64(std::int64_t v) {
    // sign byte + magnitude keeps the encoding order-free of two's complement
    const bool neg = v < 0;
    buf_.push_back(neg ? 1 : 0);
    const std::uint64_t mag = neg ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    u64(mag);
}

void CanonicalEncoder::str(std::string_view s) {
    u64(s.size());
    buf_.insert(buf_.end(), s.begin(), s.end());
}

std::string CanonicalEncoder::digest() const { return sha256_hex(std::span(buf_)); }

}  // namespace bda
