#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bda {

// Identifier recorded in every report header next to emitted digests.
inline constexpr std::string_view kHashAlgorithm = "sha256";

std::string sha256_hex(std::span<const std::uint8_t> data);
std::string sha256_hex(std::string_view data);

// Canonical byte encoding used for state digests and commitments: every field
// is length- or width-delimited, integers are big-endian fixed width, and
// callers must emit map entries in sorted key order. Equal states encode to
// equal bytes on every platform.
class CanonicalEncoder {
  public:
    void u8(std::uint8_t v) { buf_.push_back(v); }
    void u64(std::uint64_t v);
    void i64(std::int64_t v);
    void str(std::string_view s);

    const std::vector<std::uint8_t>& bytes() const { return buf_; }
    std::string digest() const;

  private:
    std::vector<std::uint8_t> buf_;
};

}  // namespace bda
