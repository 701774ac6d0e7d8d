#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace isouni {

/// Finite bit sequence, most significant bit first. Equality is bitwise.
class BitString {
 public:
  BitString() = default;

  /// Parses a string of '0'/'1' characters.
  static BitString from_binary(std::string_view binary);

  /// Inverse of to_hex(): MSB-first hex, zero-padded to whole bytes.
  static BitString from_hex(std::string_view hex, std::size_t bit_length);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool operator[](std::size_t i) const noexcept {
    return (words_[i / 64] >> (63 - i % 64)) & 1;
  }

  void push_back(bool bit);
  /// Appends the low `width` bits of `value`, high bit first (width <= 64).
  void append_bits(std::uint64_t value, unsigned width);
  void append_zeros(std::size_t count);
  void append(const BitString& other);

  /// Bits [pos, pos + width) as an integer, first bit most significant.
  /// Requires width <= 64 and pos + width <= size().
  std::uint64_t bits_at(std::size_t pos, unsigned width) const noexcept;

  /// Number of consecutive 0 bits starting at `pos`, stopping at the end.
  std::size_t zeros_from(std::size_t pos) const noexcept;

  /// Sets bit i to 1.
  void set(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (63 - i % 64); }

  /// Flips bit i in place.
  void flip(std::size_t i);

  std::string to_binary() const;
  std::string to_hex() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const BitString& a, const BitString& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

/// Sequential reader over a BitString. Every read past the end throws
/// MalformedLabel, so a truncated label can never be silently accepted.
class BitCursor {
 public:
  explicit BitCursor(const BitString& bits) : bits_(&bits) {}

  std::size_t position() const noexcept { return position_; }
  std::size_t remaining() const noexcept { return bits_->size() - position_; }
  bool at_end() const noexcept { return position_ == bits_->size(); }

  bool read_bit();
  bool peek_bit() const;
  std::uint64_t read_bits(unsigned width);
  /// Consumes 0 bits up to the next 1 (not consumed) or the end.
  std::size_t skip_zeros() noexcept;

 private:
  const BitString* bits_;
  std::size_t position_ = 0;
};

// Fixed-width big-endian fields.
void write_fixed(BitString& out, std::uint64_t value, unsigned width);
std::uint64_t read_fixed(BitCursor& cursor, unsigned width);

// Elias gamma: floor(log2 v) zeros, then v in binary. Requires v >= 1.
void write_gamma(BitString& out, std::uint64_t value);
std::uint64_t read_gamma(BitCursor& cursor);
unsigned gamma_length(std::uint64_t value);

/// Each magnitude b becomes a 1 followed by b zeros. The zeros of the last
/// run are only delimited by a following 1 or the end of the string, so the
/// run field must close its container (or be followed by a field starting
/// with a 1).
void encode_runs(BitString& out, std::span<const std::uint32_t> magnitudes);
std::vector<std::uint32_t> decode_runs(BitCursor& cursor, std::size_t count);

/// Base-3 packing: (t_1..t_m), t_1 most significant, written as one integer
/// in exactly trit_field_width(m) = ceil(m * log2 3) bits.
void pack_trits(BitString& out, std::span<const std::uint8_t> trits);
std::vector<std::uint8_t> unpack_trits(BitCursor& cursor, std::size_t count);
std::size_t trit_field_width(std::size_t count);

/// ceil(log2 x) for x >= 1; 0 for x <= 1.
unsigned ceil_log2(std::uint64_t x);
/// floor(log2 x) for x >= 1.
unsigned floor_log2(std::uint64_t x);
/// Width of a field holding values in [0, n): ceil(log2 n), at least 1.
unsigned index_width(std::uint64_t n);

}  // namespace isouni

template <>
struct std::hash<isouni::BitString> {
  std::size_t operator()(const isouni::BitString& bits) const noexcept {
    return bits.hash();
  }
};
