#include "isouni/bits.hpp"

#include <gmp.h>

#include <algorithm>
#include <bit>
#include <memory>

#include "isouni/error.hpp"

namespace isouni {

namespace {

// RAII wrapper; GMP's C++ bindings are not needed for the two conversions here.
class Mpz {
 public:
  Mpz() { mpz_init(value_); }
  ~Mpz() { mpz_clear(value_); }
  Mpz(const Mpz&) = delete;
  Mpz& operator=(const Mpz&) = delete;
  mpz_ptr get() noexcept { return value_; }

 private:
  mpz_t value_;
};

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitString BitString::from_binary(std::string_view binary) {
  BitString out;
  for (char c : binary) {
    if (c != '0' && c != '1') throw InvalidArgument("binary string contains '" + std::string(1, c) + "'");
    out.push_back(c == '1');
  }
  return out;
}

BitString BitString::from_hex(std::string_view hex, std::size_t bit_length) {
  if (hex.size() != 2 * ((bit_length + 7) / 8)) {
    throw MalformedLabel("hex length does not match bit length " + std::to_string(bit_length));
  }
  BitString out;
  for (std::size_t i = 0; i < hex.size(); ++i) {
    int nibble = hex_value(hex[i]);
    if (nibble < 0) throw MalformedLabel("invalid hex digit");
    for (int b = 3; b >= 0; --b) {
      bool bit = (nibble >> b) & 1;
      if (out.size() < bit_length) {
        out.push_back(bit);
      } else if (bit) {
        throw MalformedLabel("non-zero padding after the last label bit");
      }
    }
  }
  return out;
}

void BitString::push_back(bool bit) {
  if (size_ % 64 == 0) words_.push_back(0);
  if (bit) words_.back() |= std::uint64_t{1} << (63 - size_ % 64);
  ++size_;
}

void BitString::append_bits(std::uint64_t value, unsigned width) {
  if (width == 0) return;
  if (width < 64) value &= (std::uint64_t{1} << width) - 1;
  const unsigned used = size_ % 64;
  if (used == 0) {
    words_.push_back(value << (64 - width));
  } else {
    const unsigned room = 64 - used;
    if (width <= room) {
      words_.back() |= value << (room - width);
    } else {
      words_.back() |= value >> (width - room);
      words_.push_back(value << (64 - (width - room)));
    }
  }
  size_ += width;
}

void BitString::append_zeros(std::size_t count) {
  size_ += count;
  words_.resize((size_ + 63) / 64, 0);
}

void BitString::append(const BitString& other) {
  std::size_t full = other.size_ / 64;
  for (std::size_t i = 0; i < full; ++i) append_bits(other.words_[i], 64);
  unsigned tail = other.size_ % 64;
  if (tail) append_bits(other.words_[full] >> (64 - tail), tail);
}

std::uint64_t BitString::bits_at(std::size_t pos, unsigned width) const noexcept {
  if (width == 0) return 0;
  const std::size_t w = pos / 64;
  const unsigned offset = pos % 64;
  std::uint64_t value = words_[w] << offset;
  if (offset + width > 64) value |= words_[w + 1] >> (64 - offset);
  return value >> (64 - width);
}

std::size_t BitString::zeros_from(std::size_t pos) const noexcept {
  std::size_t i = pos;
  while (i < size_) {
    const unsigned offset = i % 64;
    const std::uint64_t word = words_[i / 64] << offset;
    if (word != 0) {
      i += static_cast<std::size_t>(std::countl_zero(word));
      break;
    }
    i += 64 - offset;
  }
  return std::min(i, size_) - pos;
}

void BitString::flip(std::size_t i) {
  if (i >= size_) throw InvalidArgument("bit index out of range");
  words_[i / 64] ^= std::uint64_t{1} << (63 - i % 64);
}

std::string BitString::to_binary() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if ((*this)[i]) out[i] = '1';
  }
  return out;
}

std::string BitString::to_hex() const {
  std::string out;
  const std::size_t bytes = (size_ + 7) / 8;
  out.reserve(2 * bytes);
  for (std::size_t b = 0; b < bytes; ++b) {
    auto byte = static_cast<unsigned>((words_[b / 8] >> (56 - 8 * (b % 8))) & 0xff);
    out.push_back(kHexDigits[byte >> 4]);
    out.push_back(kHexDigits[byte & 0xf]);
  }
  return out;
}

std::size_t BitString::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull ^ size_;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------

bool BitCursor::read_bit() {
  if (position_ >= bits_->size()) throw MalformedLabel("label truncated");
  return (*bits_)[position_++];
}

bool BitCursor::peek_bit() const {
  if (position_ >= bits_->size()) throw MalformedLabel("label truncated");
  return (*bits_)[position_];
}

std::uint64_t BitCursor::read_bits(unsigned width) {
  if (width > 64) throw InvalidArgument("field wider than 64 bits");
  if (width > remaining()) throw MalformedLabel("label truncated");
  const std::uint64_t value = bits_->bits_at(position_, width);
  position_ += width;
  return value;
}

std::size_t BitCursor::skip_zeros() noexcept {
  const std::size_t zeros = bits_->zeros_from(position_);
  position_ += zeros;
  return zeros;
}

// ---------------------------------------------------------------------------

void write_fixed(BitString& out, std::uint64_t value, unsigned width) {
  if (width > 64 || (width < 64 && value >> width != 0)) {
    throw InvalidArgument("value " + std::to_string(value) + " does not fit in " +
                          std::to_string(width) + " bits");
  }
  out.append_bits(value, width);
}

std::uint64_t read_fixed(BitCursor& cursor, unsigned width) {
  return cursor.read_bits(width);
}

unsigned gamma_length(std::uint64_t value) { return 2 * floor_log2(value) + 1; }

void write_gamma(BitString& out, std::uint64_t value) {
  if (value == 0) throw InvalidArgument("gamma code is undefined for 0");
  const unsigned bits = floor_log2(value) + 1;
  out.append_zeros(bits - 1);
  out.append_bits(value, bits);
}

std::uint64_t read_gamma(BitCursor& cursor) {
  unsigned zeros = 0;
  while (!cursor.read_bit()) {
    if (++zeros > 63) throw MalformedLabel("gamma prefix too long");
  }
  return (std::uint64_t{1} << zeros) | cursor.read_bits(zeros);
}

void encode_runs(BitString& out, std::span<const std::uint32_t> magnitudes) {
  std::size_t pos = out.size();
  std::size_t total = magnitudes.size();
  for (std::uint32_t b : magnitudes) total += b;
  out.append_zeros(total);
  for (std::uint32_t b : magnitudes) {
    out.set(pos);
    pos += 1 + std::size_t{b};
  }
}

std::vector<std::uint32_t> decode_runs(BitCursor& cursor, std::size_t count) {
  std::vector<std::uint32_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!cursor.read_bit()) throw MalformedLabel("run does not start with a 1");
    out.push_back(static_cast<std::uint32_t>(cursor.skip_zeros()));
  }
  return out;
}

std::size_t trit_field_width(std::size_t count) {
  if (count == 0) return 0;
  Mpz power;
  mpz_ui_pow_ui(power.get(), 3, count);
  // 3^m is never a power of two, so its bit length is ceil(m log2 3).
  return mpz_sizeinbase(power.get(), 2);
}

void pack_trits(BitString& out, std::span<const std::uint8_t> trits) {
  if (trits.empty()) return;
  std::string digits(trits.size(), '0');
  for (std::size_t i = 0; i < trits.size(); ++i) {
    if (trits[i] > 2) throw InvalidArgument("trit out of range");
    digits[i] = static_cast<char>('0' + trits[i]);
  }
  Mpz value;
  mpz_set_str(value.get(), digits.c_str(), 3);

  const std::size_t width = trit_field_width(trits.size());
  const std::size_t limbs = (width + 63) / 64;
  std::vector<std::uint64_t> words(limbs, 0);
  std::size_t written = 0;
  // Least significant word first.
  mpz_export(words.data(), &written, -1, sizeof(std::uint64_t), 0, 0, value.get());
  const unsigned top = static_cast<unsigned>(width - 64 * (limbs - 1));
  out.append_bits(words[limbs - 1], top);
  for (std::size_t i = limbs - 1; i-- > 0;) out.append_bits(words[i], 64);
}

std::vector<std::uint8_t> unpack_trits(BitCursor& cursor, std::size_t count) {
  if (count == 0) return {};
  const std::size_t width = trit_field_width(count);
  if (width > cursor.remaining()) throw MalformedLabel("trit field truncated");
  const std::size_t limbs = (width + 63) / 64;
  std::vector<std::uint64_t> words(limbs);
  const unsigned top = static_cast<unsigned>(width - 64 * (limbs - 1));
  words[limbs - 1] = cursor.read_bits(top);
  for (std::size_t i = limbs - 1; i-- > 0;) words[i] = cursor.read_bits(64);

  Mpz value;
  mpz_import(value.get(), limbs, -1, sizeof(std::uint64_t), 0, 0, words.data());
  Mpz bound;
  mpz_ui_pow_ui(bound.get(), 3, count);
  if (mpz_cmp(value.get(), bound.get()) >= 0) {
    throw MalformedLabel("packed trit value exceeds 3^" + std::to_string(count) + " - 1");
  }
  std::unique_ptr<char, void (*)(void*)> text(mpz_get_str(nullptr, 3, value.get()), std::free);
  const std::size_t digits = std::char_traits<char>::length(text.get());
  std::vector<std::uint8_t> trits(count, 0);
  // mpz_get_str omits leading zeros; zero itself prints as "0".
  for (std::size_t i = 0; i < digits; ++i) {
    trits[count - digits + i] = static_cast<std::uint8_t>(text.get()[i] - '0');
  }
  return trits;
}

unsigned ceil_log2(std::uint64_t x) {
  return x <= 1 ? 0 : 64 - static_cast<unsigned>(std::countl_zero(x - 1));
}

unsigned floor_log2(std::uint64_t x) {
  return 63 - static_cast<unsigned>(std::countl_zero(x));
}

unsigned index_width(std::uint64_t n) { return std::max(1u, ceil_log2(n)); }

}  // namespace isouni
