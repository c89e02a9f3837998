#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ieco {

// Dynamically sized bit string with LSB-first packing.
//
// Bit i lives in word i/64 at bit position i%64.  Byte serialization keeps
// the same convention: bit i maps to byte i/8, bit position i%8, and the
// final partial byte (if any) is zero-padded in its high positions.  All
// bits past size() are kept at zero so that whole-word equality, XOR and
// popcount are valid.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t nbits) : size_(nbits) {
    words_.resize(word_count(nbits), 0);
  }

  // Builds from one value per bit (each element must be 0 or 1).
  static BitString from_bits(std::span<const std::uint8_t> bits01);
  // Unpacks nbits from LSB-first bytes; bytes must hold at least nbits bits.
  static BitString from_bytes(std::span<const std::uint8_t> bytes,
                              std::size_t nbits);
  // Parses lowercase/uppercase hex pairs into bytes, then unpacks nbits.
  static BitString from_hex(const std::string& hex, std::size_t nbits);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  void push_back(bool v);
  void append(const BitString& other);
  BitString slice(std::size_t pos, std::size_t len) const;

  std::size_t count_ones() const;
  // Number of positions where the two strings differ; sizes must match.
  std::size_t hamming(const BitString& other) const;
  bool all_zero() const;

  BitString& operator^=(const BitString& other);
  friend BitString operator^(BitString a, const BitString& b) {
    a ^= b;
    return a;
  }
  bool operator==(const BitString&) const = default;

  // LSB-first packed bytes, ceil(size/8) of them.
  std::vector<std::uint8_t> to_bytes() const;
  // Lowercase hex of to_bytes().
  std::string to_hex() const;

 private:
  static std::size_t word_count(std::size_t nbits) { return (nbits + 63) / 64; }

  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

}  // namespace ieco
