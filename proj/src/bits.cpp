#include "ieco/bits.hpp"

#include <bit>
#include <stdexcept>

namespace ieco {

BitString BitString::from_bits(std::span<const std::uint8_t> bits01) {
  BitString out(bits01.size());
  for (std::size_t i = 0; i < bits01.size(); ++i) {
    if (bits01[i] > 1) {
      throw std::invalid_argument("BitString::from_bits: element not 0/1");
    }
    if (bits01[i]) out.set(i, true);
  }
  return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes,
                                std::size_t nbits) {
  if (bytes.size() * 8 < nbits) {
    throw std::invalid_argument("BitString::from_bytes: too few bytes");
  }
  BitString out(nbits);
  for (std::size_t i = 0; i < nbits; ++i) {
    if ((bytes[i >> 3] >> (i & 7)) & 1u) out.set(i, true);
  }
  return out;
}

BitString BitString::from_hex(const std::string& hex, std::size_t nbits) {
  if (hex.size() % 2 != 0) {
    throw std::invalid_argument("BitString::from_hex: odd digit count");
  }
  auto nibble = [](char c) -> unsigned {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
    throw std::invalid_argument("BitString::from_hex: bad digit");
  };
  std::vector<std::uint8_t> bytes(hex.size() / 2);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    bytes[i] = static_cast<std::uint8_t>((nibble(hex[2 * i]) << 4) |
                                         nibble(hex[2 * i + 1]));
  }
  return from_bytes(bytes, nbits);
}

void BitString::push_back(bool v) {
  if (size_ % 64 == 0) words_.push_back(0);
  ++size_;
  if (v) set(size_ - 1, true);
}

void BitString::append(const BitString& other) {
  for (std::size_t i = 0; i < other.size_; ++i) push_back(other.get(i));
}

BitString BitString::slice(std::size_t pos, std::size_t len) const {
  if (pos + len > size_) {
    throw std::out_of_range("BitString::slice: range past end");
  }
  BitString out(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (get(pos + i)) out.set(i, true);
  }
  return out;
}

std::size_t BitString::count_ones() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

std::size_t BitString::hamming(const BitString& other) const {
  if (size_ != other.size_) {
    throw std::invalid_argument("BitString::hamming: size mismatch");
  }
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    total += std::popcount(words_[w] ^ other.words_[w]);
  }
  return total;
}

bool BitString::all_zero() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

BitString& BitString::operator^=(const BitString& other) {
  if (size_ != other.size_) {
    throw std::invalid_argument("BitString::operator^=: size mismatch");
  }
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::vector<std::uint8_t> BitString::to_bytes() const {
  std::vector<std::uint8_t> out((size_ + 7) / 8, 0);
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) out[i >> 3] |= static_cast<std::uint8_t>(1u << (i & 7));
  }
  return out;
}

std::string BitString::to_hex() const {
  static const char* digits = "0123456789abcdef";
  const auto bytes = to_bytes();
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

}  // namespace ieco
