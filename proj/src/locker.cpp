#include "ieco/locker.hpp"

#include <openssl/sha.h>

#include <stdexcept>
#include <vector>

namespace ieco {

namespace {

void append_le32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
}

// nonce || LE32(key bit length) || packed key bytes.
std::vector<std::uint8_t> pad_seed(const LockedPoint& point,
                                   const BitString& key) {
  std::vector<std::uint8_t> seed(point.nonce.begin(), point.nonce.end());
  append_le32(seed, static_cast<std::uint32_t>(key.size()));
  const auto key_bytes = key.to_bytes();
  seed.insert(seed.end(), key_bytes.begin(), key_bytes.end());
  return seed;
}

BitString make_pad(const LockedPoint& point, const BitString& key,
                   std::size_t nbits) {
  const auto seed = pad_seed(point, key);
  return hash_expand(seed, nbits);
}

}  // namespace

BitString hash_expand(std::span<const std::uint8_t> seed, std::size_t nbits) {
  if (nbits > (1u << 20)) {
    throw std::invalid_argument("hash_expand: output too long");
  }
  std::vector<std::uint8_t> block(seed.begin(), seed.end());
  const std::size_t counter_at = block.size();
  block.resize(block.size() + 4);
  std::vector<std::uint8_t> out;
  out.reserve((nbits + 7) / 8 + SHA256_DIGEST_LENGTH);
  std::uint32_t counter = 0;
  while (out.size() * 8 < nbits) {
    block[counter_at] = static_cast<std::uint8_t>(counter & 0xff);
    block[counter_at + 1] = static_cast<std::uint8_t>((counter >> 8) & 0xff);
    block[counter_at + 2] = static_cast<std::uint8_t>((counter >> 16) & 0xff);
    block[counter_at + 3] = static_cast<std::uint8_t>((counter >> 24) & 0xff);
    std::uint8_t digest[SHA256_DIGEST_LENGTH];
    SHA256(block.data(), block.size(), digest);
    out.insert(out.end(), digest, digest + SHA256_DIGEST_LENGTH);
    ++counter;
  }
  return BitString::from_bytes(out, nbits);
}

LockedPoint d_lock(const BitString& key, const BitString& value,
                   unsigned gamma, RandomSource& rng) {
  if (gamma == 0) throw std::invalid_argument("d_lock: gamma must be >= 1");
  LockedPoint point;
  rng.fill(point.nonce);
  BitString plain = value;
  plain.append(BitString(gamma));  // gamma zero check bits
  point.ciphertext = make_pad(point, key, plain.size()) ^ plain;
  return point;
}

std::optional<BitString> d_unlock(const BitString& key,
                                  const LockedPoint& point, unsigned gamma) {
  const std::size_t total = point.ciphertext.size();
  if (gamma == 0 || total < gamma) {
    throw std::invalid_argument("d_unlock: gamma inconsistent with point");
  }
  const BitString plain = make_pad(point, key, total) ^ point.ciphertext;
  if (!plain.slice(total - gamma, gamma).all_zero()) return std::nullopt;
  return plain.slice(0, total - gamma);
}

LockedPoint op_lock(const BitString& key, unsigned gamma, RandomSource& rng) {
  return d_lock(key, BitString(), gamma, rng);
}

bool op_unlock(const BitString& key, const LockedPoint& point) {
  const std::size_t total = point.ciphertext.size();
  return (make_pad(point, key, total) ^ point.ciphertext).all_zero();
}

}  // namespace ieco
