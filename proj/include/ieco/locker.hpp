#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "ieco/bits.hpp"
#include "ieco/rng.hpp"

namespace ieco {

inline constexpr std::size_t kNonceBytes = 16;

// Obfuscated storage of a value under a bit-string key.
//
// lock(key, value):   nonce <- random;  ct = pad(nonce, key) XOR (value || 0^gamma)
// unlock(key', ...):  recompute the pad; accept iff the trailing gamma bits
//                     of pad XOR ct are all zero, then return the value bits.
//
// The pad is derived by counter-mode expansion of a 256-bit hash:
//   seed = nonce || LE32(bit length of key) || key bytes (LSB-first)
//   pad  = H(seed || LE32(0)) || H(seed || LE32(1)) || ...   truncated
// The explicit length prefix keeps distinct-length keys with equal packed
// bytes (e.g. "01" vs "010") from colliding.  A wrong key is accepted only
// when its pad happens to zero the gamma check bits: probability 2^-gamma.
struct LockedPoint {
  std::array<std::uint8_t, kNonceBytes> nonce;
  BitString ciphertext;

  bool operator==(const LockedPoint&) const = default;
};

// Counter-mode expansion of the 256-bit hash to nbits.
BitString hash_expand(std::span<const std::uint8_t> seed, std::size_t nbits);

// Locks `value` under `key` with gamma check bits (gamma >= 1).
LockedPoint d_lock(const BitString& key, const BitString& value,
                   unsigned gamma, RandomSource& rng);
// Returns the value bits when `key` matches (up to the 2^-gamma false-accept
// bound), std::nullopt otherwise.  gamma must match the locking call.
std::optional<BitString> d_unlock(const BitString& key,
                                  const LockedPoint& point, unsigned gamma);

// Empty-value specialization: stores only the gamma check bits, so the point
// acts as a yes/no predicate on the key.
LockedPoint op_lock(const BitString& key, unsigned gamma, RandomSource& rng);
bool op_unlock(const BitString& key, const LockedPoint& point);

}  // namespace ieco
