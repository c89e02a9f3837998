#pragma once

#include <cstdint>
#include <span>

#include "ieco/bits.hpp"

namespace ieco {

// Bijective 64-bit finalizer (splitmix64 increment + stir).  Used to derive
// sub-seeds and as the core of the keyed counter stream below.
std::uint64_t mix64(std::uint64_t x);

// Value #index of the deterministic stream keyed by `seed`.  Stateless and
// random-access; the basis for reproducible projection matrices and derived
// per-user seeds.
inline std::uint64_t keyed_stream(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
}

// Deterministic standard-normal draw at position `index` of stream `seed`.
// Consecutive even/odd indices share one Box-Muller pair, so any contiguous
// or strided access pattern regenerates identical values.  Uses only
// fixed-width integer mixing plus sqrt/log/cos on IEEE doubles, so streams
// are reproducible from the seed alone.
double gaussian_at(std::uint64_t seed, std::uint64_t index);

// Byte-oriented randomness source.  Everything that needs entropy takes one
// of these, so tests and deterministic CLI runs can inject a seeded stream
// while production enrollment uses the process CSPRNG.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;

  std::uint64_t next_u64();
  // Uniform value in [0, bound) without modulo bias; bound must be >= 1.
  std::uint64_t below(std::uint64_t bound);
  // Uniform double in [0, 1) with 53 random bits.
  double unit_double();
  // Standard normal via Box-Muller on two unit draws.
  double gaussian();
  // nbits independent uniform bits.
  BitString bits(std::size_t nbits);
};

// Process CSPRNG (OpenSSL RAND_bytes).  Throws on failure.
class SystemRandom final : public RandomSource {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

// Deterministic seeded source (splitmix64 sequence).
class SplitMixRandom final : public RandomSource {
 public:
  explicit SplitMixRandom(std::uint64_t seed) : state_(seed) {}
  void fill(std::span<std::uint8_t> out) override;
  std::uint64_t raw_next();

 private:
  std::uint64_t state_;
};

}  // namespace ieco
