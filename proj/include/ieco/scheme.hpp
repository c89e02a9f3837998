#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ieco/bch.hpp"
#include "ieco/bits.hpp"
#include "ieco/locker.hpp"
#include "ieco/rng.hpp"

namespace ieco {

// String of n symbols, each packing phi bits.  When formed from a bit string,
// the first bit of each phi-bit group is the symbol's most significant bit.
struct SymbolString {
  std::vector<std::uint32_t> symbols;
  unsigned phi = 0;

  std::size_t size() const { return symbols.size(); }
  bool operator==(const SymbolString&) const = default;
};

// The phi bits of one symbol in group order (bit 0 = the symbol's MSB).
BitString symbol_to_bits(std::uint32_t symbol, unsigned phi);

// --- Baseline error-correct-and-obfuscate binding -------------------------
//
// Enrollment draws a random message m, spreads its codeword c over n locked
// points (position i locks the biometric symbol when c_i = 1, otherwise a
// uniformly random symbol r_i which MAY collide with the biometric one), and
// keeps m as the bound secret.  The collision possibility is deliberate: it
// makes reproduction non-deterministic even from a noise-free query, and it
// is what the irreversibility-hardened variant below repairs.
struct EcoEnrollment {
  BitString message;  // k bits; the bound secret
  std::vector<LockedPoint> points;
};

EcoEnrollment eco_generate(const SymbolString& s, const BchCode& code,
                           unsigned gamma, RandomSource& rng);
// Recovers the message from a query string, or nullopt when decoding fails.
std::optional<BitString> eco_reproduce(const SymbolString& query,
                                       std::span<const LockedPoint> points,
                                       const BchCode& code);

// --- Irreversibility-hardened binding --------------------------------------
//
// Same point construction, with two changes: chaff symbols are drawn from
// the symbol alphabet EXCLUDING the biometric symbol (restoring noise-free
// determinism), and the bound secret is a fresh key kappa stored in a
// locker keyed by m, so m itself is discarded after enrollment.  Failure to
// decode and failure to open the key locker are indistinguishable: both
// yield nullopt.
struct IecoEnrollment {
  BitString key;  // kappa; never stored in helper data
  std::vector<LockedPoint> points;
  LockedPoint key_locker;
};

// key_bits = 0 means "use the code dimension k".
IecoEnrollment ieco_generate(const SymbolString& s, const BchCode& code,
                             unsigned gamma, RandomSource& rng,
                             std::size_t key_bits = 0);
std::optional<BitString> ieco_reproduce(const SymbolString& query,
                                        std::span<const LockedPoint> points,
                                        const LockedPoint& key_locker,
                                        const BchCode& code, unsigned gamma);

// Per-position codeword estimate recovered from the locked points; bit i is
// set iff the query symbol opens point i.  Shared by both reproduce paths
// and by the evaluation harness.
BitString recover_codeword(const SymbolString& query,
                           std::span<const LockedPoint> points, unsigned n);

// Public helper record for one enrollment: everything reproduction needs,
// nothing secret (no message, no key, no chaff values, no biometric bits).
struct HelperData {
  std::uint16_t version = 1;
  std::uint8_t phi = 0;
  std::uint16_t gamma = 0;
  std::uint16_t n = 0;
  std::uint16_t k = 0;
  std::uint64_t rp_seed = 0;
  std::uint32_t input_dim = 0;   // feature dimension N
  std::uint32_t proj_dim = 0;    // projected dimension K
  std::vector<std::uint32_t> reliable_indices;  // strictly increasing
  std::vector<LockedPoint> points;              // n entries
  LockedPoint key_locker;

  bool operator==(const HelperData&) const = default;
};

std::optional<BitString> ieco_reproduce(const SymbolString& query,
                                        const HelperData& helper,
                                        const BchCode& code);

}  // namespace ieco
