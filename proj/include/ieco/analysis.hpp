#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ieco/bch.hpp"
#include "ieco/bits.hpp"
#include "ieco/locker.hpp"
#include "ieco/rng.hpp"
#include "ieco/scheme.hpp"

namespace ieco {

// --- Closed-form channel analysis ------------------------------------------
//
// zeta: probability that one bit of the query string differs from enrollment
// (same user); eta: probability that one bit agrees (different users).  Both
// formulas describe the per-position behavior of the recovered codeword when
// symbols pack phi bits and chaff excludes the enrolled symbol.

// First-order (small zeta*phi) probability that a recovered codeword bit
// differs from the enrolled one: 0.5 * zeta * (phi + phi / (2^phi - 1)).
double p_intra_codeword_error(double zeta, unsigned phi);

// Same quantity without the linearization, for independent per-bit flips:
// 0.5 * (1 - (1-zeta)^phi) * (1 + 1 / (2^phi - 1)).  The first-order form
// above converges to this as zeta*phi -> 0.
double p_intra_codeword_error_exact(double zeta, unsigned phi);

// Probability that an unrelated user's recovered codeword bit matches the
// enrolled one: eta^phi + 0.5 * (1 - eta^phi) * (2^phi - 2) / (2^phi - 1).
// Exact for independent per-bit agreement.
double p_inter_codeword_match(double eta, unsigned phi);

struct LimitRow {
  unsigned phi;
  double value;
  double gap_to_half;  // |value - 0.5|
};
// p_inter_codeword_match over phi = 1..max_phi at fixed eta.
std::vector<LimitRow> inter_match_limit_table(double eta, unsigned max_phi);

// --- Monte Carlo estimators --------------------------------------------------

struct McEstimate {
  double rate = 0.0;
  std::size_t observations = 0;  // codeword positions observed
  double sigma = 0.0;            // binomial std dev of `rate`
};

// Full-scheme simulation: enroll a random message over `code`, flip each
// enrollment bit with probability zeta, reproduce through the locked points,
// and count per-position codeword disagreements.  Runs whole codewords until
// at least min_observations positions are seen.
McEstimate mc_intra_codeword_error(const BchCode& code, unsigned phi,
                                   double zeta, unsigned gamma,
                                   std::size_t min_observations,
                                   RandomSource& rng);
// Same shape for the cross-user channel: the query agrees with enrollment
// per bit with probability eta; counts per-position codeword MATCHES.
McEstimate mc_inter_codeword_match(const BchCode& code, unsigned phi,
                                   double eta, unsigned gamma,
                                   std::size_t min_observations,
                                   RandomSource& rng);

// --- Recognition-rate bookkeeping --------------------------------------------

struct FarFrr {
  std::size_t genuine_total = 0;
  std::size_t genuine_failures = 0;
  std::size_t impostor_total = 0;
  std::size_t impostor_accepts = 0;
  double frr_percent = 0.0;
  double far_percent = 0.0;
};

// Percentages; totals must be nonzero.
FarFrr far_frr(std::size_t genuine_total, std::size_t genuine_failures,
               std::size_t impostor_total, std::size_t impostor_accepts);

// --- Score distributions ------------------------------------------------------

struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<std::size_t> counts;
  std::size_t total = 0;

  double bin_width() const {
    return counts.empty() ? 0.0
                          : (hi - lo) / static_cast<double>(counts.size());
  }
  double center(std::size_t b) const {
    return lo + (static_cast<double>(b) + 0.5) * bin_width();
  }
};

// Fixed-width bins over [min(values), max(values)]; the top edge is closed.
Histogram make_histogram(std::span<const double> values, std::size_t bins);

// --- Linkability of two enrollments -------------------------------------------
//
// Score-wise linkability from the likelihood ratio of mated vs non-mated
// score densities (fixed-width histogram estimates over the pooled range,
// bin count = round(sqrt(mated sample count))), and the system-level figure
// as the mated-weighted average.  0 = unlinkable, 1 = fully linkable.
struct UnlinkabilityResult {
  double d_sys = 0.0;
  std::vector<double> bin_centers;
  std::vector<double> d_local;
  std::vector<double> mated_density;     // per-bin probability mass
  std::vector<double> nonmated_density;  // per-bin probability mass
};

UnlinkabilityResult unlinkability(std::span<const double> mated_scores,
                                  std::span<const double> nonmated_scores);

// --- Key-compromise experiments ------------------------------------------------

// Baseline scheme, attacker holds the bound message m: re-encode to get the
// codeword, then brute-force each position with c_i = 1 over the 2^phi
// symbol values until its point opens.  Reports how many enrolled symbols
// that confirms and the unlock budget spent.
struct EcoAttackResult {
  std::size_t one_positions = 0;  // positions with c_i = 1
  std::size_t recovered = 0;      // symbols confirmed at those positions
  std::size_t matches_truth = 0;  // recovered symbols equal to enrollment
  std::size_t unlock_calls = 0;
};

EcoAttackResult attack_eco_with_key(const BitString& message,
                                    const BchCode& code,
                                    std::span<const LockedPoint> points,
                                    unsigned phi, const SymbolString& enrolled);

// Hardened scheme, attacker holds the derived key kappa: the only handle is
// the key locker, so guess the locker's message key.  With exhaustive = true
// all 2^message_bits candidates are tried in counting order (feasible for
// toy codes); otherwise `budget` random candidates.  Until a guess opens the
// locker, no locked point can be attributed to the biometric, so confirmed
// symbol recovery is zero.
struct IecoAttackResult {
  std::size_t guesses = 0;
  std::size_t key_hits = 0;               // guesses that opened the locker
  std::optional<std::size_t> success_at;  // 1-based index of first hit
};

IecoAttackResult attack_ieco_with_key(const BitString& kappa,
                                      const LockedPoint& key_locker,
                                      unsigned gamma, unsigned message_bits,
                                      std::size_t budget, bool exhaustive,
                                      RandomSource& rng);

}  // namespace ieco
