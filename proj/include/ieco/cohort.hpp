#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ieco/bits.hpp"
#include "ieco/rng.hpp"

namespace ieco {

// Synthetic population for end-to-end experiments: each user is a prototype
// feature vector with per-feature values uniform over (-1, 1) (so two users
// agree on a feature's sign half the time), and a capture is the prototype
// plus i.i.d. Gaussian noise, clamped back to the interval.  Everything is
// derived from the master seed; user u owns sub-seed user_seed(u), so cohorts
// regenerate identically regardless of sampling order across users.
struct CohortParams {
  std::size_t feature_dim = 896;
  std::size_t num_users = 0;
  double intra_sigma = 0.05;  // capture-noise scale
  std::uint64_t seed = 0;
};

struct SyntheticUser {
  std::vector<double> prototype;
  std::uint64_t user_seed = 0;
};

std::uint64_t user_seed(const CohortParams& params, std::size_t user_index);
SyntheticUser make_user(const CohortParams& params, std::size_t user_index);

// One capture of this user; rng supplies the noise stream.
std::vector<double> sample_template(const SyntheticUser& user,
                                    double intra_sigma, RandomSource& rng);

// Bit-level shortcuts for formula verification: a reference string plus a
// same-user view (each bit flipped independently with probability zeta) or
// an other-user view (each bit kept equal with probability eta).
std::pair<BitString, BitString> sample_bit_pair_intra(std::size_t len,
                                                      double zeta,
                                                      RandomSource& rng);
std::pair<BitString, BitString> sample_bit_pair_inter(std::size_t len,
                                                      double eta,
                                                      RandomSource& rng);

}  // namespace ieco
