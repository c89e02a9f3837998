#include "ieco/cohort.hpp"

#include <algorithm>
#include <stdexcept>

namespace ieco {

namespace {
// Domain tag keeping user sub-seed derivation distinct from other streams.
constexpr std::uint64_t kUserSeedTag = 0x5eedba5e0c0a117eULL;
}  // namespace

std::uint64_t user_seed(const CohortParams& params, std::size_t user_index) {
  return mix64(params.seed ^ mix64(kUserSeedTag + user_index));
}

SyntheticUser make_user(const CohortParams& params, std::size_t user_index) {
  if (user_index >= params.num_users) {
    throw std::invalid_argument("make_user: index out of range");
  }
  SyntheticUser u;
  u.user_seed = user_seed(params, user_index);
  u.prototype.resize(params.feature_dim);
  for (std::size_t i = 0; i < params.feature_dim; ++i) {
    const double unit =
        static_cast<double>(keyed_stream(u.user_seed, i) >> 11) * 0x1.0p-53;
    u.prototype[i] = 2.0 * unit - 1.0;
  }
  return u;
}

std::vector<double> sample_template(const SyntheticUser& user,
                                    double intra_sigma, RandomSource& rng) {
  if (intra_sigma < 0.0) {
    throw std::invalid_argument("sample_template: negative noise scale");
  }
  std::vector<double> out(user.prototype.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double noisy = user.prototype[i] + intra_sigma * rng.gaussian();
    out[i] = std::clamp(noisy, -1.0, 1.0);
  }
  return out;
}

std::pair<BitString, BitString> sample_bit_pair_intra(std::size_t len,
                                                      double zeta,
                                                      RandomSource& rng) {
  if (zeta < 0.0 || zeta > 1.0) {
    throw std::invalid_argument("sample_bit_pair_intra: zeta outside [0, 1]");
  }
  BitString base = rng.bits(len);
  BitString noisy = base;
  for (std::size_t i = 0; i < len; ++i) {
    if (rng.unit_double() < zeta) noisy.flip(i);
  }
  return {std::move(base), std::move(noisy)};
}

std::pair<BitString, BitString> sample_bit_pair_inter(std::size_t len,
                                                      double eta,
                                                      RandomSource& rng) {
  if (eta < 0.0 || eta > 1.0) {
    throw std::invalid_argument("sample_bit_pair_inter: eta outside [0, 1]");
  }
  BitString base = rng.bits(len);
  BitString other = base;
  for (std::size_t i = 0; i < len; ++i) {
    if (rng.unit_double() >= eta) other.flip(i);
  }
  return {std::move(base), std::move(other)};
}

}  // namespace ieco
