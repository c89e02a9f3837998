#include "ieco/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ieco/cohort.hpp"
#include "ieco/pipeline.hpp"

namespace ieco {

namespace {

void check_phi(unsigned phi) {
  if (phi == 0 || phi > 20) {
    throw std::invalid_argument("analysis: phi must be in [1, 20]");
  }
}

void check_unit(double p, const char* name) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument(std::string("analysis: ") + name +
                                " outside [0, 1]");
  }
}

}  // namespace

double p_intra_codeword_error(double zeta, unsigned phi) {
  check_phi(phi);
  check_unit(zeta, "zeta");
  const double alphabet = std::ldexp(1.0, static_cast<int>(phi));  // 2^phi
  return 0.5 * zeta * (phi + phi / (alphabet - 1.0));
}

double p_intra_codeword_error_exact(double zeta, unsigned phi) {
  check_phi(phi);
  check_unit(zeta, "zeta");
  const double alphabet = std::ldexp(1.0, static_cast<int>(phi));
  const double symbol_error = 1.0 - std::pow(1.0 - zeta, phi);
  return 0.5 * symbol_error * (1.0 + 1.0 / (alphabet - 1.0));
}

double p_inter_codeword_match(double eta, unsigned phi) {
  check_phi(phi);
  check_unit(eta, "eta");
  const double alphabet = std::ldexp(1.0, static_cast<int>(phi));
  const double symbol_match = std::pow(eta, phi);
  return symbol_match +
         0.5 * (1.0 - symbol_match) * (alphabet - 2.0) / (alphabet - 1.0);
}

std::vector<LimitRow> inter_match_limit_table(double eta, unsigned max_phi) {
  std::vector<LimitRow> rows;
  rows.reserve(max_phi);
  for (unsigned phi = 1; phi <= max_phi; ++phi) {
    const double v = p_inter_codeword_match(eta, phi);
    rows.push_back({phi, v, std::fabs(v - 0.5)});
  }
  return rows;
}

namespace {

McEstimate run_codeword_channel(const BchCode& code, unsigned phi,
                                double bit_prob, bool intra, unsigned gamma,
                                std::size_t min_observations,
                                RandomSource& rng) {
  check_phi(phi);
  const unsigned n = code.n();
  const std::size_t runs = (min_observations + n - 1) / n;
  std::size_t events = 0;
  for (std::size_t run = 0; run < runs; ++run) {
    BitString omega, query_bits;
    if (intra) {
      std::tie(omega, query_bits) =
          sample_bit_pair_intra(static_cast<std::size_t>(phi) * n, bit_prob,
                                rng);
    } else {
      std::tie(omega, query_bits) =
          sample_bit_pair_inter(static_cast<std::size_t>(phi) * n, bit_prob,
                                rng);
    }
    const SymbolString enrolled = form_symbols(omega, phi);
    const SymbolString query = form_symbols(query_bits, phi);
    IecoEnrollment enrollment = ieco_generate(enrolled, code, gamma, rng);
    const BitString codeword =
        recover_codeword(enrolled, enrollment.points, n);  // noise-free view
    const BitString estimate = recover_codeword(query, enrollment.points, n);
    if (intra) {
      events += codeword.hamming(estimate);
    } else {
      events += n - codeword.hamming(estimate);
    }
  }
  McEstimate est;
  est.observations = runs * n;
  est.rate = static_cast<double>(events) / static_cast<double>(est.observations);
  est.sigma = std::sqrt(est.rate * (1.0 - est.rate) /
                        static_cast<double>(est.observations));
  return est;
}

}  // namespace

McEstimate mc_intra_codeword_error(const BchCode& code, unsigned phi,
                                   double zeta, unsigned gamma,
                                   std::size_t min_observations,
                                   RandomSource& rng) {
  check_unit(zeta, "zeta");
  return run_codeword_channel(code, phi, zeta, true, gamma, min_observations,
                              rng);
}

McEstimate mc_inter_codeword_match(const BchCode& code, unsigned phi,
                                   double eta, unsigned gamma,
                                   std::size_t min_observations,
                                   RandomSource& rng) {
  check_unit(eta, "eta");
  return run_codeword_channel(code, phi, eta, false, gamma, min_observations,
                              rng);
}

FarFrr far_frr(std::size_t genuine_total, std::size_t genuine_failures,
               std::size_t impostor_total, std::size_t impostor_accepts) {
  if (genuine_total == 0 || impostor_total == 0) {
    throw std::invalid_argument("far_frr: totals must be nonzero");
  }
  if (genuine_failures > genuine_total || impostor_accepts > impostor_total) {
    throw std::invalid_argument("far_frr: counts exceed totals");
  }
  FarFrr out;
  out.genuine_total = genuine_total;
  out.genuine_failures = genuine_failures;
  out.impostor_total = impostor_total;
  out.impostor_accepts = impostor_accepts;
  out.frr_percent = 100.0 * static_cast<double>(genuine_failures) /
                    static_cast<double>(genuine_total);
  out.far_percent = 100.0 * static_cast<double>(impostor_accepts) /
                    static_cast<double>(impostor_total);
  return out;
}

Histogram make_histogram(std::span<const double> values, std::size_t bins) {
  if (values.empty() || bins == 0) {
    throw std::invalid_argument("make_histogram: need values and bins");
  }
  Histogram h;
  h.lo = *std::min_element(values.begin(), values.end());
  h.hi = *std::max_element(values.begin(), values.end());
  h.counts.assign(bins, 0);
  h.total = values.size();
  const double width = (h.hi - h.lo) / static_cast<double>(bins);
  for (double v : values) {
    std::size_t idx = 0;
    if (width > 0.0) {
      idx = static_cast<std::size_t>((v - h.lo) / width);
      if (idx >= bins) idx = bins - 1;  // closed top edge
    }
    ++h.counts[idx];
  }
  return h;
}

UnlinkabilityResult unlinkability(std::span<const double> mated_scores,
                                  std::span<const double> nonmated_scores) {
  if (mated_scores.empty() || nonmated_scores.empty()) {
    throw std::invalid_argument("unlinkability: need both score sets");
  }
  const std::size_t bins = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::lround(std::sqrt(static_cast<double>(mated_scores.size())))));
  double lo = *std::min_element(mated_scores.begin(), mated_scores.end());
  double hi = *std::max_element(mated_scores.begin(), mated_scores.end());
  lo = std::min(lo, *std::min_element(nonmated_scores.begin(),
                                      nonmated_scores.end()));
  hi = std::max(hi, *std::max_element(nonmated_scores.begin(),
                                      nonmated_scores.end()));
  const double width =
      hi > lo ? (hi - lo) / static_cast<double>(bins) : 0.0;
  auto bin_of = [&](double v) {
    if (width <= 0.0) return std::size_t{0};
    std::size_t idx = static_cast<std::size_t>((v - lo) / width);
    return idx >= bins ? bins - 1 : idx;
  };
  std::vector<double> mated_mass(bins, 0.0), nonmated_mass(bins, 0.0);
  for (double v : mated_scores) mated_mass[bin_of(v)] += 1.0;
  for (double v : nonmated_scores) nonmated_mass[bin_of(v)] += 1.0;
  for (double& v : mated_mass) v /= static_cast<double>(mated_scores.size());
  for (double& v : nonmated_mass) {
    v /= static_cast<double>(nonmated_scores.size());
  }

  UnlinkabilityResult out;
  out.bin_centers.resize(bins);
  out.d_local.assign(bins, 0.0);
  out.mated_density = mated_mass;
  out.nonmated_density = nonmated_mass;
  double d_sys = 0.0;
  for (std::size_t b = 0; b < bins; ++b) {
    out.bin_centers[b] =
        lo + (static_cast<double>(b) + 0.5) * (width > 0.0 ? width : 1.0);
    double d = 0.0;
    if (mated_mass[b] > 0.0) {
      if (nonmated_mass[b] == 0.0) {
        d = 1.0;  // likelihood ratio diverges: fully linkable score
      } else {
        const double lr = mated_mass[b] / nonmated_mass[b];
        d = std::max(0.0, 2.0 * lr / (1.0 + lr) - 1.0);
      }
    }
    out.d_local[b] = d;
    d_sys += mated_mass[b] * d;
  }
  out.d_sys = d_sys;
  return out;
}

EcoAttackResult attack_eco_with_key(const BitString& message,
                                    const BchCode& code,
                                    std::span<const LockedPoint> points,
                                    unsigned phi,
                                    const SymbolString& enrolled) {
  check_phi(phi);
  if (points.size() != code.n() || enrolled.symbols.size() != code.n()) {
    throw std::invalid_argument("attack_eco_with_key: length mismatch");
  }
  const BitString codeword = code.encode(message);
  EcoAttackResult out;
  const std::uint32_t alphabet = std::uint32_t{1} << phi;
  for (unsigned i = 0; i < code.n(); ++i) {
    if (!codeword.get(i)) continue;
    ++out.one_positions;
    for (std::uint32_t cand = 0; cand < alphabet; ++cand) {
      ++out.unlock_calls;
      if (op_unlock(symbol_to_bits(cand, phi), points[i])) {
        ++out.recovered;
        if (cand == enrolled.symbols[i]) ++out.matches_truth;
        break;
      }
    }
  }
  return out;
}

IecoAttackResult attack_ieco_with_key(const BitString& kappa,
                                      const LockedPoint& key_locker,
                                      unsigned gamma, unsigned message_bits,
                                      std::size_t budget, bool exhaustive,
                                      RandomSource& rng) {
  IecoAttackResult out;
  if (exhaustive) {
    if (message_bits > 24) {
      throw std::invalid_argument(
          "attack_ieco_with_key: exhaustive mode needs message_bits <= 24");
    }
    const std::uint64_t total = std::uint64_t{1} << message_bits;
    for (std::uint64_t v = 0; v < total; ++v) {
      ++out.guesses;
      BitString cand(message_bits);
      for (unsigned b = 0; b < message_bits; ++b) {
        if ((v >> b) & 1u) cand.set(b, true);
      }
      const auto opened = d_unlock(cand, key_locker, gamma);
      if (opened && *opened == kappa) {
        ++out.key_hits;
        if (!out.success_at) out.success_at = out.guesses;
      }
    }
    return out;
  }
  for (std::size_t g = 0; g < budget; ++g) {
    ++out.guesses;
    const BitString cand = rng.bits(message_bits);
    const auto opened = d_unlock(cand, key_locker, gamma);
    if (opened && *opened == kappa) {
      ++out.key_hits;
      if (!out.success_at) out.success_at = out.guesses;
    }
  }
  return out;
}

}  // namespace ieco
