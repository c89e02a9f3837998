#include "ieco/study.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <utility>

#include "ieco/pipeline.hpp"

namespace ieco {

namespace {

// Domain tags for per-user derived streams.
constexpr std::uint64_t kCaptureTag = 0x00ca9d04e5a3717eULL;
constexpr std::uint64_t kEnrollSeedTag = 0x00e740115eed0001ULL;
constexpr std::uint64_t kSchemeTag = 0x005c4e3e00000042ULL;
constexpr std::uint64_t kPairTag = 0x00bad5eed0000007ULL;

std::vector<double> mean_capture(const SyntheticUser& user, double sigma,
                                 std::size_t captures, RandomSource& rng) {
  std::vector<double> mean(user.prototype.size(), 0.0);
  for (std::size_t c = 0; c < captures; ++c) {
    const auto t = sample_template(user, sigma, rng);
    for (std::size_t i = 0; i < t.size(); ++i) mean[i] += t[i];
  }
  const double inv = 1.0 / static_cast<double>(captures);
  for (double& v : mean) v *= inv;
  return mean;
}

BitString bits_from_values(std::span<const double> values) {
  BitString out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= 0.0) out.set(i, true);
  }
  return out;
}

struct EnrolledUser {
  SyntheticUser user;
  EnrollmentString enrollment;
  std::vector<IecoEnrollment> bindings;  // one per code configuration
  std::vector<std::vector<double>> query_means;
};

double halfnormal_scale(std::span<const double> values) {
  if (values.empty()) return 0.0;
  double ss = 0.0;
  for (double v : values) ss += v * v;
  return std::sqrt(ss / static_cast<double>(values.size()));
}

}  // namespace

SimulationReport run_far_frr_simulation(const SimulationConfig& config) {
  if (config.num_users < 2 || config.query_sets_per_user == 0 ||
      config.enroll_captures == 0 || config.k_values.empty()) {
    throw std::invalid_argument("run_far_frr_simulation: bad configuration");
  }
  std::vector<BchCode> codes;
  codes.reserve(config.k_values.size());
  for (unsigned k : config.k_values) {
    codes.push_back(BchCode::construct(config.n, k));
  }
  CohortParams cohort{config.feature_dim, config.num_users,
                      config.intra_sigma, config.seed};

  // Phase 1: enroll everyone and pre-draw every query capture set.
  std::vector<EnrolledUser> users;
  users.reserve(config.num_users);
  for (std::size_t u = 0; u < config.num_users; ++u) {
    EnrolledUser eu;
    eu.user = make_user(cohort, u);
    SplitMixRandom capture_rng(mix64(eu.user.user_seed ^ kCaptureTag));
    std::vector<std::vector<double>> captures;
    captures.reserve(config.enroll_captures);
    for (std::size_t c = 0; c < config.enroll_captures; ++c) {
      captures.push_back(
          sample_template(eu.user, config.intra_sigma, capture_rng));
    }
    const std::uint64_t rp_seed = mix64(eu.user.user_seed ^ kEnrollSeedTag);
    eu.enrollment = enroll_string(captures, rp_seed, config.phi, config.n);
    for (std::size_t ci = 0; ci < codes.size(); ++ci) {
      SplitMixRandom scheme_rng(mix64(eu.user.user_seed ^ (kSchemeTag + ci)));
      eu.bindings.push_back(ieco_generate(eu.enrollment.symbols, codes[ci],
                                          config.gamma, scheme_rng));
    }
    eu.query_means.reserve(config.query_sets_per_user);
    for (std::size_t q = 0; q < config.query_sets_per_user; ++q) {
      eu.query_means.push_back(mean_capture(eu.user, config.intra_sigma,
                                            config.enroll_captures,
                                            capture_rng));
    }
    users.push_back(std::move(eu));
  }

  // Phase 2: replay every query set against every enrollment.
  SimulationReport report;
  report.rows.resize(codes.size());
  for (std::size_t ci = 0; ci < codes.size(); ++ci) {
    report.rows[ci].n = config.n;
    report.rows[ci].k = codes[ci].k();
    report.rows[ci].t = codes[ci].t();
  }
  std::vector<std::size_t> genuine_fail(codes.size(), 0);
  std::vector<std::size_t> impostor_accept(codes.size(), 0);
  std::size_t genuine_total = 0, impostor_total = 0;
  const std::size_t omega_bits = static_cast<std::size_t>(config.phi) * config.n;

  // Deterministic cap on cross-user attempts, spread evenly.
  const std::size_t all_impostor = config.num_users *
                                   (config.num_users - 1) *
                                   config.query_sets_per_user;
  const std::size_t impostor_budget =
      config.max_impostor_attempts == 0
          ? all_impostor
          : std::min(config.max_impostor_attempts, all_impostor);
  std::size_t impostor_counter = 0;  // index over all cross-user attempts

  for (std::size_t u = 0; u < config.num_users; ++u) {
    const EnrolledUser& target = users[u];
    const ProjectionColumns columns = make_projection_columns(
        target.enrollment.meta.rp_seed, config.feature_dim,
        target.enrollment.meta.indices);
    for (std::size_t v = 0; v < config.num_users; ++v) {
      const bool genuine = (v == u);
      for (const auto& query_mean : users[v].query_means) {
        if (!genuine) {
          // Even subsampling of the cross-user stream against the budget:
          // keep attempt i iff the integer ramp i*budget/all advances at i+1.
          const bool selected =
              impostor_counter * impostor_budget / all_impostor !=
              (impostor_counter + 1) * impostor_budget / all_impostor;
          ++impostor_counter;
          if (!selected) continue;
        }
        const auto values = project_selected(query_mean, columns);
        const BitString query_bits = bits_from_values(values);
        const double distance =
            static_cast<double>(query_bits.hamming(target.enrollment.omega)) /
            static_cast<double>(omega_bits);
        const SymbolString query = form_symbols(query_bits, config.phi);
        if (genuine) {
          ++genuine_total;
          report.genuine_distances.push_back(distance);
        } else {
          ++impostor_total;
          report.impostor_distances.push_back(distance);
        }
        for (std::size_t ci = 0; ci < codes.size(); ++ci) {
          const auto key = ieco_reproduce(query, target.bindings[ci].points,
                                          target.bindings[ci].key_locker,
                                          codes[ci], config.gamma);
          const bool accepted = key.has_value();
          const bool correct = accepted && *key == target.bindings[ci].key;
          if (genuine) {
            if (!correct) ++genuine_fail[ci];
          } else {
            if (accepted) ++impostor_accept[ci];
          }
        }
      }
    }
  }

  report.genuine_attempts = genuine_total;
  report.impostor_attempts = impostor_total;
  for (std::size_t ci = 0; ci < codes.size(); ++ci) {
    report.rows[ci].rates = far_frr(genuine_total, genuine_fail[ci],
                                    impostor_total, impostor_accept[ci]);
  }
  report.intra_sigma_hat = halfnormal_scale(report.genuine_distances);
  double mu = 0.0;
  for (double d : report.impostor_distances) mu += d;
  mu /= static_cast<double>(report.impostor_distances.size());
  double var = 0.0;
  for (double d : report.impostor_distances) var += (d - mu) * (d - mu);
  var /= static_cast<double>(report.impostor_distances.size() - 1);
  report.inter_mu_hat = mu;
  report.inter_sigma_hat = std::sqrt(var);
  return report;
}

CalibrationResult calibrate_intra_sigma(double target_sigma,
                                        std::size_t probe_users,
                                        std::size_t probe_query_sets,
                                        std::uint64_t seed) {
  if (target_sigma <= 0.0 || probe_users == 0 || probe_query_sets == 0) {
    throw std::invalid_argument("calibrate_intra_sigma: bad parameters");
  }
  const std::size_t feature_dim = 896;
  const unsigned phi = 2;
  const unsigned n = 255;
  const std::size_t captures = 5;
  CohortParams cohort{feature_dim, probe_users, 0.0, seed};

  // Users and their projection matrices stay fixed across the search.
  std::vector<SyntheticUser> users;
  std::vector<ProjectionMatrix> matrices;
  for (std::size_t u = 0; u < probe_users; ++u) {
    users.push_back(make_user(cohort, u));
    matrices.push_back(make_projection(
        mix64(users[u].user_seed ^ kEnrollSeedTag), feature_dim));
  }

  std::size_t evaluations = 0;
  auto measure = [&](double sigma) {
    ++evaluations;
    std::vector<double> distances;
    distances.reserve(probe_users * probe_query_sets);
    for (std::size_t u = 0; u < probe_users; ++u) {
      // Common random numbers: the capture stream restarts identically for
      // every candidate sigma, so the objective is monotone and smooth.
      SplitMixRandom capture_rng(mix64(users[u].user_seed ^ kCaptureTag));
      std::vector<std::vector<double>> enroll_captures;
      for (std::size_t c = 0; c < captures; ++c) {
        enroll_captures.push_back(sample_template(users[u], sigma, capture_rng));
      }
      const EnrollmentString enrollment =
          enroll_string(enroll_captures, matrices[u], phi, n);
      for (std::size_t q = 0; q < probe_query_sets; ++q) {
        const auto query_mean =
            mean_capture(users[u], sigma, captures, capture_rng);
        const auto projected = project(query_mean, matrices[u]);
        BitString query_bits(enrollment.meta.indices.size());
        for (std::size_t p = 0; p < enrollment.meta.indices.size(); ++p) {
          if (projected[enrollment.meta.indices[p]] >= 0.0) {
            query_bits.set(p, true);
          }
        }
        distances.push_back(
            static_cast<double>(query_bits.hamming(enrollment.omega)) /
            static_cast<double>(query_bits.size()));
      }
    }
    return halfnormal_scale(distances);
  };

  double lo = 0.0, hi = 0.05;
  while (measure(hi) < target_sigma && hi < 2.0) hi *= 2.0;
  for (int iter = 0; iter < 24; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (measure(mid) < target_sigma) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  CalibrationResult out;
  out.intra_sigma = 0.5 * (lo + hi);
  out.achieved_sigma_hat = measure(out.intra_sigma);
  out.evaluations = evaluations;
  return out;
}

SeedStudyReport run_seed_study(const SeedStudyConfig& config) {
  if (config.num_users < 2 || config.seeds_per_user < 2) {
    throw std::invalid_argument("run_seed_study: need users and seeds");
  }
  CohortParams cohort{config.feature_dim, config.num_users,
                      config.intra_sigma, config.seed};
  const std::size_t omega_bits = static_cast<std::size_t>(config.phi) * config.n;

  // One fixed capture set per user, re-enrolled under independent seeds.
  std::vector<std::vector<BitString>> omegas(config.num_users);
  for (std::size_t u = 0; u < config.num_users; ++u) {
    const SyntheticUser user = make_user(cohort, u);
    SplitMixRandom capture_rng(mix64(user.user_seed ^ kCaptureTag));
    std::vector<std::vector<double>> captures;
    for (std::size_t c = 0; c < config.captures; ++c) {
      captures.push_back(
          sample_template(user, config.intra_sigma, capture_rng));
    }
    omegas[u].reserve(config.seeds_per_user);
    for (std::size_t s = 0; s < config.seeds_per_user; ++s) {
      const std::uint64_t rp_seed =
          mix64(user.user_seed ^ (kEnrollSeedTag + 1 + s));
      omegas[u].push_back(
          enroll_string(captures, rp_seed, config.phi, config.n).omega);
    }
  }

  SeedStudyReport report;
  std::vector<double> mated_scores;
  report.per_user_mean_distance.resize(config.num_users, 0.0);
  double mated_distance_sum = 0.0;
  for (std::size_t u = 0; u < config.num_users; ++u) {
    double user_sum = 0.0;
    std::size_t user_pairs = 0;
    for (std::size_t a = 0; a < config.seeds_per_user; ++a) {
      for (std::size_t b = a + 1; b < config.seeds_per_user; ++b) {
        const double d =
            static_cast<double>(omegas[u][a].hamming(omegas[u][b])) /
            static_cast<double>(omega_bits);
        mated_scores.push_back(1.0 - d);
        user_sum += d;
        ++user_pairs;
      }
    }
    report.per_user_mean_distance[u] =
        user_sum / static_cast<double>(user_pairs);
    mated_distance_sum += user_sum;
    report.mated_pairs += user_pairs;
  }
  report.mated_mean_distance =
      mated_distance_sum / static_cast<double>(report.mated_pairs);

  std::vector<double> nonmated_scores;
  nonmated_scores.reserve(config.nonmated_samples);
  SplitMixRandom pair_rng(mix64(config.seed ^ kPairTag));
  while (nonmated_scores.size() < config.nonmated_samples) {
    const std::size_t u = pair_rng.below(config.num_users);
    const std::size_t v = pair_rng.below(config.num_users);
    if (u == v) continue;
    const std::size_t a = pair_rng.below(config.seeds_per_user);
    const std::size_t b = pair_rng.below(config.seeds_per_user);
    const double d = static_cast<double>(omegas[u][a].hamming(omegas[v][b])) /
                     static_cast<double>(omega_bits);
    nonmated_scores.push_back(1.0 - d);
  }
  report.nonmated_pairs = nonmated_scores.size();
  report.unlink = unlinkability(mated_scores, nonmated_scores);
  return report;
}

}  // namespace ieco
