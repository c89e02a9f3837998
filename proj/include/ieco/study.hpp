#pragma once

#include <cstdint>
#include <vector>

#include "ieco/analysis.hpp"
#include "ieco/cohort.hpp"

namespace ieco {

// --- Recognition-rate study ---------------------------------------------------
//
// Builds a synthetic cohort, enrolls every user once per code configuration
// (one shared feature->symbol mapping per user, so the code rows see
// identical biometric noise), then replays genuine and cross-user query sets
// through the full scheme.  Fully deterministic under `seed`.
struct SimulationConfig {
  std::size_t feature_dim = 896;
  std::size_t num_users = 16;
  std::size_t enroll_captures = 5;       // captures averaged at enrollment
  std::size_t query_sets_per_user = 10;  // query sets (same capture count)
  double intra_sigma = 0.05;
  unsigned phi = 2;
  unsigned gamma = 128;
  unsigned n = 255;
  std::vector<unsigned> k_values{115, 123, 131, 139, 147};
  std::uint64_t seed = 1;
  // 0 = evaluate every ordered cross-user pair; otherwise cap the count.
  std::size_t max_impostor_attempts = 0;
};

struct SimulationRow {
  unsigned n = 0;
  unsigned k = 0;
  unsigned t = 0;
  FarFrr rates;
};

struct SimulationReport {
  std::vector<SimulationRow> rows;
  std::size_t genuine_attempts = 0;
  std::size_t impostor_attempts = 0;
  // Normalized Hamming distances between enrollment and query bit strings.
  std::vector<double> genuine_distances;
  std::vector<double> impostor_distances;
  double intra_sigma_hat = 0.0;  // half-normal scale: sqrt(mean d^2), genuine
  double inter_mu_hat = 0.0;     // mean impostor distance
  double inter_sigma_hat = 0.0;  // std dev of impostor distance
};

SimulationReport run_far_frr_simulation(const SimulationConfig& config);

// Scalar search over the capture-noise scale so that the genuine-distance
// half-normal scale measured on a probe cohort hits `target_sigma`.
// Monotone in the noise scale, solved by bisection with common random
// numbers across evaluations.
struct CalibrationResult {
  double intra_sigma = 0.0;
  double achieved_sigma_hat = 0.0;
  std::size_t evaluations = 0;
};

CalibrationResult calibrate_intra_sigma(double target_sigma,
                                        std::size_t probe_users,
                                        std::size_t probe_query_sets,
                                        std::uint64_t seed);

// --- Projection-seed study -----------------------------------------------------
//
// Re-enrolls each user's fixed captures under many independent projection
// seeds and compares the resulting bit strings: same-user pairs (mated) give
// the revocability distances; cross-user pairs (non-mated) complete the
// linkability measurement.  Scores are 1 - normalized Hamming distance.
struct SeedStudyConfig {
  std::size_t feature_dim = 896;
  std::size_t num_users = 12;
  std::size_t seeds_per_user = 100;
  std::size_t captures = 5;
  double intra_sigma = 0.05;
  unsigned phi = 2;
  unsigned n = 255;
  std::size_t nonmated_samples = 100000;
  std::uint64_t seed = 1;
};

struct SeedStudyReport {
  UnlinkabilityResult unlink;
  double mated_mean_distance = 0.0;
  std::vector<double> per_user_mean_distance;
  std::size_t mated_pairs = 0;
  std::size_t nonmated_pairs = 0;
};

SeedStudyReport run_seed_study(const SeedStudyConfig& config);

}  // namespace ieco
