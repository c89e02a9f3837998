#pragma once

#include <span>
#include <vector>

namespace ieco {

// Training objective for feature embeddings that should be stable per user,
// separated across users, and near-orthogonal across users:
//
//   triplet(u, u', v)  = max(||u - u'|| - ||u - v|| + delta, 0)
//   randomness(u, v)   = |<u, v>|
//   combined           = max(alpha*||u - u'|| - ||u - v|| + beta*|<u, v>| + delta, 0)
//
// u: anchor, u': same-user positive, v: other-user negative.  Defaults for
// the weights at the tuned operating point: alpha = 1.2, beta = 0.9.
//
// Subgradient conventions at the kinks: a zero-length difference contributes
// a zero vector, sign(0) = 0, and a clamped (inactive) loss has zero
// gradient everywhere.

double triplet_loss(std::span<const double> u, std::span<const double> u_pos,
                    std::span<const double> v, double delta);

double randomness_penalty(std::span<const double> u, std::span<const double> v);

double combined_loss(std::span<const double> u, std::span<const double> u_pos,
                     std::span<const double> v, double alpha, double beta,
                     double delta);

struct LossGradients {
  std::vector<double> d_u;
  std::vector<double> d_u_pos;
  std::vector<double> d_v;
};

LossGradients combined_loss_gradient(std::span<const double> u,
                                     std::span<const double> u_pos,
                                     std::span<const double> v, double alpha,
                                     double beta, double delta);

inline constexpr double kDefaultAlpha = 1.2;
inline constexpr double kDefaultBeta = 0.9;

}  // namespace ieco
