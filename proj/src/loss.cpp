#include "ieco/loss.hpp"

#include <cmath>
#include <stdexcept>

namespace ieco {

namespace {

void check_dims(std::span<const double> a, std::span<const double> b,
                std::span<const double> c) {
  if (a.size() != b.size() || a.size() != c.size() || a.empty()) {
    throw std::invalid_argument("loss: vectors must share a nonzero size");
  }
}

double euclidean(std::span<const double> a, std::span<const double> b) {
  double ss = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    ss += d * d;
  }
  return std::sqrt(ss);
}

double inner(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace

double triplet_loss(std::span<const double> u, std::span<const double> u_pos,
                    std::span<const double> v, double delta) {
  check_dims(u, u_pos, v);
  const double raw = euclidean(u, u_pos) - euclidean(u, v) + delta;
  return raw > 0.0 ? raw : 0.0;
}

double randomness_penalty(std::span<const double> u,
                          std::span<const double> v) {
  if (u.size() != v.size() || u.empty()) {
    throw std::invalid_argument("loss: vectors must share a nonzero size");
  }
  return std::fabs(inner(u, v));
}

double combined_loss(std::span<const double> u, std::span<const double> u_pos,
                     std::span<const double> v, double alpha, double beta,
                     double delta) {
  check_dims(u, u_pos, v);
  const double raw = alpha * euclidean(u, u_pos) - euclidean(u, v) +
                     beta * std::fabs(inner(u, v)) + delta;
  return raw > 0.0 ? raw : 0.0;
}

LossGradients combined_loss_gradient(std::span<const double> u,
                                     std::span<const double> u_pos,
                                     std::span<const double> v, double alpha,
                                     double beta, double delta) {
  check_dims(u, u_pos, v);
  const std::size_t dim = u.size();
  LossGradients g;
  g.d_u.assign(dim, 0.0);
  g.d_u_pos.assign(dim, 0.0);
  g.d_v.assign(dim, 0.0);

  const double d_pos = euclidean(u, u_pos);
  const double d_neg = euclidean(u, v);
  const double ip = inner(u, v);
  const double raw = alpha * d_pos - d_neg + beta * std::fabs(ip) + delta;
  if (raw <= 0.0) return g;  // clamp active: zero gradient

  const double s = sign_of(ip);
  for (std::size_t i = 0; i < dim; ++i) {
    double du = 0.0;
    if (d_pos > 0.0) du += alpha * (u[i] - u_pos[i]) / d_pos;
    if (d_neg > 0.0) du -= (u[i] - v[i]) / d_neg;
    du += beta * s * v[i];
    g.d_u[i] = du;

    g.d_u_pos[i] = d_pos > 0.0 ? -alpha * (u[i] - u_pos[i]) / d_pos : 0.0;

    double dv = 0.0;
    if (d_neg > 0.0) dv += (u[i] - v[i]) / d_neg;
    dv += beta * s * u[i];
    g.d_v[i] = dv;
  }
  return g;
}

}  // namespace ieco
