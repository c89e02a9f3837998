#include "ieco/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ieco/rng.hpp"

namespace ieco {

namespace {

double entry_value(std::uint64_t seed, std::size_t input_dim, std::size_t i,
                   std::size_t j, double scale) {
  return gaussian_at(seed, static_cast<std::uint64_t>(j) * input_dim + i) *
         scale;
}

std::vector<double> mean_features(
    std::span<const std::vector<double>> templates, std::size_t input_dim) {
  if (templates.empty()) {
    throw std::invalid_argument("pipeline: need at least one template");
  }
  std::vector<double> mean(input_dim, 0.0);
  for (const auto& t : templates) {
    if (t.size() != input_dim) {
      throw std::invalid_argument("pipeline: template dimension mismatch");
    }
    for (std::size_t i = 0; i < input_dim; ++i) mean[i] += t[i];
  }
  const double inv = 1.0 / static_cast<double>(templates.size());
  for (double& v : mean) v *= inv;
  return mean;
}

}  // namespace

ProjectionMatrix make_projection(std::uint64_t seed, std::size_t input_dim) {
  if (input_dim < 2) {
    throw std::invalid_argument("make_projection: input_dim must be >= 2");
  }
  ProjectionMatrix m;
  m.seed = seed;
  m.input_dim = input_dim;
  m.output_dim = input_dim - 1;
  m.entries.resize(m.input_dim * m.output_dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(input_dim));
  for (std::size_t j = 0; j < m.output_dim; ++j) {
    for (std::size_t i = 0; i < input_dim; ++i) {
      m.entries[j * input_dim + i] = entry_value(seed, input_dim, i, j, scale);
    }
  }
  return m;
}

std::vector<double> project(std::span<const double> features,
                            const ProjectionMatrix& matrix) {
  if (features.size() != matrix.input_dim) {
    throw std::invalid_argument("project: feature dimension mismatch");
  }
  std::vector<double> out(matrix.output_dim, 0.0);
  for (std::size_t j = 0; j < matrix.output_dim; ++j) {
    const double* col = matrix.entries.data() + j * matrix.input_dim;
    double acc = 0.0;
    for (std::size_t i = 0; i < matrix.input_dim; ++i) {
      acc += features[i] * col[i];
    }
    out[j] = acc;
  }
  return out;
}

ProjectionColumns make_projection_columns(
    std::uint64_t seed, std::size_t input_dim,
    std::span<const std::uint32_t> indices) {
  ProjectionColumns c;
  c.seed = seed;
  c.input_dim = input_dim;
  c.indices.assign(indices.begin(), indices.end());
  c.entries.resize(indices.size() * input_dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(input_dim));
  for (std::size_t col = 0; col < indices.size(); ++col) {
    const std::size_t j = indices[col];
    for (std::size_t i = 0; i < input_dim; ++i) {
      c.entries[col * input_dim + i] = entry_value(seed, input_dim, i, j, scale);
    }
  }
  return c;
}

std::vector<double> project_selected(std::span<const double> features,
                                     const ProjectionColumns& columns) {
  if (features.size() != columns.input_dim) {
    throw std::invalid_argument("project_selected: dimension mismatch");
  }
  std::vector<double> out(columns.indices.size(), 0.0);
  for (std::size_t c = 0; c < columns.indices.size(); ++c) {
    const double* col = columns.entries.data() + c * columns.input_dim;
    double acc = 0.0;
    for (std::size_t i = 0; i < columns.input_dim; ++i) {
      acc += features[i] * col[i];
    }
    out[c] = acc;
  }
  return out;
}

BinarizedTemplate binarize_mean(
    std::span<const std::vector<double>> projected) {
  if (projected.empty()) {
    throw std::invalid_argument("binarize_mean: need at least one vector");
  }
  const std::size_t dim = projected.front().size();
  for (const auto& v : projected) {
    if (v.size() != dim) {
      throw std::invalid_argument("binarize_mean: dimension mismatch");
    }
  }
  const std::size_t m = projected.size();
  BinarizedTemplate out;
  out.bits = BitString(dim);
  out.reliabilities.assign(dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) {
    double mean = 0.0;
    for (std::size_t s = 0; s < m; ++s) mean += projected[s][j];
    mean /= static_cast<double>(m);
    if (mean >= 0.0) out.bits.set(j, true);
    if (m > 1) {
      double ss = 0.0;
      for (std::size_t s = 0; s < m; ++s) {
        const double d = projected[s][j] - mean;
        ss += d * d;
      }
      out.reliabilities[j] = -ss / static_cast<double>(m - 1);
    }
  }
  return out;
}

ReliableString select_reliable(const BitString& bits,
                               std::span<const double> reliabilities,
                               std::size_t count) {
  if (bits.size() != reliabilities.size()) {
    throw std::invalid_argument("select_reliable: size mismatch");
  }
  if (count > bits.size()) {
    throw std::invalid_argument("select_reliable: count exceeds positions");
  }
  std::vector<std::uint32_t> order(bits.size());
  std::iota(order.begin(), order.end(), 0u);
  // Highest reliability first; equal scores resolved toward lower index.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     return reliabilities[a] > reliabilities[b];
                   });
  order.resize(count);
  std::sort(order.begin(), order.end());
  ReliableString out;
  out.indices = std::move(order);
  out.bits = apply_indices(bits, out.indices);
  return out;
}

BitString apply_indices(const BitString& bits,
                        std::span<const std::uint32_t> indices) {
  BitString out(indices.size());
  std::uint32_t prev = 0;
  for (std::size_t p = 0; p < indices.size(); ++p) {
    if (p > 0 && indices[p] <= prev) {
      throw std::invalid_argument("apply_indices: not strictly increasing");
    }
    prev = indices[p];
    if (indices[p] >= bits.size()) {
      throw std::invalid_argument("apply_indices: index out of range");
    }
    if (bits.get(indices[p])) out.set(p, true);
  }
  return out;
}

SymbolString form_symbols(const BitString& bits, unsigned phi) {
  if (phi == 0 || phi > 20) {
    throw std::invalid_argument("form_symbols: phi must be in [1, 20]");
  }
  if (bits.size() % phi != 0) {
    throw std::invalid_argument("form_symbols: size not a multiple of phi");
  }
  SymbolString out;
  out.phi = phi;
  out.symbols.resize(bits.size() / phi);
  for (std::size_t g = 0; g < out.symbols.size(); ++g) {
    std::uint32_t v = 0;
    for (unsigned b = 0; b < phi; ++b) {
      v = (v << 1) | static_cast<std::uint32_t>(bits.get(g * phi + b));
    }
    out.symbols[g] = v;
  }
  return out;
}

EnrollmentString enroll_string(std::span<const std::vector<double>> templates,
                               std::uint64_t rp_seed, unsigned phi,
                               unsigned n) {
  if (templates.empty()) {
    throw std::invalid_argument("enroll_string: need templates");
  }
  const ProjectionMatrix matrix =
      make_projection(rp_seed, templates.front().size());
  return enroll_string(templates, matrix, phi, n);
}

EnrollmentString enroll_string(std::span<const std::vector<double>> templates,
                               const ProjectionMatrix& matrix, unsigned phi,
                               unsigned n) {
  if (templates.empty()) {
    throw std::invalid_argument("enroll_string: need templates");
  }
  const std::size_t input_dim = templates.front().size();
  const std::size_t needed = static_cast<std::size_t>(phi) * n;
  if (input_dim != matrix.input_dim) {
    throw std::invalid_argument("enroll_string: matrix dimension mismatch");
  }
  if (input_dim < 2 || needed > input_dim - 1) {
    throw std::invalid_argument(
        "enroll_string: phi*n exceeds projected dimension");
  }
  std::vector<std::vector<double>> projected;
  projected.reserve(templates.size());
  for (const auto& t : templates) projected.push_back(project(t, matrix));
  const BinarizedTemplate binarized = binarize_mean(projected);
  ReliableString reliable =
      select_reliable(binarized.bits, binarized.reliabilities, needed);

  EnrollmentString out;
  out.meta.rp_seed = matrix.seed;
  out.meta.input_dim = input_dim;
  out.meta.proj_dim = matrix.output_dim;
  out.meta.phi = phi;
  out.meta.indices = std::move(reliable.indices);
  out.omega = std::move(reliable.bits);
  out.symbols = form_symbols(out.omega, phi);
  return out;
}

SymbolString reproduce_string(std::span<const std::vector<double>> templates,
                              const PipelineMeta& meta,
                              const ProjectionColumns& columns) {
  const auto mean = mean_features(templates, meta.input_dim);
  const auto values = project_selected(mean, columns);
  BitString bits(values.size());
  for (std::size_t p = 0; p < values.size(); ++p) {
    if (values[p] >= 0.0) bits.set(p, true);
  }
  return form_symbols(bits, meta.phi);
}

SymbolString reproduce_string(std::span<const std::vector<double>> templates,
                              const PipelineMeta& meta) {
  const ProjectionColumns columns =
      make_projection_columns(meta.rp_seed, meta.input_dim, meta.indices);
  return reproduce_string(templates, meta, columns);
}

}  // namespace ieco
