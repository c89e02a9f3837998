#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ieco/bits.hpp"
#include "ieco/scheme.hpp"

namespace ieco {

// Seeded Gaussian random projection from N features to K = N - 1 outputs.
// Entry (i, j) multiplies input feature i into output j; entries are i.i.d.
// mean zero with variance 1/N, derived deterministically from the seed via
// the keyed counter stream (entry stream index j*N + i), so any enrollment
// can rebuild its exact matrix from the stored 64-bit seed.
struct ProjectionMatrix {
  std::uint64_t seed = 0;
  std::size_t input_dim = 0;   // N
  std::size_t output_dim = 0;  // K = N - 1
  std::vector<double> entries;  // column-major: entries[j*N + i]

  double at(std::size_t i, std::size_t j) const {
    return entries[j * input_dim + i];
  }
};

ProjectionMatrix make_projection(std::uint64_t seed, std::size_t input_dim);

// features.size() must equal input_dim; returns K projected values.
std::vector<double> project(std::span<const double> features,
                            const ProjectionMatrix& matrix);

// Only the selected output columns, column-major — the cheap path when an
// evaluation loop replays many queries against one enrollment.
struct ProjectionColumns {
  std::uint64_t seed = 0;
  std::size_t input_dim = 0;
  std::vector<std::uint32_t> indices;
  std::vector<double> entries;  // entries[c*input_dim + i] for column c
};

ProjectionColumns make_projection_columns(std::uint64_t seed,
                                          std::size_t input_dim,
                                          std::span<const std::uint32_t> indices);
std::vector<double> project_selected(std::span<const double> features,
                                     const ProjectionColumns& columns);

// Majority sign of per-position means over M projected vectors, plus a
// reliability score per position: the negated sample variance (ties at the
// top are broken by lower index), so positions whose projections barely move
// across repeated captures rank highest.  With M = 1 all reliabilities are 0.
struct BinarizedTemplate {
  BitString bits;                      // bit j = (mean_j >= 0)
  std::vector<double> reliabilities;   // -(sample variance), size K
};

BinarizedTemplate binarize_mean(
    std::span<const std::vector<double>> projected);

// Picks `count` positions with the highest reliability (ties toward lower
// index); indices are reported in increasing order and bits gathered in that
// order.
struct ReliableString {
  BitString bits;
  std::vector<std::uint32_t> indices;  // strictly increasing
};

ReliableString select_reliable(const BitString& bits,
                               std::span<const double> reliabilities,
                               std::size_t count);

// Gathers bits at the given strictly-increasing positions.
BitString apply_indices(const BitString& bits,
                        std::span<const std::uint32_t> indices);

// Packs consecutive phi-bit groups into symbols (first bit of each group is
// the symbol's MSB); bits.size() must be a multiple of phi.
SymbolString form_symbols(const BitString& bits, unsigned phi);

// Everything needed to replay the feature -> symbol mapping of one
// enrollment.  Public by design.
struct PipelineMeta {
  std::uint64_t rp_seed = 0;
  std::size_t input_dim = 0;
  std::size_t proj_dim = 0;
  unsigned phi = 0;
  std::vector<std::uint32_t> indices;
};

// Enrollment: projects each of the M templates, binarizes by mean sign,
// selects the phi*n most reliable positions, and packs symbols.
struct EnrollmentString {
  SymbolString symbols;
  PipelineMeta meta;
  BitString omega;  // the phi*n selected bits
};

EnrollmentString enroll_string(std::span<const std::vector<double>> templates,
                               std::uint64_t rp_seed, unsigned phi,
                               unsigned n);
// Same, reusing an already materialized matrix (matrix.seed is recorded).
EnrollmentString enroll_string(std::span<const std::vector<double>> templates,
                               const ProjectionMatrix& matrix, unsigned phi,
                               unsigned n);

// Query-side replay: averages the M query templates feature-wise, projects
// the mean once (linearity makes this equal to averaging M projections),
// and reads signs at the enrolled positions.
SymbolString reproduce_string(std::span<const std::vector<double>> templates,
                              const PipelineMeta& meta);
// Same, against prebuilt columns for meta.indices.
SymbolString reproduce_string(std::span<const std::vector<double>> templates,
                              const PipelineMeta& meta,
                              const ProjectionColumns& columns);

}  // namespace ieco
