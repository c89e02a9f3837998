#include "ieco/pipeline.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ieco/rng.hpp"

namespace {

using ieco::BitString;

std::vector<double> random_features(std::size_t n, ieco::SplitMixRandom& rng) {
  std::vector<double> out(n);
  for (double& v : out) v = 2.0 * rng.unit_double() - 1.0;
  return out;
}

// Naive row-by-row matrix multiply oracle.
std::vector<double> oracle_project(const std::vector<double>& x,
                                   const ieco::ProjectionMatrix& m) {
  std::vector<double> out(m.output_dim, 0.0);
  for (std::size_t j = 0; j < m.output_dim; ++j) {
    for (std::size_t i = 0; i < m.input_dim; ++i) {
      out[j] += m.at(i, j) * x[i];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("projection matrices are seed determined with unit-variance rows") {
  const auto a = ieco::make_projection(77, 64);
  const auto b = ieco::make_projection(77, 64);
  const auto c = ieco::make_projection(78, 64);
  CHECK(a.input_dim == 64);
  CHECK(a.output_dim == 63);
  REQUIRE(a.entries.size() == 64 * 63);
  CHECK(a.entries == b.entries);
  CHECK(a.entries != c.entries);

  // Entries are i.i.d. with variance 1/N; over 4032 samples the empirical
  // variance lands within a few percent.
  double mean = 0.0;
  for (double e : a.entries) mean += e;
  mean /= static_cast<double>(a.entries.size());
  double var = 0.0;
  for (double e : a.entries) var += (e - mean) * (e - mean);
  var /= static_cast<double>(a.entries.size() - 1);
  CHECK(std::abs(mean) < 0.01);
  CHECK(var == doctest::Approx(1.0 / 64).epsilon(0.1));
}

TEST_CASE("project matches the naive oracle") {
  ieco::SplitMixRandom rng(61);
  const auto m = ieco::make_projection(5, 40);
  const auto x = random_features(40, rng);
  const auto fast = ieco::project(x, m);
  const auto slow = oracle_project(x, m);
  REQUIRE(fast.size() == slow.size());
  for (std::size_t j = 0; j < fast.size(); ++j) {
    CHECK(fast[j] == doctest::Approx(slow[j]).epsilon(1e-12));
  }
  CHECK_THROWS_AS(ieco::project(random_features(39, rng), m),
                  std::invalid_argument);
}

TEST_CASE("selected columns reproduce the full projection") {
  ieco::SplitMixRandom rng(62);
  const auto m = ieco::make_projection(9, 50);
  const auto x = random_features(50, rng);
  const auto full = ieco::project(x, m);
  const std::vector<std::uint32_t> indices{0, 7, 13, 48};
  const auto cols = ieco::make_projection_columns(9, 50, indices);
  const auto picked = ieco::project_selected(x, cols);
  REQUIRE(picked.size() == indices.size());
  for (std::size_t c = 0; c < indices.size(); ++c) {
    CHECK(picked[c] == doctest::Approx(full[indices[c]]).epsilon(1e-12));
  }
}

TEST_CASE("binarization follows hand-computed means and variances") {
  // Three captures of four projected values; means and sample variances are
  // small integers by construction.
  const std::vector<std::vector<double>> projected{
      {1.0, -2.0, 0.0, 4.0},
      {3.0, -4.0, 0.0, 1.0},
      {2.0, -3.0, 0.0, 1.0},
  };
  const auto bt = ieco::binarize_mean(projected);
  REQUIRE(bt.bits.size() == 4);
  // Means: 2, -3, 0, 2  ->  bits 1, 0, 1 (zero counts as nonnegative), 1.
  CHECK(bt.bits.get(0));
  CHECK_FALSE(bt.bits.get(1));
  CHECK(bt.bits.get(2));
  CHECK(bt.bits.get(3));
  // Sample variances: 1, 1, 0, 3  ->  reliabilities -1, -1, 0, -3.
  CHECK(bt.reliabilities[0] == doctest::Approx(-1.0));
  CHECK(bt.reliabilities[1] == doctest::Approx(-1.0));
  CHECK(bt.reliabilities[2] == doctest::Approx(0.0));
  CHECK(bt.reliabilities[3] == doctest::Approx(-3.0));
}

TEST_CASE("single capture binarization marks every position equally reliable") {
  const std::vector<std::vector<double>> projected{{0.5, -0.25, 0.0}};
  const auto bt = ieco::binarize_mean(projected);
  CHECK(bt.bits.get(0));
  CHECK_FALSE(bt.bits.get(1));
  CHECK(bt.bits.get(2));
  for (double r : bt.reliabilities) CHECK(r == 0.0);
}

TEST_CASE("reliability selection keeps the steadiest positions in index order") {
  BitString bits(6);
  bits.set(1, true);
  bits.set(4, true);
  bits.set(5, true);
  const std::vector<double> reliability{-3.0, -1.0, -2.0, -1.0, -0.5, -9.0};
  const auto picked = ieco::select_reliable(bits, reliability, 3);
  // Ranking: pos 4 (-0.5), then the -1.0 tie broken toward the lower index
  // (pos 1 before pos 3).  Reported ascending: 1, 3, 4.
  REQUIRE(picked.indices == std::vector<std::uint32_t>{1, 3, 4});
  CHECK(picked.bits.get(0));       // bit at position 1
  CHECK_FALSE(picked.bits.get(1));  // bit at position 3
  CHECK(picked.bits.get(2));       // bit at position 4
  CHECK_THROWS_AS(ieco::select_reliable(bits, reliability, 7),
                  std::invalid_argument);
}

TEST_CASE("apply_indices demands strictly increasing positions in range") {
  BitString bits(10);
  bits.set(2, true);
  bits.set(9, true);
  const std::vector<std::uint32_t> good{2, 5, 9};
  const auto gathered = ieco::apply_indices(bits, good);
  REQUIRE(gathered.size() == 3);
  CHECK(gathered.get(0));
  CHECK_FALSE(gathered.get(1));
  CHECK(gathered.get(2));
  const std::vector<std::uint32_t> repeat{2, 2, 9};
  CHECK_THROWS_AS(ieco::apply_indices(bits, repeat), std::invalid_argument);
  const std::vector<std::uint32_t> unsorted{5, 2, 9};
  CHECK_THROWS_AS(ieco::apply_indices(bits, unsorted), std::invalid_argument);
  const std::vector<std::uint32_t> wide{2, 5, 10};
  CHECK_THROWS_AS(ieco::apply_indices(bits, wide), std::invalid_argument);
}

TEST_CASE("symbol packing is big-endian within each group") {
  BitString bits(6);
  bits.set(0, true);  // group 0: 1,0 -> 0b10
  bits.set(2, true);  // group 1: 1,1 -> 0b11
  bits.set(3, true);
  bits.set(5, true);  // group 2: 0,1 -> 0b01
  const auto s = ieco::form_symbols(bits, 2);
  REQUIRE(s.size() == 3);
  CHECK(s.phi == 2);
  CHECK(s.symbols[0] == 0b10);
  CHECK(s.symbols[1] == 0b11);
  CHECK(s.symbols[2] == 0b01);

  const auto s3 = ieco::form_symbols(bits, 3);
  REQUIRE(s3.size() == 2);
  CHECK(s3.symbols[0] == 0b101);
  CHECK(s3.symbols[1] == 0b101);

  CHECK_THROWS_AS(ieco::form_symbols(bits, 4), std::invalid_argument);
  CHECK_THROWS_AS(ieco::form_symbols(bits, 0), std::invalid_argument);
}

TEST_CASE("symbol packing round trips through symbol_to_bits") {
  ieco::SplitMixRandom rng(63);
  const BitString bits = rng.bits(510);
  const auto s = ieco::form_symbols(bits, 2);
  BitString rebuilt;
  for (std::uint32_t v : s.symbols) {
    rebuilt.append(ieco::symbol_to_bits(v, 2));
  }
  CHECK(rebuilt == bits);
}

TEST_CASE("enrollment and noise-free reproduction agree end to end") {
  ieco::SplitMixRandom rng(64);
  const std::size_t N = 200;
  std::vector<std::vector<double>> captures;
  for (int c = 0; c < 5; ++c) captures.push_back(random_features(N, rng));

  const auto enrollment = ieco::enroll_string(captures, 424242, 2, 31);
  CHECK(enrollment.meta.rp_seed == 424242);
  CHECK(enrollment.meta.input_dim == N);
  CHECK(enrollment.meta.proj_dim == N - 1);
  CHECK(enrollment.meta.phi == 2);
  REQUIRE(enrollment.meta.indices.size() == 62);
  REQUIRE(enrollment.omega.size() == 62);
  REQUIRE(enrollment.symbols.size() == 31);

  // Replaying the very same captures is the zero-noise query.
  const auto replay = ieco::reproduce_string(captures, enrollment.meta);
  CHECK(replay == enrollment.symbols);
}

TEST_CASE("reproduction averages before projecting without changing the answer") {
  ieco::SplitMixRandom rng(65);
  const std::size_t N = 120;
  std::vector<std::vector<double>> captures;
  for (int c = 0; c < 4; ++c) captures.push_back(random_features(N, rng));
  const auto enrollment = ieco::enroll_string(captures, 9, 2, 16);

  // Oracle: project every capture separately, average the projections, then
  // read signs at the enrolled positions.  Linearity makes both equal.
  const auto matrix = ieco::make_projection(9, N);
  std::vector<double> mean_proj(matrix.output_dim, 0.0);
  for (const auto& capture : captures) {
    const auto p = ieco::project(capture, matrix);
    for (std::size_t j = 0; j < p.size(); ++j) mean_proj[j] += p[j];
  }
  for (double& v : mean_proj) v /= 4.0;
  BitString expected_bits(enrollment.meta.indices.size());
  for (std::size_t c = 0; c < enrollment.meta.indices.size(); ++c) {
    if (mean_proj[enrollment.meta.indices[c]] >= 0.0) {
      expected_bits.set(c, true);
    }
  }
  const auto expected = ieco::form_symbols(expected_bits, 2);
  CHECK(ieco::reproduce_string(captures, enrollment.meta) == expected);
}

TEST_CASE("changing the projection seed rerandomizes about half the bits") {
  ieco::SplitMixRandom rng(66);
  const std::size_t N = 896;
  std::vector<std::vector<double>> captures;
  for (int c = 0; c < 3; ++c) captures.push_back(random_features(N, rng));
  const auto a = ieco::enroll_string(captures, 1000, 2, 255);
  const auto b = ieco::enroll_string(captures, 1001, 2, 255);
  const double distance =
      static_cast<double>(a.omega.hamming(b.omega)) / 510.0;
  // Independent projections give Binomial(510, 1/2): sd ~ 0.022.
  CHECK(distance > 0.35);
  CHECK(distance < 0.65);
}

TEST_CASE("enrollment validates its shape budget") {
  ieco::SplitMixRandom rng(67);
  std::vector<std::vector<double>> captures{random_features(20, rng)};
  // phi*n = 62 > proj_dim = 19.
  CHECK_THROWS_AS(ieco::enroll_string(captures, 1, 2, 31),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      ieco::enroll_string(std::vector<std::vector<double>>{}, 1, 2, 31),
      std::invalid_argument);
}
