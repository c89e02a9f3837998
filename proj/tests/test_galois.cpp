#include "ieco/galois.hpp"

#include <cstdint>
#include <stdexcept>

#include "doctest.h"

namespace {

// Independent oracle: carry-less multiply then reduce by the defining
// polynomial, one shift at a time.  No tables involved.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, unsigned degree,
                       std::uint32_t poly) {
  std::uint64_t acc = 0;
  for (unsigned i = 0; i < 32; ++i) {
    if ((b >> i) & 1u) acc ^= static_cast<std::uint64_t>(a) << i;
  }
  for (int bit = 62; bit >= static_cast<int>(degree); --bit) {
    if ((acc >> bit) & 1u) {
      acc ^= static_cast<std::uint64_t>(poly) << (bit - degree);
    }
  }
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

TEST_CASE("degree-4 field multiplication matches the shift-reduce oracle") {
  const ieco::GaloisField gf(4, 0x13);  // x^4 + x + 1
  for (std::uint32_t a = 0; a < 16; ++a) {
    for (std::uint32_t b = 0; b < 16; ++b) {
      CHECK(gf.mul(a, b) == slow_mul(a, b, 4, 0x13));
    }
  }
}

TEST_CASE("degree-8 field multiplication matches the oracle on a sample") {
  const auto& gf = ieco::GaloisField::standard(8);
  const std::uint32_t poly = gf.primitive_poly();
  for (std::uint32_t a = 1; a < 256; a += 7) {
    for (std::uint32_t b = 1; b < 256; b += 11) {
      CHECK(gf.mul(a, b) == slow_mul(a, b, 8, poly));
    }
  }
  CHECK(gf.mul(0, 37) == 0);
  CHECK(gf.mul(37, 0) == 0);
}

TEST_CASE("power table walks the full multiplicative group") {
  const auto& gf = ieco::GaloisField::standard(4);
  CHECK(gf.order() == 15);
  CHECK(gf.alpha_pow(0) == 1);
  // alpha^e must be exactly the e-fold product of alpha.
  std::uint32_t acc = 1;
  for (std::uint32_t e = 0; e < gf.order(); ++e) {
    CHECK(gf.alpha_pow(e) == acc);
    acc = slow_mul(acc, 2, 4, 0x13);
  }
  CHECK(acc == 1);  // closes the cycle after exactly `order` steps
}

TEST_CASE("log inverts alpha_pow on every nonzero element") {
  for (unsigned degree : {3u, 4u, 8u, 10u}) {
    const auto& gf = ieco::GaloisField::standard(degree);
    for (std::uint32_t v = 1; v <= gf.order(); ++v) {
      CHECK(gf.alpha_pow(gf.log(v)) == v);
    }
  }
}

TEST_CASE("inv gives multiplicative inverses") {
  for (unsigned degree : {4u, 8u}) {
    const auto& gf = ieco::GaloisField::standard(degree);
    for (std::uint32_t v = 1; v <= gf.order(); ++v) {
      CHECK(gf.mul(v, gf.inv(v)) == 1);
    }
  }
}

TEST_CASE("non-primitive and malformed polynomials are rejected") {
  // x^4 + x^3 + x^2 + x + 1 is irreducible but its root has order 5, so the
  // power walk cannot cover all 15 nonzero elements.
  CHECK_THROWS_AS(ieco::GaloisField(4, 0x1f), std::invalid_argument);
  // x^4 + x^2 + 1 is reducible; the walk collapses early.
  CHECK_THROWS_AS(ieco::GaloisField(4, 0x15), std::invalid_argument);
  // Degree bit absent or extra high bits present.
  CHECK_THROWS_AS(ieco::GaloisField(4, 0x03), std::invalid_argument);
  CHECK_THROWS_AS(ieco::GaloisField(4, 0x23), std::invalid_argument);
  // Degree outside the supported range.
  CHECK_THROWS_AS(ieco::GaloisField(2, 0x7), std::invalid_argument);
  CHECK_THROWS_AS(ieco::GaloisField(17, 0x2001b), std::invalid_argument);
}

TEST_CASE("every supported degree has a working default field") {
  for (unsigned degree = 3; degree <= 16; ++degree) {
    const std::uint32_t poly = ieco::GaloisField::default_primitive_poly(degree);
    CHECK(((poly >> degree) & 1u) == 1u);     // monic of the right degree
    CHECK((poly >> (degree + 1)) == 0u);      // no higher terms
    CHECK((poly & 1u) == 1u);                 // constant term present
    const auto& gf = ieco::GaloisField::standard(degree);
    CHECK(gf.order() == (1u << degree) - 1);
    CHECK(gf.primitive_poly() == poly);
    // Spot-check consistency against the oracle.
    CHECK(gf.mul(3, 5) == slow_mul(3, 5, degree, poly));
  }
}
