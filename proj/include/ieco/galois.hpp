#pragma once

#include <cstdint>
#include <vector>

namespace ieco {

// GF(2^z) built from an explicit primitive polynomial, with log/antilog
// tables over the multiplicative group generated by alpha = x.
//
// Polynomials are encoded as integers with bit i holding the coefficient of
// x^i, so e.g. x^4 + x + 1 is 0b10011 = 19.
class GaloisField {
 public:
  // Degrees 3..16 are supported.  Throws std::invalid_argument when the
  // polynomial has the wrong degree or fails to generate the full
  // multiplicative group (i.e. is not primitive).
  GaloisField(unsigned degree, std::uint32_t primitive_poly);

  // Field over the default primitive polynomial for this degree (shared,
  // lazily constructed instance).
  static const GaloisField& standard(unsigned degree);
  static std::uint32_t default_primitive_poly(unsigned degree);

  unsigned degree() const { return degree_; }
  std::uint32_t primitive_poly() const { return poly_; }
  // Size of the multiplicative group: 2^degree - 1.
  std::uint32_t order() const { return order_; }

  // alpha^e for e in [0, order); table lookup.
  std::uint32_t alpha_pow(std::uint32_t e) const { return alog_[e]; }
  // Discrete log of a nonzero element.
  std::uint32_t log(std::uint32_t a) const { return log_[a]; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= order_) s -= order_;
    return alog_[s];
  }
  std::uint32_t inv(std::uint32_t a) const;

 private:
  unsigned degree_;
  std::uint32_t poly_;
  std::uint32_t order_;
  std::vector<std::uint32_t> alog_;  // alog_[e] = alpha^e, e in [0, order)
  std::vector<std::uint32_t> log_;   // log_[alog_[e]] = e; log_[0] unused
};

}  // namespace ieco
