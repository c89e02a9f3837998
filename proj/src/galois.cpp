#include "ieco/galois.hpp"

#include <map>
#include <memory>
#include <stdexcept>

namespace ieco {

namespace {

// One primitive polynomial per degree, from the standard tables used
// throughout coding practice (bit i = coefficient of x^i).
constexpr std::uint32_t kDefaultPoly[17] = {
    0,     0,     0,
    0x0b,    // z=3:  x^3 + x + 1
    0x13,    // z=4:  x^4 + x + 1
    0x25,    // z=5:  x^5 + x^2 + 1
    0x43,    // z=6:  x^6 + x + 1
    0x89,    // z=7:  x^7 + x^3 + 1
    0x11d,   // z=8:  x^8 + x^4 + x^3 + x^2 + 1
    0x211,   // z=9:  x^9 + x^4 + 1
    0x409,   // z=10: x^10 + x^3 + 1
    0x805,   // z=11: x^11 + x^2 + 1
    0x1053,  // z=12: x^12 + x^6 + x^4 + x + 1
    0x201b,  // z=13: x^13 + x^4 + x^3 + x + 1
    0x4443,  // z=14: x^14 + x^10 + x^6 + x + 1
    0x8003,  // z=15: x^15 + x + 1
    0x1100b  // z=16: x^16 + x^12 + x^3 + x + 1
};

}  // namespace

GaloisField::GaloisField(unsigned degree, std::uint32_t primitive_poly)
    : degree_(degree), poly_(primitive_poly) {
  if (degree < 3 || degree > 16) {
    throw std::invalid_argument("GaloisField: degree must be in [3, 16]");
  }
  const std::uint32_t top = std::uint32_t{1} << degree;
  if ((primitive_poly & top) == 0 || primitive_poly >= (top << 1)) {
    throw std::invalid_argument("GaloisField: polynomial degree mismatch");
  }
  order_ = top - 1;
  alog_.assign(order_, 0);
  log_.assign(top, 0);

  // Walk alpha^e by shift-and-reduce.  A primitive polynomial visits every
  // nonzero element exactly once before returning to 1.
  std::vector<bool> seen(top, false);
  std::uint32_t v = 1;
  for (std::uint32_t e = 0; e < order_; ++e) {
    if (v == 0 || seen[v]) {
      throw std::invalid_argument(
          "GaloisField: polynomial is not primitive (short cycle)");
    }
    seen[v] = true;
    alog_[e] = v;
    log_[v] = e;
    v <<= 1;
    if (v & top) v ^= primitive_poly;
  }
  if (v != 1) {
    throw std::invalid_argument(
        "GaloisField: polynomial is not primitive (open cycle)");
  }
}

std::uint32_t GaloisField::default_primitive_poly(unsigned degree) {
  if (degree < 3 || degree > 16) {
    throw std::invalid_argument("GaloisField: degree must be in [3, 16]");
  }
  return kDefaultPoly[degree];
}

const GaloisField& GaloisField::standard(unsigned degree) {
  // Built once for every supported degree; magic-static init keeps shared
  // lookups safe without locking.
  static const auto cache = [] {
    std::map<unsigned, std::unique_ptr<GaloisField>> m;
    for (unsigned z = 3; z <= 16; ++z) {
      m.emplace(z, std::make_unique<GaloisField>(z, kDefaultPoly[z]));
    }
    return m;
  }();
  auto it = cache.find(degree);
  if (it == cache.end()) {
    throw std::invalid_argument("GaloisField: degree must be in [3, 16]");
  }
  return *it->second;
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) throw std::invalid_argument("GaloisField::inv: zero");
  const std::uint32_t e = log_[a];
  return alog_[e == 0 ? 0 : order_ - e];
}

}  // namespace ieco
