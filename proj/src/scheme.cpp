#include "ieco/scheme.hpp"

#include <stdexcept>

namespace ieco {

namespace {

void check_inputs(const SymbolString& s, const BchCode& code) {
  if (s.phi == 0 || s.phi > 20) {
    throw std::invalid_argument("symbol width must be in [1, 20]");
  }
  if (s.symbols.size() != code.n()) {
    throw std::invalid_argument("symbol count must equal code length");
  }
  const std::uint32_t limit = std::uint32_t{1} << s.phi;
  for (std::uint32_t v : s.symbols) {
    if (v >= limit) throw std::invalid_argument("symbol out of range");
  }
}

}  // namespace

BitString symbol_to_bits(std::uint32_t symbol, unsigned phi) {
  BitString out(phi);
  for (unsigned b = 0; b < phi; ++b) {
    if ((symbol >> (phi - 1 - b)) & 1u) out.set(b, true);
  }
  return out;
}

EcoEnrollment eco_generate(const SymbolString& s, const BchCode& code,
                           unsigned gamma, RandomSource& rng) {
  check_inputs(s, code);
  EcoEnrollment out;
  out.message = rng.bits(code.k());
  const BitString codeword = code.encode(out.message);
  out.points.reserve(code.n());
  const std::uint64_t alphabet = std::uint64_t{1} << s.phi;
  for (unsigned i = 0; i < code.n(); ++i) {
    const std::uint32_t locked =
        codeword.get(i)
            ? s.symbols[i]
            : static_cast<std::uint32_t>(rng.below(alphabet));  // may collide
    out.points.push_back(op_lock(symbol_to_bits(locked, s.phi), gamma, rng));
  }
  return out;
}

BitString recover_codeword(const SymbolString& query,
                           std::span<const LockedPoint> points, unsigned n) {
  if (points.size() != n || query.symbols.size() != n) {
    throw std::invalid_argument("recover_codeword: length mismatch");
  }
  BitString estimate(n);
  for (unsigned i = 0; i < n; ++i) {
    if (op_unlock(symbol_to_bits(query.symbols[i], query.phi), points[i])) {
      estimate.set(i, true);
    }
  }
  return estimate;
}

std::optional<BitString> eco_reproduce(const SymbolString& query,
                                       std::span<const LockedPoint> points,
                                       const BchCode& code) {
  check_inputs(query, code);
  const BitString estimate = recover_codeword(query, points, code.n());
  auto decoded = code.decode(estimate);
  if (!decoded) return std::nullopt;
  return decoded->message;
}

IecoEnrollment ieco_generate(const SymbolString& s, const BchCode& code,
                             unsigned gamma, RandomSource& rng,
                             std::size_t key_bits) {
  check_inputs(s, code);
  if (key_bits == 0) key_bits = code.k();
  IecoEnrollment out;
  const BitString message = rng.bits(code.k());
  const BitString codeword = code.encode(message);
  out.points.reserve(code.n());
  const std::uint64_t alphabet = std::uint64_t{1} << s.phi;
  for (unsigned i = 0; i < code.n(); ++i) {
    std::uint32_t locked = s.symbols[i];
    if (!codeword.get(i)) {
      // Chaff drawn from the alphabet minus the biometric symbol, so a
      // noise-free query can never spuriously open a chaff point.
      std::uint32_t r = static_cast<std::uint32_t>(rng.below(alphabet - 1));
      if (r >= s.symbols[i]) ++r;
      locked = r;
    }
    out.points.push_back(op_lock(symbol_to_bits(locked, s.phi), gamma, rng));
  }
  out.key = rng.bits(key_bits);
  out.key_locker = d_lock(message, out.key, gamma, rng);
  return out;
}

std::optional<BitString> ieco_reproduce(const SymbolString& query,
                                        std::span<const LockedPoint> points,
                                        const LockedPoint& key_locker,
                                        const BchCode& code, unsigned gamma) {
  check_inputs(query, code);
  const BitString estimate = recover_codeword(query, points, code.n());
  auto decoded = code.decode(estimate);
  if (!decoded) return std::nullopt;
  // Wrong decoded messages and decode failures are indistinguishable to the
  // caller; the key locker's check bits gate both.
  return d_unlock(decoded->message, key_locker, gamma);
}

std::optional<BitString> ieco_reproduce(const SymbolString& query,
                                        const HelperData& helper,
                                        const BchCode& code) {
  if (helper.n != code.n() || helper.k != code.k() ||
      helper.phi != query.phi) {
    throw std::invalid_argument("ieco_reproduce: helper/code mismatch");
  }
  return ieco_reproduce(query, helper.points, helper.key_locker, code,
                        helper.gamma);
}

}  // namespace ieco
