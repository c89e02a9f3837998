#include "ieco/bch.hpp"

#include <algorithm>
#include <stdexcept>

namespace ieco {

namespace {

// Cyclotomic coset of e modulo n (n = 2^z - 1): {e, 2e, 4e, ...}.
std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t e, std::uint32_t n) {
  std::vector<std::uint32_t> coset;
  std::uint32_t v = e % n;
  do {
    coset.push_back(v);
    v = (2 * v) % n;
  } while (v != e % n);
  return coset;
}

// Minimal polynomial of alpha^e as a binary polynomial (bit i = coeff x^i):
// product of (x - alpha^c) over the cyclotomic coset of e.  The result is
// guaranteed to have GF(2) coefficients.
std::vector<std::uint8_t> minimal_poly(const GaloisField& gf,
                                       std::uint32_t e) {
  const auto coset = cyclotomic_coset(e, gf.order());
  std::vector<std::uint32_t> poly{1};  // coefficients in GF(2^z)
  for (std::uint32_t c : coset) {
    const std::uint32_t root = gf.alpha_pow(c);
    std::vector<std::uint32_t> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] ^= poly[i];                 // x * poly
      next[i] ^= gf.mul(poly[i], root);       // root * poly (GF(2): + == -)
    }
    poly = std::move(next);
  }
  std::vector<std::uint8_t> bits(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly[i] > 1) {
      throw std::logic_error("minimal_poly: non-binary coefficient");
    }
    bits[i] = static_cast<std::uint8_t>(poly[i]);
  }
  return bits;
}

// Product of binary polynomials given as coefficient vectors.
std::vector<std::uint8_t> poly_mul(const std::vector<std::uint8_t>& a,
                                   const std::vector<std::uint8_t>& b) {
  std::vector<std::uint8_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= b[j];
  }
  return out;
}

}  // namespace

BchCode::BchCode(const GaloisField& field, unsigned n, unsigned k, unsigned t,
                 BitString generator)
    : field_(&field), n_(n), k_(k), t_(t), generator_(std::move(generator)) {}

BchCode BchCode::construct(unsigned n, unsigned k) {
  unsigned z = 0;
  for (unsigned d = 3; d <= 16; ++d) {
    if (n == (1u << d) - 1) {
      z = d;
      break;
    }
  }
  if (z == 0) {
    throw std::invalid_argument(
        "BchCode: length must be 2^z - 1 with z in [3, 16]");
  }
  if (k == 0 || k >= n) {
    throw std::invalid_argument("BchCode: dimension must be in (0, n)");
  }
  const GaloisField& gf = GaloisField::standard(z);

  // Grow the generator one designed-t step at a time: roots alpha^1..alpha^2t
  // need the minimal polynomials of the odd exponents 1, 3, ..., 2t-1 (even
  // exponents share cosets with smaller odd ones).  Track the largest t whose
  // generator degree leaves exactly k message bits.
  std::vector<std::uint8_t> gen{1};
  std::vector<bool> covered(n, false);
  unsigned best_t = 0;
  std::vector<std::uint8_t> best_gen;
  for (unsigned t = 1; 2 * t < n; ++t) {
    const std::uint32_t e = 2 * t - 1;
    if (!covered[e % n]) {
      for (std::uint32_t c : cyclotomic_coset(e, n)) covered[c] = true;
      gen = poly_mul(gen, minimal_poly(gf, e));
    }
    const unsigned deg = static_cast<unsigned>(gen.size() - 1);
    if (deg > n - k) break;
    if (deg == n - k) {
      best_t = t;
      best_gen = gen;
    }
  }
  if (best_t == 0) {
    throw std::invalid_argument("BchCode: no (n, k) code with these values");
  }
  BitString gbits(best_gen.size());
  for (std::size_t i = 0; i < best_gen.size(); ++i) {
    if (best_gen[i]) gbits.set(i, true);
  }
  return BchCode(gf, n, k, best_t, std::move(gbits));
}

BitString BchCode::encode(const BitString& message) const {
  if (message.size() != k_) {
    throw std::invalid_argument("BchCode::encode: message size != k");
  }
  const unsigned p = n_ - k_;  // parity bits / generator degree
  // Long division of message * x^p by the generator, CRC-style.
  std::vector<std::uint8_t> rem(p, 0);
  for (unsigned j = k_; j-- > 0;) {
    const std::uint8_t feedback = message.get(j) ^ rem[p - 1];
    for (unsigned i = p; i-- > 1;) rem[i] = rem[i - 1];
    rem[0] = 0;
    if (feedback) {
      for (unsigned i = 0; i < p; ++i) rem[i] ^= generator_.get(i);
    }
  }
  BitString out(n_);
  for (unsigned i = 0; i < p; ++i) {
    if (rem[i]) out.set(i, true);
  }
  for (unsigned j = 0; j < k_; ++j) {
    if (message.get(j)) out.set(p + j, true);
  }
  return out;
}

std::optional<DecodeResult> BchCode::decode(const BitString& word) const {
  if (word.size() != n_) {
    throw std::invalid_argument("BchCode::decode: word size != n");
  }
  const GaloisField& gf = *field_;
  std::vector<std::uint32_t> ones;
  ones.reserve(n_);
  for (unsigned i = 0; i < n_; ++i) {
    if (word.get(i)) ones.push_back(i);
  }
  auto syndromes = [&](const std::vector<std::uint32_t>& positions) {
    std::vector<std::uint32_t> s(2 * t_, 0);
    for (unsigned j = 1; j <= 2 * t_; ++j) {
      std::uint32_t acc = 0;
      for (std::uint32_t i : positions) acc ^= gf.alpha_pow((i * j) % n_);
      s[j - 1] = acc;
    }
    return s;
  };
  const auto syn = syndromes(ones);
  const bool clean =
      std::all_of(syn.begin(), syn.end(), [](std::uint32_t v) { return v == 0; });
  if (clean) {
    return DecodeResult{word.slice(n_ - k_, k_), 0};
  }

  // Berlekamp-Massey: shortest LFSR (error locator Lambda) generating the
  // syndrome sequence.
  std::vector<std::uint32_t> lambda{1}, prev{1};
  unsigned L = 0, shift = 1;
  std::uint32_t prev_d = 1;
  for (unsigned r = 0; r < 2 * t_; ++r) {
    std::uint32_t d = syn[r];
    for (unsigned i = 1; i <= L && i < lambda.size(); ++i) {
      if (lambda[i] && syn[r - i]) d ^= gf.mul(lambda[i], syn[r - i]);
    }
    if (d == 0) {
      ++shift;
      continue;
    }
    const std::uint32_t factor = gf.mul(d, gf.inv(prev_d));
    std::vector<std::uint32_t> next = lambda;
    if (prev.size() + shift > next.size()) next.resize(prev.size() + shift, 0);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      if (prev[i]) next[i + shift] ^= gf.mul(factor, prev[i]);
    }
    if (2 * L <= r) {
      prev = std::move(lambda);
      prev_d = d;
      L = r + 1 - L;
      shift = 1;
    } else {
      ++shift;
    }
    lambda = std::move(next);
  }
  if (L > t_) return std::nullopt;

  // Chien search: position i is in error iff Lambda(alpha^{-i}) == 0.
  std::vector<std::uint32_t> error_positions;
  for (unsigned i = 0; i < n_ && error_positions.size() <= L; ++i) {
    std::uint32_t acc = lambda[0];
    const std::uint32_t x_log = (n_ - i) % n_;  // log of alpha^{-i}
    for (std::size_t j = 1; j < lambda.size(); ++j) {
      if (!lambda[j]) continue;
      const std::uint32_t exp = static_cast<std::uint32_t>(
          (static_cast<std::uint64_t>(x_log) * j) % n_);
      acc ^= gf.mul(lambda[j], gf.alpha_pow(exp));
    }
    if (acc == 0) error_positions.push_back(i);
  }
  if (error_positions.size() != L) return std::nullopt;

  BitString corrected = word;
  std::vector<std::uint32_t> corrected_ones = ones;
  for (std::uint32_t i : error_positions) {
    corrected.flip(i);
    auto it = std::find(corrected_ones.begin(), corrected_ones.end(), i);
    if (it != corrected_ones.end()) {
      corrected_ones.erase(it);
    } else {
      corrected_ones.push_back(i);
    }
  }
  // Bounded-distance recheck: the corrected word must be a genuine codeword,
  // otherwise the locator was spurious.
  const auto post = syndromes(corrected_ones);
  for (std::uint32_t v : post) {
    if (v != 0) return std::nullopt;
  }
  return DecodeResult{corrected.slice(n_ - k_, k_), L};
}

}  // namespace ieco
