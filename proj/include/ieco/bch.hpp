#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ieco/bits.hpp"
#include "ieco/galois.hpp"

namespace ieco {

struct DecodeResult {
  BitString message;   // k bits
  unsigned corrected;  // number of bit positions flipped (0..t)
};

// Systematic binary BCH code of length n = 2^z - 1.
//
// Codewords are polynomials with bit i of the BitString holding the
// coefficient of x^i.  Encoding places the k message bits in the high-order
// positions [n-k, n) and the n-k parity bits in [0, n-k).  Decoding is
// bounded-distance: syndromes, Berlekamp-Massey, Chien search, and a final
// recheck that the corrected word is a codeword; anything outside radius t
// yields std::nullopt (or, for some inputs, a different valid message -
// never a silent wrong answer presented as the transmitted one).
//
// Instances are immutable after construction and safe to share across
// threads.
class BchCode {
 public:
  // Builds the (n, k) code over the standard field for z = log2(n+1) and
  // derives the error-correcting capability t from the generator structure
  // (largest designed t whose generator leaves exactly k message bits).
  // Throws std::invalid_argument when n is not 2^z - 1 for z in [3, 16] or
  // no such code exists (including the degenerate k = n).
  static BchCode construct(unsigned n, unsigned k);

  unsigned n() const { return n_; }
  unsigned k() const { return k_; }
  unsigned t() const { return t_; }
  const GaloisField& field() const { return *field_; }
  // Generator polynomial, degree n - k, bit i = coefficient of x^i.
  const BitString& generator() const { return generator_; }

  // message.size() must equal k.
  BitString encode(const BitString& message) const;
  // word.size() must equal n.
  std::optional<DecodeResult> decode(const BitString& word) const;

 private:
  BchCode(const GaloisField& field, unsigned n, unsigned k, unsigned t,
          BitString generator);

  const GaloisField* field_;
  unsigned n_, k_, t_;
  BitString generator_;
};

}  // namespace ieco
