#include "ieco/bits.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "ieco/rng.hpp"

namespace {

using ieco::BitString;

// Reference model: a plain vector<int> of 0/1 values with naive algorithms.
// Every packed-representation result below is checked against this model.
struct Model {
  std::vector<int> bits;

  static Model random(std::size_t n, ieco::SplitMixRandom& rng) {
    Model m;
    m.bits.resize(n);
    for (auto& b : m.bits) b = static_cast<int>(rng.raw_next() & 1);
    return m;
  }

  BitString build() const {
    BitString out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i]) out.set(i, true);
    }
    return out;
  }

  std::vector<std::uint8_t> packed_bytes() const {
    std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i]) out[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
    }
    return out;
  }

  std::size_t ones() const {
    std::size_t c = 0;
    for (int b : bits) c += static_cast<std::size_t>(b);
    return c;
  }
};

std::size_t model_hamming(const Model& a, const Model& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.bits.size(); ++i) d += a.bits[i] != b.bits[i];
  return d;
}

}  // namespace

TEST_CASE("bit access round trip across word boundaries") {
  ieco::SplitMixRandom rng(11);
  for (std::size_t n : {0u, 1u, 7u, 8u, 63u, 64u, 65u, 130u, 511u}) {
    const Model model = Model::random(n, rng);
    const BitString s = model.build();
    REQUIRE(s.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
      CAPTURE(n);
      CAPTURE(i);
      CHECK(s.get(i) == (model.bits[i] != 0));
    }
  }
}

TEST_CASE("from_bits matches per-element construction") {
  const std::vector<std::uint8_t> raw{1, 0, 0, 1, 1, 1, 0, 1, 0};
  const BitString s = BitString::from_bits(raw);
  REQUIRE(s.size() == raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) CHECK(s.get(i) == (raw[i] != 0));
}

TEST_CASE("byte packing is LSB-first with zero padding") {
  // Hand oracle: bits 0,3,9 set in an 11-bit string.
  //   byte 0 = 0b00001001 = 0x09, byte 1 = 0b00000010 = 0x02.
  BitString s(11);
  s.set(0, true);
  s.set(3, true);
  s.set(9, true);
  const auto bytes = s.to_bytes();
  REQUIRE(bytes.size() == 2);
  CHECK(bytes[0] == 0x09);
  CHECK(bytes[1] == 0x02);
  CHECK(s.to_hex() == "0902");
  CHECK(BitString::from_bytes(bytes, 11) == s);
  CHECK(BitString::from_hex("0902", 11) == s);

  ieco::SplitMixRandom rng(12);
  for (std::size_t n : {1u, 8u, 9u, 64u, 200u}) {
    const Model model = Model::random(n, rng);
    const BitString t = model.build();
    CHECK(t.to_bytes() == model.packed_bytes());
    CHECK(BitString::from_bytes(model.packed_bytes(), n) == t);
    CHECK(BitString::from_hex(t.to_hex(), n) == t);
  }
}

TEST_CASE("from_bytes and from_hex reject short input") {
  const std::vector<std::uint8_t> one_byte{0xff};
  CHECK_THROWS_AS(BitString::from_bytes(one_byte, 9), std::invalid_argument);
  CHECK_THROWS_AS(BitString::from_hex("f", 4), std::invalid_argument);
  CHECK_THROWS_AS(BitString::from_hex("zz", 8), std::invalid_argument);
}

TEST_CASE("count hamming xor and equality match the reference model") {
  ieco::SplitMixRandom rng(13);
  for (int round = 0; round < 20; ++round) {
    const std::size_t n = 1 + rng.raw_next() % 300;
    const Model ma = Model::random(n, rng);
    const Model mb = Model::random(n, rng);
    const BitString a = ma.build();
    const BitString b = mb.build();
    CHECK(a.count_ones() == ma.ones());
    CHECK(a.hamming(b) == model_hamming(ma, mb));
    CHECK(a.all_zero() == (ma.ones() == 0));

    const BitString x = a ^ b;
    REQUIRE(x.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(x.get(i) == ((ma.bits[i] ^ mb.bits[i]) != 0));
    }
    CHECK((a == b) == (ma.bits == mb.bits));
  }
  CHECK(BitString(5).all_zero());
}

TEST_CASE("equality ignores cleared history, sizes must match") {
  BitString a(70);
  BitString b(70);
  a.set(69, true);
  a.set(69, false);  // set-then-clear must leave no residue
  CHECK(a == b);
  a.flip(69);
  a.flip(69);
  CHECK(a == b);
  CHECK(BitString(3) != BitString(4));
}

TEST_CASE("hamming requires equal sizes") {
  CHECK_THROWS_AS(BitString(4).hamming(BitString(5)), std::invalid_argument);
}

TEST_CASE("push_back append and slice match the reference model") {
  ieco::SplitMixRandom rng(14);
  Model model;
  BitString s;
  for (int i = 0; i < 150; ++i) {
    const bool v = rng.raw_next() & 1;
    model.bits.push_back(v ? 1 : 0);
    s.push_back(v);
  }
  CHECK(s == model.build());

  const Model tail = Model::random(77, rng);
  BitString joined = s;
  joined.append(tail.build());
  Model joined_model = model;
  joined_model.bits.insert(joined_model.bits.end(), tail.bits.begin(),
                           tail.bits.end());
  CHECK(joined == joined_model.build());

  for (const auto& [pos, len] :
       {std::pair<std::size_t, std::size_t>{0, 10},
        {5, 64},
        {63, 65},
        {100, 0},
        {150, 77}}) {
    const BitString piece = joined.slice(pos, len);
    REQUIRE(piece.size() == len);
    for (std::size_t i = 0; i < len; ++i) {
      CHECK(piece.get(i) == (joined_model.bits[pos + i] != 0));
    }
  }
  CHECK_THROWS_AS(joined.slice(200, 100), std::out_of_range);
}

TEST_CASE("xor requires equal sizes and composes with itself to zero") {
  ieco::SplitMixRandom rng(15);
  const BitString a = Model::random(130, rng).build();
  BitString b = a;
  b ^= a;
  CHECK(b.all_zero());
  BitString c(129);
  CHECK_THROWS_AS(c ^= a, std::invalid_argument);
}
