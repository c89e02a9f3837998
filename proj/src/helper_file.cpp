#include "ieco/helper_file.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstring>
#include <fstream>
#include <limits>

namespace ieco {

namespace {

constexpr char kMagic[4] = {'I', 'E', 'C', 'O'};
constexpr std::uint16_t kVersion = 1;
// Matches the locker's pad-expansion limit; nothing larger can be unlocked,
// so nothing larger can appear in a well-formed record.
constexpr std::uint32_t kMaxCiphertextBits = 1u << 20;

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
  }
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
  }
}

void put_point(std::vector<std::uint8_t>& out, const LockedPoint& point) {
  out.insert(out.end(), point.nonce.begin(), point.nonce.end());
  const std::size_t nbits = point.ciphertext.size();
  if (nbits == 0 || nbits > kMaxCiphertextBits) {
    throw std::invalid_argument("serialize_helper: ciphertext size");
  }
  put_u32(out, static_cast<std::uint32_t>(nbits));
  const auto bytes = point.ciphertext.to_bytes();
  out.insert(out.end(), bytes.begin(), bytes.end());
}

std::uint32_t checksum(std::span<const std::uint8_t> bytes) {
  return static_cast<std::uint32_t>(
      crc32_z(crc32_z(0, nullptr, 0), bytes.data(), bytes.size()));
}

// Sequential little-endian reader over the record body.  Every read is
// bounds-checked; running out of bytes is a format error, not UB.
class Cursor {
 public:
  explicit Cursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t remaining() const { return bytes_.size() - pos_; }

  std::span<const std::uint8_t> take(std::size_t count, const char* what) {
    if (remaining() < count) {
      throw HelperFormatError(std::string("helper record truncated in ") +
                              what);
    }
    auto out = bytes_.subspan(pos_, count);
    pos_ += count;
    return out;
  }

  std::uint8_t u8(const char* what) { return take(1, what)[0]; }

  std::uint16_t u16(const char* what) {
    auto b = take(2, what);
    return static_cast<std::uint16_t>(b[0] | (std::uint16_t{b[1]} << 8));
  }

  std::uint32_t u32(const char* what) {
    auto b = take(4, what);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | b[static_cast<std::size_t>(i)];
    return v;
  }

  std::uint64_t u64(const char* what) {
    auto b = take(8, what);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[static_cast<std::size_t>(i)];
    return v;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

LockedPoint read_point(Cursor& cursor, const char* what) {
  LockedPoint point;
  auto nonce = cursor.take(kNonceBytes, what);
  std::copy(nonce.begin(), nonce.end(), point.nonce.begin());
  const std::uint32_t nbits = cursor.u32(what);
  if (nbits == 0 || nbits > kMaxCiphertextBits) {
    throw HelperFormatError(std::string("ciphertext size out of range in ") +
                            what);
  }
  const std::size_t nbytes = (nbits + 7) / 8;
  auto body = cursor.take(nbytes, what);
  // Canonical form: padding bits above nbits in the last byte must be zero,
  // otherwise two distinct byte strings would parse to the same record.
  if (nbits % 8 != 0) {
    const std::uint8_t pad_mask =
        static_cast<std::uint8_t>(0xff << (nbits % 8));
    if (body[nbytes - 1] & pad_mask) {
      throw HelperFormatError(std::string("nonzero ciphertext padding in ") +
                              what);
    }
  }
  point.ciphertext = BitString::from_bytes(body, nbits);
  return point;
}

}  // namespace

std::vector<std::uint8_t> serialize_helper(const HelperData& helper) {
  if (helper.version != kVersion) {
    throw std::invalid_argument("serialize_helper: unsupported version");
  }
  if (helper.phi < 1 || helper.phi > 20) {
    throw std::invalid_argument("serialize_helper: phi out of range");
  }
  if (helper.gamma == 0 || helper.n == 0) {
    throw std::invalid_argument("serialize_helper: empty parameters");
  }
  if (helper.points.size() != helper.n) {
    throw std::invalid_argument("serialize_helper: point count != n");
  }
  const std::size_t expected_indices =
      static_cast<std::size_t>(helper.phi) * helper.n;
  if (helper.reliable_indices.size() != expected_indices) {
    throw std::invalid_argument("serialize_helper: index count != phi*n");
  }
  for (std::size_t i = 0; i < helper.reliable_indices.size(); ++i) {
    if (helper.reliable_indices[i] >= helper.proj_dim ||
        (i > 0 && helper.reliable_indices[i] <= helper.reliable_indices[i - 1])) {
      throw std::invalid_argument("serialize_helper: bad index list");
    }
  }

  std::vector<std::uint8_t> out;
  out.insert(out.end(), kMagic, kMagic + 4);
  put_u16(out, helper.version);
  out.push_back(helper.phi);
  put_u16(out, helper.gamma);
  put_u16(out, helper.n);
  put_u16(out, helper.k);
  put_u64(out, helper.rp_seed);
  put_u32(out, helper.input_dim);
  put_u32(out, helper.proj_dim);
  put_u32(out, static_cast<std::uint32_t>(helper.reliable_indices.size()));
  for (std::uint32_t index : helper.reliable_indices) put_u32(out, index);
  put_u16(out, static_cast<std::uint16_t>(helper.points.size()));
  for (const LockedPoint& point : helper.points) put_point(out, point);
  put_point(out, helper.key_locker);
  put_u32(out, checksum(out));
  return out;
}

HelperData parse_helper(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 + 4) {
    throw HelperFormatError("helper record too short");
  }
  // Validate the trailer first: any flipped or missing byte surfaces here as
  // a checksum mismatch before field-level parsing is attempted.
  const std::uint32_t stored =
      static_cast<std::uint32_t>(bytes[bytes.size() - 4]) |
      (static_cast<std::uint32_t>(bytes[bytes.size() - 3]) << 8) |
      (static_cast<std::uint32_t>(bytes[bytes.size() - 2]) << 16) |
      (static_cast<std::uint32_t>(bytes[bytes.size() - 1]) << 24);
  const auto body = bytes.first(bytes.size() - 4);
  if (checksum(body) != stored) {
    throw HelperFormatError("helper record checksum mismatch");
  }

  Cursor cursor(body);
  auto magic = cursor.take(4, "magic");
  if (!std::equal(magic.begin(), magic.end(), kMagic)) {
    throw HelperFormatError("helper record magic mismatch");
  }
  HelperData helper;
  helper.version = cursor.u16("version");
  if (helper.version != kVersion) {
    throw HelperFormatError("unsupported helper record version");
  }
  helper.phi = cursor.u8("phi");
  helper.gamma = cursor.u16("gamma");
  helper.n = cursor.u16("n");
  helper.k = cursor.u16("k");
  helper.rp_seed = cursor.u64("rp_seed");
  helper.input_dim = cursor.u32("input_dim");
  helper.proj_dim = cursor.u32("proj_dim");
  if (helper.phi < 1 || helper.phi > 20 || helper.gamma == 0 ||
      helper.n == 0) {
    throw HelperFormatError("helper record parameters out of range");
  }

  const std::uint32_t index_count = cursor.u32("index count");
  if (index_count !=
      static_cast<std::uint32_t>(helper.phi) * static_cast<std::uint32_t>(helper.n)) {
    throw HelperFormatError("helper record index count != phi*n");
  }
  helper.reliable_indices.reserve(index_count);
  for (std::uint32_t i = 0; i < index_count; ++i) {
    const std::uint32_t index = cursor.u32("indices");
    if (index >= helper.proj_dim ||
        (i > 0 && index <= helper.reliable_indices.back())) {
      throw HelperFormatError("helper record index list not canonical");
    }
    helper.reliable_indices.push_back(index);
  }

  const std::uint16_t point_count = cursor.u16("point count");
  if (point_count != helper.n) {
    throw HelperFormatError("helper record point count != n");
  }
  helper.points.reserve(point_count);
  for (std::uint16_t i = 0; i < point_count; ++i) {
    helper.points.push_back(read_point(cursor, "points"));
  }
  helper.key_locker = read_point(cursor, "key locker");
  if (cursor.remaining() != 0) {
    throw HelperFormatError("helper record has trailing bytes");
  }
  return helper;
}

void write_helper_file(const std::filesystem::path& path,
                       const HelperData& helper) {
  const auto bytes = serialize_helper(helper);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open helper file for writing: " +
                             path.string());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out.flush()) {
    throw std::runtime_error("failed writing helper file: " + path.string());
  }
}

HelperData read_helper_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open helper file: " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw std::runtime_error("failed reading helper file: " + path.string());
  }
  return parse_helper(bytes);
}

}  // namespace ieco
