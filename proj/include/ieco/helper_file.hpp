#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include "ieco/scheme.hpp"

namespace ieco {

// Structural damage to a serialized helper record: bad magic, unsupported
// version, truncation, trailing bytes, inconsistent counts, non-canonical
// padding, or checksum mismatch.  Deliberately distinct from an
// authentication reject so corruption is never mistaken for a failed match.
class HelperFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Binary helper record, version 1.  All integers little-endian:
//
//   magic           4 bytes  "IECO"
//   version         u16
//   phi             u8
//   gamma           u16
//   n               u16
//   k               u16
//   rp_seed         u64
//   input_dim       u32
//   proj_dim        u32
//   index_count     u32      == phi * n
//   indices         u32 each, strictly increasing, all < proj_dim
//   point_count     u16      == n
//   points          per point: nonce (16 bytes),
//                   ciphertext bit count u32, ciphertext bytes
//                   (LSB-first, final byte zero-padded high)
//   key_locker      one more point in the same encoding
//   checksum        u32      CRC-32 of every preceding byte
//
// The record holds only public reproduction parameters — locked points and
// layout metadata — never keys, messages, chaff values, or biometric bits.
std::vector<std::uint8_t> serialize_helper(const HelperData& helper);

// Throws HelperFormatError on any structural problem.
HelperData parse_helper(std::span<const std::uint8_t> bytes);

// File wrappers; read throws HelperFormatError for damaged content and
// std::runtime_error for I/O failures.
void write_helper_file(const std::filesystem::path& path,
                       const HelperData& helper);
HelperData read_helper_file(const std::filesystem::path& path);

}  // namespace ieco
