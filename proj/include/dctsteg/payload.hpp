// Copyright 2026 The dctsteg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Self-describing payload frame:
//
//   header (128) | code-length table (2048) | Huffman payload | zero pad
//
// padded to a multiple of 64 bits so it splits evenly into coefficient
// blocks.

#ifndef DCTSTEG_PAYLOAD_HPP_
#define DCTSTEG_PAYLOAD_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dctsteg/bitstream.hpp"
#include "dctsteg/huffman.hpp"

namespace dctsteg {

inline constexpr std::uint16_t kFrameMagic = 0x5347;
inline constexpr std::uint8_t kFrameVersion = 1;
inline constexpr std::size_t kHeaderBits = 128;
inline constexpr std::size_t kFrameOverheadBits = kHeaderBits + kSerializedTableBits;
inline constexpr std::size_t kGroupBits = 64;

enum class SecretKind : std::uint8_t {
  kBytes = 0,
  kImage = 1,  // 8-bit grayscale, row-major
};

struct PayloadHeader {
  std::uint16_t magic = kFrameMagic;
  std::uint8_t version = kFrameVersion;
  SecretKind kind = SecretKind::kBytes;
  std::uint16_t width = 0;   // 0 unless kind is kImage
  std::uint16_t height = 0;
  std::uint32_t symbol_count = 0;
  std::uint32_t payload_bit_length = 0;

  bool operator==(const PayloadHeader&) const = default;
};

Bitstream serialize_header(const PayloadHeader& h);

struct PayloadFrame {
  Bitstream bits;
};

struct ParsedFrame {
  PayloadHeader header;
  HuffmanTable table;
  Bitstream payload;  // exactly header.payload_bit_length bits
};

// `width`/`height` are ignored for kBytes. Throws EmptyInput, and
// DimensionMismatch when an image secret's size disagrees with its dims.
PayloadFrame build_frame(std::span<const std::uint8_t> secret, SecretKind kind,
                         std::uint16_t width = 0, std::uint16_t height = 0);

// Padding beyond the payload is ignored. Throws BadMagic,
// UnsupportedVersion, BadHeader (unknown kind or inconsistent dims),
// TruncatedFrame and KraftViolation.
ParsedFrame parse_frame(const Bitstream& bits);

// Parses and Huffman-decodes the secret.
std::vector<std::uint8_t> decode_frame(const ParsedFrame& frame);

// 128 + 2048 + payload_bits rounded up to a multiple of 64.
std::size_t frame_bits_for(std::size_t payload_bits);

// Consecutive 64-bit groups; group i targets coefficient block i.
std::vector<std::uint64_t> chunk_bits(const PayloadFrame& frame);

}  // namespace dctsteg

#endif  // DCTSTEG_PAYLOAD_HPP_
