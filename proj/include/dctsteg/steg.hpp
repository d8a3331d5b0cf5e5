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

// Coefficient-LSB embedding and extraction.
//
// Two artifacts are supported. A StegoContainer stores the integer DCT
// coefficients directly and round-trips exactly. A spatial8 stego image is
// an ordinary 8-bit picture whose blocks were adjusted so that re-analysis
// reproduces the embedded LSBs; blocks that could not be fixed are counted
// in the report rather than treated as errors.

#ifndef DCTSTEG_STEG_HPP_
#define DCTSTEG_STEG_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "dctsteg/block_dct.hpp"
#include "dctsteg/image_io.hpp"
#include "dctsteg/metrics.hpp"
#include "dctsteg/payload.hpp"

namespace dctsteg {

inline constexpr std::uint32_t kContainerMagic = 0x44535431;  // "DST1"
inline constexpr int kMaxAdjustRounds = 16;

// Two's-complement bit 0.
constexpr std::int32_t set_lsb(std::int32_t c, int bit) {
  return (c & ~std::int32_t{1}) | (bit & 1);
}
constexpr int get_lsb(std::int32_t c) { return c & 1; }

struct Capacity {
  std::uint64_t raw_slots = 0;     // one per coefficient
  std::uint64_t payload_bits = 0;  // raw_slots minus header and table, >= 0
};

// Throws NotBlockAligned.
Capacity capacity(std::uint32_t width, std::uint32_t height);

struct StegoContainer {
  std::uint16_t width = 0;
  std::uint16_t height = 0;
  BlockGrid grid;

  bool operator==(const StegoContainer&) const = default;
};

// Big-endian: magic, width, height, then 16-bit coefficients block by block.
std::vector<std::uint8_t> write_container(const StegoContainer& c);
// Throws BadMagic, Truncated, NotBlockAligned, and BadHeader for trailing
// bytes or out-of-range coefficients.
StegoContainer read_container(std::span<const std::uint8_t> bytes);
bool looks_like_container(std::span<const std::uint8_t> bytes);

// Pixels from coefficients: inverse DCT, round, clamp.
Image8 render(const StegoContainer& c);

enum class EmbedMode { kContainer, kSpatial8 };

struct EmbedReport {
  std::size_t blocks_total = 0;
  std::size_t blocks_used = 0;
  std::size_t frame_bits = 0;
  std::size_t payload_bits = 0;       // Huffman stream length from the header
  QualityScore quality;               // artifact render vs cover
  std::size_t spatial_mode_bit_errors = 0;
  std::size_t blocks_adjusted = 0;    // needed at least one adjustment round
  std::size_t blocks_unresolved = 0;  // still carry wrong bits
};

struct EmbedResult {
  std::variant<StegoContainer, Image8> artifact;
  EmbedReport report;
};

// Throws PayloadTooLarge when the frame exceeds the raw slots of `cover`,
// NotBlockAligned, and BadHeader when a container cannot hold the cover's
// dimensions.
EmbedResult embed(const Image8& cover, const PayloadFrame& frame, EmbedMode mode);

struct AdjustResult {
  std::array<std::uint8_t, kBlockArea> pixels{};
  int residual_errors = 0;
  int iterations = 0;  // adjustment rounds after the initial render
};

// Renders `c` (which already carries `bits`, MSB = coefficient 0) to 8-bit
// pixels and searches for pixels whose re-quantized DCT has the right LSBs.
// Returns the best candidate found.
AdjustResult verify_adjust_block(const CoeffBlock& c, std::uint64_t bits);

// LSBs of every coefficient, blocks in order.
Bitstream collect_lsbs(const BlockGrid& grid);

struct Extracted {
  PayloadHeader header;
  std::vector<std::uint8_t> secret;
};

Extracted extract(const StegoContainer& c);
Extracted extract(const Image8& stego);

}  // namespace dctsteg

#endif  // DCTSTEG_STEG_HPP_
