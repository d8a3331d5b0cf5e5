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

// 8x8 block partitioning and the orthonormal 2-D DCT-II / DCT-III pair.
//
// Conventions: a block is stored row-major, sample (x, y) at index 8*x + y,
// coefficient (u, v) at index 8*u + v. The transform is
//
//   F(u,v) = 1/4 C(u) C(v) sum_x sum_y f(x,y) cos((2x+1)u pi/16) cos((2y+1)v pi/16)
//
// with C(0) = 1/sqrt(2) and C(k) = 1 otherwise, which is orthonormal.

#ifndef DCTSTEG_BLOCK_DCT_HPP_
#define DCTSTEG_BLOCK_DCT_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "dctsteg/image_io.hpp"

namespace dctsteg {

inline constexpr int kBlockSize = 8;
inline constexpr int kBlockArea = 64;
inline constexpr std::int32_t kCoeffMin = -4096;
inline constexpr std::int32_t kCoeffMax = 4095;

struct PixelBlock {
  std::array<double, kBlockArea> samples{};
  bool operator==(const PixelBlock&) const = default;
};

struct RealCoeffBlock {
  std::array<double, kBlockArea> coeffs{};
  bool operator==(const RealCoeffBlock&) const = default;
};

// Integer coefficients; every entry lies in [kCoeffMin, kCoeffMax].
struct CoeffBlock {
  std::array<std::int32_t, kBlockArea> coeffs{};
  bool operator==(const CoeffBlock&) const = default;
};

struct BlockGrid {
  std::uint32_t blocks_w = 0;
  std::uint32_t blocks_h = 0;
  std::vector<CoeffBlock> blocks;  // row-major, blocks_w * blocks_h entries

  std::size_t size() const { return blocks.size(); }
  bool operator==(const BlockGrid&) const = default;
};

// Throws NotBlockAligned unless both dimensions are positive multiples of 8.
void require_block_aligned(std::uint32_t width, std::uint32_t height);

// Blocks in row-major order (left to right, top to bottom).
std::vector<PixelBlock> partition(const Image8& img);

RealCoeffBlock forward_dct(const PixelBlock& block);
PixelBlock inverse_dct(const RealCoeffBlock& coeffs);

// Rounds half away from zero, saturating to [kCoeffMin, kCoeffMax].
CoeffBlock quantize(const RealCoeffBlock& coeffs);
RealCoeffBlock dequantize(const CoeffBlock& coeffs);

// partition + forward_dct + quantize for every block.
BlockGrid analyze(const Image8& img);

// Rounds half away from zero and clamps to [0, 255].
std::array<std::uint8_t, kBlockArea> to_pixels8(const PixelBlock& block);

// Copies an 8x8 pixel block into `img` at block coordinates (bx, by).
void place_block(Image8& img, std::uint32_t bx, std::uint32_t by,
                 const std::array<std::uint8_t, kBlockArea>& pixels);

double round_half_away(double v);

}  // namespace dctsteg

#endif  // DCTSTEG_BLOCK_DCT_HPP_
