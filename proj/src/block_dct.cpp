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

#include "dctsteg/block_dct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dctsteg/error.hpp"

namespace dctsteg {
namespace {

// basis[k][n] = 1/2 C(k) cos((2n+1) k pi / 16); the 1-D factor of the 2-D
// transform, so F = B f B^T and f = B^T F B.
struct Basis {
  std::array<std::array<double, kBlockSize>, kBlockSize> m{};
  Basis() {
    for (int k = 0; k < kBlockSize; ++k) {
      const double c = k == 0 ? std::numbers::sqrt2 / 2.0 : 1.0;
      for (int n = 0; n < kBlockSize; ++n) {
        m[k][n] = 0.5 * c * std::cos((2 * n + 1) * k * std::numbers::pi / 16.0);
      }
    }
  }
};

const Basis& basis() {
  static const Basis b;
  return b;
}

}  // namespace

double round_half_away(double v) {
  return v < 0 ? -std::floor(-v + 0.5) : std::floor(v + 0.5);
}

void require_block_aligned(std::uint32_t width, std::uint32_t height) {
  if (width == 0 || height == 0 || width % kBlockSize != 0 ||
      height % kBlockSize != 0) {
    throw Error(ErrorCode::kNotBlockAligned,
                "image " + std::to_string(width) + "x" +
                    std::to_string(height) +
                    " is not a multiple of 8 in both dimensions");
  }
}

std::vector<PixelBlock> partition(const Image8& img) {
  require_block_aligned(img.width, img.height);
  const std::uint32_t bw = img.width / kBlockSize;
  const std::uint32_t bh = img.height / kBlockSize;
  std::vector<PixelBlock> blocks(std::size_t{bw} * bh);
  for (std::uint32_t by = 0; by < bh; ++by) {
    for (std::uint32_t bx = 0; bx < bw; ++bx) {
      auto& s = blocks[std::size_t{by} * bw + bx].samples;
      for (int x = 0; x < kBlockSize; ++x) {
        for (int y = 0; y < kBlockSize; ++y) {
          s[x * kBlockSize + y] = img.at(bx * kBlockSize + y, by * kBlockSize + x);
        }
      }
    }
  }
  return blocks;
}

// Separable row-column evaluation: 2 * 8^3 multiplies instead of 8^4.
RealCoeffBlock forward_dct(const PixelBlock& block) {
  const auto& b = basis().m;
  std::array<double, kBlockArea> tmp{};
  for (int u = 0; u < kBlockSize; ++u) {
    for (int y = 0; y < kBlockSize; ++y) {
      double acc = 0.0;
      for (int x = 0; x < kBlockSize; ++x) {
        acc += b[u][x] * block.samples[x * kBlockSize + y];
      }
      tmp[u * kBlockSize + y] = acc;
    }
  }
  RealCoeffBlock out;
  for (int u = 0; u < kBlockSize; ++u) {
    for (int v = 0; v < kBlockSize; ++v) {
      double acc = 0.0;
      for (int y = 0; y < kBlockSize; ++y) {
        acc += tmp[u * kBlockSize + y] * b[v][y];
      }
      out.coeffs[u * kBlockSize + v] = acc;
    }
  }
  return out;
}

PixelBlock inverse_dct(const RealCoeffBlock& coeffs) {
  const auto& b = basis().m;
  std::array<double, kBlockArea> tmp{};
  for (int x = 0; x < kBlockSize; ++x) {
    for (int v = 0; v < kBlockSize; ++v) {
      double acc = 0.0;
      for (int u = 0; u < kBlockSize; ++u) {
        acc += b[u][x] * coeffs.coeffs[u * kBlockSize + v];
      }
      tmp[x * kBlockSize + v] = acc;
    }
  }
  PixelBlock out;
  for (int x = 0; x < kBlockSize; ++x) {
    for (int y = 0; y < kBlockSize; ++y) {
      double acc = 0.0;
      for (int v = 0; v < kBlockSize; ++v) {
        acc += tmp[x * kBlockSize + v] * b[v][y];
      }
      out.samples[x * kBlockSize + y] = acc;
    }
  }
  return out;
}

CoeffBlock quantize(const RealCoeffBlock& coeffs) {
  CoeffBlock out;
  for (int i = 0; i < kBlockArea; ++i) {
    const double r = std::clamp(round_half_away(coeffs.coeffs[i]),
                                double{kCoeffMin}, double{kCoeffMax});
    out.coeffs[i] = static_cast<std::int32_t>(r);
  }
  return out;
}

RealCoeffBlock dequantize(const CoeffBlock& coeffs) {
  RealCoeffBlock out;
  for (int i = 0; i < kBlockArea; ++i) out.coeffs[i] = coeffs.coeffs[i];
  return out;
}

BlockGrid analyze(const Image8& img) {
  BlockGrid grid;
  const auto pixel_blocks = partition(img);
  grid.blocks_w = img.width / kBlockSize;
  grid.blocks_h = img.height / kBlockSize;
  grid.blocks.reserve(pixel_blocks.size());
  for (const auto& pb : pixel_blocks) {
    grid.blocks.push_back(quantize(forward_dct(pb)));
  }
  return grid;
}

std::array<std::uint8_t, kBlockArea> to_pixels8(const PixelBlock& block) {
  std::array<std::uint8_t, kBlockArea> out{};
  for (int i = 0; i < kBlockArea; ++i) {
    out[i] = static_cast<std::uint8_t>(
        std::clamp(round_half_away(block.samples[i]), 0.0, 255.0));
  }
  return out;
}

void place_block(Image8& img, std::uint32_t bx, std::uint32_t by,
                 const std::array<std::uint8_t, kBlockArea>& pixels) {
  for (int x = 0; x < kBlockSize; ++x) {
    for (int y = 0; y < kBlockSize; ++y) {
      img.at(bx * kBlockSize + y, by * kBlockSize + x) = pixels[x * kBlockSize + y];
    }
  }
}

}  // namespace dctsteg
