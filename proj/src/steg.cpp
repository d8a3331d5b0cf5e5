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

#include "dctsteg/steg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dctsteg/error.hpp"
#include "lattice.hpp"

namespace dctsteg {
namespace {

int bit_for(std::uint64_t bits, int k) {
  return static_cast<int>((bits >> (kBlockArea - 1 - k)) & 1u);
}

CoeffBlock with_bits(CoeffBlock block, std::uint64_t bits) {
  for (int k = 0; k < kBlockArea; ++k) {
    block.coeffs[k] = set_lsb(block.coeffs[k], bit_for(bits, k));
  }
  return block;
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

std::uint16_t get_u16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint16_t>((b[at] << 8) | b[at + 1]);
}

// Shifts `c` by an even amount toward `delta`, staying in range.
std::int32_t shift_even(std::int32_t c, std::int32_t delta) {
  delta &= ~std::int32_t{1};
  const std::int32_t lo = kCoeffMin + (c & 1);
  const std::int32_t hi = kCoeffMax - 1 + (c & 1);
  return std::clamp(c + delta, lo, hi);
}

struct Candidate {
  std::array<std::uint8_t, kBlockArea> pixels{};
  std::array<std::int64_t, kBlockArea> raw{};  // before clamping
  RealCoeffBlock reanalyzed;
  int errors = 0;
};

Candidate evaluate(const std::array<std::int64_t, kBlockArea>& raw,
                   std::uint64_t bits) {
  Candidate c;
  c.raw = raw;
  PixelBlock p;
  for (int i = 0; i < kBlockArea; ++i) {
    c.pixels[i] = static_cast<std::uint8_t>(std::clamp<std::int64_t>(raw[i], 0, 255));
    p.samples[i] = c.pixels[i];
  }
  c.reanalyzed = forward_dct(p);
  const CoeffBlock q = quantize(c.reanalyzed);
  for (int k = 0; k < kBlockArea; ++k) {
    if (get_lsb(q.coeffs[k]) != bit_for(bits, k)) ++c.errors;
  }
  return c;
}

}  // namespace

Capacity capacity(std::uint32_t width, std::uint32_t height) {
  require_block_aligned(width, height);
  Capacity c;
  c.raw_slots = std::uint64_t{width / kBlockSize} * (height / kBlockSize) * kBlockArea;
  c.payload_bits = c.raw_slots > kFrameOverheadBits ? c.raw_slots - kFrameOverheadBits : 0;
  return c;
}

std::vector<std::uint8_t> write_container(const StegoContainer& c) {
  std::vector<std::uint8_t> out;
  out.reserve(8 + c.grid.size() * kBlockArea * 2);
  put_u16(out, static_cast<std::uint16_t>(kContainerMagic >> 16));
  put_u16(out, static_cast<std::uint16_t>(kContainerMagic & 0xFFFF));
  put_u16(out, c.width);
  put_u16(out, c.height);
  for (const auto& block : c.grid.blocks) {
    for (std::int32_t v : block.coeffs) put_u16(out, static_cast<std::uint16_t>(v));
  }
  return out;
}

bool looks_like_container(std::span<const std::uint8_t> bytes) {
  return bytes.size() >= 4 &&
         ((std::uint32_t{get_u16(bytes, 0)} << 16) | get_u16(bytes, 2)) == kContainerMagic;
}

StegoContainer read_container(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 8) {
    if (bytes.size() >= 4 && !looks_like_container(bytes)) {
      throw Error(ErrorCode::kBadMagic, "not a DST1 container");
    }
    throw Error(ErrorCode::kTruncated, "container header truncated");
  }
  if (!looks_like_container(bytes)) {
    throw Error(ErrorCode::kBadMagic, "not a DST1 container");
  }
  StegoContainer c;
  c.width = get_u16(bytes, 4);
  c.height = get_u16(bytes, 6);
  require_block_aligned(c.width, c.height);
  c.grid.blocks_w = c.width / kBlockSize;
  c.grid.blocks_h = c.height / kBlockSize;
  const std::size_t count = std::size_t{c.width} * c.height;
  const std::size_t expected = 8 + 2 * count;
  if (bytes.size() < expected) {
    throw Error(ErrorCode::kTruncated,
                "container holds " + std::to_string(bytes.size()) + " bytes, needs " +
                    std::to_string(expected));
  }
  if (bytes.size() > expected) {
    throw Error(ErrorCode::kBadHeader, "trailing bytes after container coefficients");
  }
  c.grid.blocks.resize(count / kBlockArea);
  std::size_t at = 8;
  for (auto& block : c.grid.blocks) {
    for (auto& v : block.coeffs) {
      v = static_cast<std::int16_t>(get_u16(bytes, at));
      at += 2;
      if (v < kCoeffMin || v > kCoeffMax) {
        throw Error(ErrorCode::kBadHeader,
                    "coefficient " + std::to_string(v) + " out of range");
      }
    }
  }
  return c;
}

Image8 render(const StegoContainer& c) {
  Image8 img(c.width, c.height);
  for (std::uint32_t by = 0; by < c.grid.blocks_h; ++by) {
    for (std::uint32_t bx = 0; bx < c.grid.blocks_w; ++bx) {
      const auto& block = c.grid.blocks[std::size_t{by} * c.grid.blocks_w + bx];
      place_block(img, bx, by, to_pixels8(inverse_dct(dequantize(block))));
    }
  }
  return img;
}

// Each round renders the current target coefficients and checks the LSBs of
// the re-analyzed block. Round 0 is the plain render; later rounds snap to a
// nearby parity-lattice point, with lambda decreasing so that later rounds
// accept more pixel drift. After a failed round the target moves: a uniform
// brightness shift if pixels clipped on one side, a contrast reduction if
// they clipped on both, otherwise +-2 on each wrong coefficient against the
// observed drift.
AdjustResult verify_adjust_block(const CoeffBlock& c, std::uint64_t bits) {
  const auto& ladder = detail::parity_lattices();
  const int ladder_size = static_cast<int>(ladder.size());
  std::array<std::int32_t, kBlockArea> target = c.coeffs;
  AdjustResult best;
  best.residual_errors = std::numeric_limits<int>::max();

  for (int round = 0; round <= kMaxAdjustRounds; ++round) {
    RealCoeffBlock real;
    for (int k = 0; k < kBlockArea; ++k) real.coeffs[k] = target[k];
    const PixelBlock rendered = inverse_dct(real);
    std::array<std::int64_t, kBlockArea> raw{};
    if (round == 0) {
      for (int i = 0; i < kBlockArea; ++i) {
        raw[i] = static_cast<std::int64_t>(round_half_away(rendered.samples[i]));
      }
    } else {
      const int rung = std::min((round - 1) * ladder_size / kMaxAdjustRounds, ladder_size - 1);
      raw = ladder[rung].nearest_pixels(target, rendered);
    }
    const Candidate cand = evaluate(raw, bits);
    if (cand.errors < best.residual_errors) {
      best.pixels = cand.pixels;
      best.residual_errors = cand.errors;
      best.iterations = round;
    }
    if (cand.errors == 0) return best;
    if (round == kMaxAdjustRounds) break;

    const auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
    const std::int64_t under = std::max<std::int64_t>(0, -*lo);
    const std::int64_t over = std::max<std::int64_t>(0, *hi - 255);
    if (under > 0 && over == 0) {
      target[0] = shift_even(target[0], static_cast<std::int32_t>(8 * under));
    } else if (over > 0 && under == 0) {
      target[0] = shift_even(target[0], -static_cast<std::int32_t>(8 * over));
    } else if (under > 0 && over > 0) {
      for (int k = 1; k < kBlockArea; ++k) {
        const auto scaled = static_cast<std::int32_t>(round_half_away(0.85 * target[k]));
        target[k] = set_lsb(scaled, bit_for(bits, k));
      }
    } else {
      const CoeffBlock q = quantize(cand.reanalyzed);
      for (int k = 0; k < kBlockArea; ++k) {
        if (get_lsb(q.coeffs[k]) == bit_for(bits, k)) continue;
        const double drift = cand.reanalyzed.coeffs[k] - target[k];
        target[k] = shift_even(target[k], drift >= 0 ? -2 : 2);
      }
    }
  }
  return best;
}

EmbedResult embed(const Image8& cover, const PayloadFrame& frame, EmbedMode mode) {
  const Capacity cap = capacity(cover.width, cover.height);
  if (frame.bits.size() > cap.raw_slots) {
    throw Error(ErrorCode::kPayloadTooLarge,
                "payload too large: frame needs " + std::to_string(frame.bits.size()) +
                    " bits, cover has " + std::to_string(cap.raw_slots) + " slots");
  }
  if (cover.width > 0xFFFF || cover.height > 0xFFFF) {
    throw Error(ErrorCode::kBadHeader, "cover dimensions exceed 65535");
  }

  BlockGrid grid = analyze(cover);
  const std::vector<std::uint64_t> groups = chunk_bits(frame);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    grid.blocks[i] = with_bits(grid.blocks[i], groups[i]);
  }

  EmbedResult result;
  EmbedReport& report = result.report;
  report.blocks_total = grid.size();
  report.blocks_used = groups.size();
  report.frame_bits = frame.bits.size();
  report.payload_bits = frame.bits.size() >= kHeaderBits
                            ? static_cast<std::size_t>(frame.bits.read_bits(96, 32))
                            : 0;

  StegoContainer container;
  container.width = static_cast<std::uint16_t>(cover.width);
  container.height = static_cast<std::uint16_t>(cover.height);
  container.grid = std::move(grid);

  if (mode == EmbedMode::kContainer) {
    report.quality = psnr(render(container), cover);
    result.artifact = std::move(container);
    return result;
  }

  // Blocks past the frame keep the cover pixels; they carry nothing.
  Image8 stego = cover;
  const std::uint32_t bw = container.grid.blocks_w;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const AdjustResult adj = verify_adjust_block(container.grid.blocks[i], groups[i]);
    place_block(stego, static_cast<std::uint32_t>(i % bw),
                static_cast<std::uint32_t>(i / bw), adj.pixels);
    if (adj.iterations > 0) ++report.blocks_adjusted;
    if (adj.residual_errors > 0) ++report.blocks_unresolved;
    report.spatial_mode_bit_errors += static_cast<std::size_t>(adj.residual_errors);
  }
  report.quality = psnr(stego, cover);
  result.artifact = std::move(stego);
  return result;
}

Bitstream collect_lsbs(const BlockGrid& grid) {
  Bitstream bits;
  for (const auto& block : grid.blocks) {
    std::uint64_t group = 0;
    for (std::int32_t v : block.coeffs) group = (group << 1) | static_cast<std::uint64_t>(get_lsb(v));
    bits.push_bits(group, kBlockArea);
  }
  return bits;
}

namespace {

Extracted extract_grid(const BlockGrid& grid) {
  const ParsedFrame frame = parse_frame(collect_lsbs(grid));
  return {frame.header, decode_frame(frame)};
}

}  // namespace

Extracted extract(const StegoContainer& c) { return extract_grid(c.grid); }

Extracted extract(const Image8& stego) { return extract_grid(analyze(stego)); }

}  // namespace dctsteg
