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

#include <doctest.h>

#include <random>
#include <string>

#include "dctsteg/error.hpp"
#include "dctsteg/steg.hpp"

using namespace dctsteg;

namespace {

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kIo;
}

Image8 noise_image(std::uint32_t w, std::uint32_t h, std::mt19937_64& rng) {
  Image8 img(w, h);
  for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng());
  return img;
}

// Smooth gradient with mild noise, closer to photographic content.
Image8 smooth_image(std::uint32_t w, std::uint32_t h, std::mt19937_64& rng) {
  Image8 img(w, h);
  for (std::uint32_t y = 0; y < h; ++y)
    for (std::uint32_t x = 0; x < w; ++x)
      img.at(x, y) = static_cast<std::uint8_t>(40 + (x + 2 * y) % 170 + rng() % 5);
  return img;
}

std::vector<std::uint8_t> random_secret(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint8_t> s(n);
  for (auto& b : s) b = static_cast<std::uint8_t>(rng() % 32);
  return s;
}

}  // namespace

TEST_CASE("set_lsb and get_lsb") {
  CHECK(set_lsb(13, 0) == 12);
  CHECK(set_lsb(-6, 1) == -5);
  CHECK(get_lsb(13) == 1);
  CHECK(get_lsb(-6) == 0);
  CHECK(get_lsb(0) == 0);
  CHECK(get_lsb(-1) == 1);
  for (std::int32_t c = kCoeffMin; c <= kCoeffMax; ++c) {
    for (int b = 0; b < 2; ++b) {
      const std::int32_t r = set_lsb(c, b);
      CHECK_EQ(get_lsb(r), b);
      CHECK_EQ(set_lsb(r, b), r);
      CHECK(std::abs(r - c) <= 1);
      CHECK(r >= kCoeffMin);
      CHECK(r <= kCoeffMax);
      // Parity via floor division, independent of bit operations.
      CHECK_EQ(((r % 2) + 2) % 2, b);
    }
  }
}

TEST_CASE("capacity") {
  CHECK(capacity(512, 512).raw_slots == 262144);
  CHECK(capacity(512, 512).payload_bits == 259968);
  CHECK(capacity(64, 64).payload_bits == 1920);
  CHECK(capacity(8, 8).raw_slots == 64);
  CHECK(capacity(8, 8).payload_bits == 0);
  CHECK(code_of([] { capacity(12, 8); }) == ErrorCode::kNotBlockAligned);
  for (std::uint32_t w = 8; w <= 128; w += 8) {
    for (std::uint32_t h = 8; h <= 128; h += 8) {
      CHECK(capacity(w + 8, h).payload_bits >= capacity(w, h).payload_bits);
      CHECK(capacity(w, h + 8).payload_bits >= capacity(w, h).payload_bits);
    }
  }
}

TEST_CASE("all-zero frame into a constant cover") {
  Image8 cover(64, 64, 128);
  PayloadFrame frame;
  frame.bits = Bitstream(std::vector<std::uint8_t>(512, 0), 4096);
  const EmbedResult r = embed(cover, frame, EmbedMode::kContainer);
  const auto& c = std::get<StegoContainer>(r.artifact);
  CHECK(c.grid.blocks[0].coeffs[0] == 1024);
  for (const auto& block : c.grid.blocks)
    for (auto v : block.coeffs) CHECK(v % 2 == 0);
  CHECK(render(c) == cover);
  CHECK(r.report.quality.infinite);
}

TEST_CASE("render special cases") {
  StegoContainer zero{16, 8, {2, 1, std::vector<CoeffBlock>(2)}};
  CHECK(render(zero) == Image8(16, 8, 0));
  StegoContainer gray = zero;
  for (auto& b : gray.grid.blocks) b.coeffs[0] = 1024;
  CHECK(render(gray) == Image8(16, 8, 128));
}

TEST_CASE("payload too large") {
  const PayloadFrame f = build_frame(std::vector<std::uint8_t>{1, 2, 3}, SecretKind::kBytes);
  CHECK(code_of([&] { embed(Image8(8, 8, 0), f, EmbedMode::kContainer); }) ==
        ErrorCode::kPayloadTooLarge);
  CHECK(code_of([&] { embed(Image8(40, 40, 0), f, EmbedMode::kSpatial8); }) ==
        ErrorCode::kPayloadTooLarge);
  CHECK_NOTHROW(embed(Image8(48, 48, 0), f, EmbedMode::kContainer));
  CHECK(code_of([&] { embed(Image8(52, 48, 0), f, EmbedMode::kContainer); }) ==
        ErrorCode::kNotBlockAligned);
}

TEST_CASE("container file format") {
  StegoContainer c{8, 16, {1, 2, std::vector<CoeffBlock>(2)}};
  c.grid.blocks[0].coeffs[0] = 1024;
  c.grid.blocks[0].coeffs[1] = -1;
  c.grid.blocks[1].coeffs[63] = kCoeffMin;
  const auto bytes = write_container(c);
  REQUIRE(bytes.size() == 8 + 2 * 128);
  CHECK(std::vector<std::uint8_t>(bytes.begin(), bytes.begin() + 12) ==
        std::vector<std::uint8_t>{'D', 'S', 'T', '1', 0, 8, 0, 16, 0x04, 0x00, 0xFF, 0xFF});
  CHECK(bytes[8 + 2 * 127] == 0xF0);
  CHECK(bytes[8 + 2 * 127 + 1] == 0x00);
  CHECK(read_container(bytes) == c);

  auto truncated = bytes;
  truncated.pop_back();
  CHECK(code_of([&] { read_container(truncated); }) == ErrorCode::kTruncated);
  auto longer = bytes;
  longer.push_back(0);
  CHECK(code_of([&] { read_container(longer); }) == ErrorCode::kBadHeader);
  auto bad = bytes;
  bad[0] = 'X';
  CHECK(code_of([&] { read_container(bad); }) == ErrorCode::kBadMagic);
  auto range = bytes;
  range[8] = 0x10;  // 4096 + ...
  CHECK(code_of([&] { read_container(range); }) == ErrorCode::kBadHeader);
  auto odd = bytes;
  odd[5] = 12;
  CHECK(code_of([&] { read_container(odd); }) == ErrorCode::kNotBlockAligned);
}

TEST_CASE("property: container round trip") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t w = 8 * (8 + rng() % 25);
    const std::uint32_t h = 8 * (8 + rng() % 25);
    const Image8 cover = trial % 2 ? noise_image(w, h, rng) : smooth_image(w, h, rng);
    const std::size_t max_bytes = capacity(w, h).payload_bits / 8;
    const auto secret = random_secret(1 + rng() % max_bytes, rng);
    PayloadFrame frame = build_frame(secret, SecretKind::kBytes);
    if (frame.bits.size() > capacity(w, h).raw_slots) continue;
    const EmbedResult r = embed(cover, frame, EmbedMode::kContainer);
    const auto& c = std::get<StegoContainer>(r.artifact);
    CHECK(r.report.blocks_used == frame.bits.size() / 64);
    CHECK(r.report.spatial_mode_bit_errors == 0);

    const auto file = write_container(c);
    const Extracted x = extract(read_container(file));
    CHECK(x.secret == secret);

    // Blocks past the frame are untouched.
    const BlockGrid fresh = analyze(cover);
    for (std::size_t i = r.report.blocks_used; i < fresh.size(); ++i)
      CHECK(c.grid.blocks[i] == fresh.blocks[i]);
    for (std::size_t i = 0; i < r.report.blocks_used; ++i)
      for (int k = 0; k < 64; ++k)
        CHECK(std::abs(c.grid.blocks[i].coeffs[k] - fresh.blocks[i].coeffs[k]) <= 1);
  }
}

TEST_CASE("extract from an unembedded image fails on the magic") {
  std::mt19937_64 rng(32);
  int bad_magic = 0;
  for (int trial = 0; trial < 50; ++trial) {
    try {
      extract(noise_image(64, 64, rng));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kBadMagic) ++bad_magic;
    }
  }
  CHECK(bad_magic == 50);
}

TEST_CASE("verify_adjust_block on a cleanly rendering block") {
  CoeffBlock c;
  c.coeffs[0] = 1024;
  const AdjustResult r = verify_adjust_block(c, 0);
  CHECK(r.iterations == 0);
  CHECK(r.residual_errors == 0);
  for (auto p : r.pixels) CHECK(p == 128);
}

TEST_CASE("property: adjusted blocks carry their bits") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    PixelBlock cover;
    for (auto& s : cover.samples) s = static_cast<double>(128 + static_cast<int>(rng() % 81) - 40);
    const std::uint64_t bits = rng();
    CoeffBlock c = quantize(forward_dct(cover));
    for (int k = 0; k < 64; ++k) c.coeffs[k] = set_lsb(c.coeffs[k], static_cast<int>((bits >> (63 - k)) & 1));
    const AdjustResult r = verify_adjust_block(c, bits);
    CHECK(r.residual_errors == 0);
    CHECK(r.iterations <= kMaxAdjustRounds);

    PixelBlock px;
    for (int i = 0; i < 64; ++i) px.samples[i] = r.pixels[i];
    const CoeffBlock back = quantize(forward_dct(px));
    std::uint64_t got = 0;
    for (int k = 0; k < 64; ++k) got = (got << 1) | static_cast<std::uint64_t>(get_lsb(back.coeffs[k]));
    CHECK(got == bits);
  }
}

TEST_CASE("adjustment copes with saturated blocks") {
  std::mt19937_64 rng(34);
  for (int level : {0, 1, 254, 255}) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::uint64_t bits = rng();
      PixelBlock cover;
      cover.samples.fill(level);
      CoeffBlock c = quantize(forward_dct(cover));
      for (int k = 0; k < 64; ++k) c.coeffs[k] = set_lsb(c.coeffs[k], static_cast<int>((bits >> (63 - k)) & 1));
      CHECK(verify_adjust_block(c, bits).residual_errors == 0);
    }
  }
}

TEST_CASE("spatial8 round trip") {
  std::mt19937_64 rng(35);
  const Image8 cover = smooth_image(128, 96, rng);
  const auto secret = random_secret(300, rng);
  const PayloadFrame frame = build_frame(secret, SecretKind::kBytes);
  const EmbedResult r = embed(cover, frame, EmbedMode::kSpatial8);
  CHECK(r.report.spatial_mode_bit_errors == 0);
  CHECK(r.report.blocks_unresolved == 0);
  const auto& stego = std::get<Image8>(r.artifact);
  CHECK(extract(stego).secret == secret);
  CHECK_FALSE(r.report.quality.infinite);
  CHECK(r.report.quality.psnr_db > 35.0);

  // Unused blocks keep the cover pixels.
  const std::uint32_t bw = 128 / 8;
  for (std::size_t i = r.report.blocks_used; i < 16 * 12; ++i) {
    const std::uint32_t bx = static_cast<std::uint32_t>(i % bw), by = static_cast<std::uint32_t>(i / bw);
    for (std::uint32_t y = 0; y < 8; ++y)
      for (std::uint32_t x = 0; x < 8; ++x)
        CHECK(stego.at(bx * 8 + x, by * 8 + y) == cover.at(bx * 8 + x, by * 8 + y));
  }
}

TEST_CASE("embedding is deterministic") {
  std::mt19937_64 rng(36);
  const Image8 cover = smooth_image(64, 64, rng);
  const PayloadFrame frame = build_frame(random_secret(100, rng), SecretKind::kBytes);
  const auto a = embed(cover, frame, EmbedMode::kSpatial8);
  const auto b = embed(cover, frame, EmbedMode::kSpatial8);
  CHECK(std::get<Image8>(a.artifact) == std::get<Image8>(b.artifact));
}
