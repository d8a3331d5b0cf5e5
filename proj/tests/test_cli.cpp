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

#include <algorithm>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dctsteg/cli.hpp"
#include "dctsteg/image_io.hpp"

using namespace dctsteg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dctsteg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("dctsteg_cli_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

Image8 textured(std::uint32_t w, std::uint32_t h, unsigned seed) {
  std::mt19937 rng(seed);
  Image8 img(w, h);
  for (std::uint32_t y = 0; y < h; ++y)
    for (std::uint32_t x = 0; x < w; ++x)
      img.at(x, y) = static_cast<std::uint8_t>(60 + (3 * x + y) % 120 + rng() % 7);
  return img;
}

std::size_t line_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("capacity command") {
  TempDir dir;
  write_file(dir / "c.pgm", write_pgm(Image8(512, 512, 0)));
  const Run r = run({"capacity", "--cover", dir / "c.pgm"});
  CHECK(r.status == 0);
  CHECK(r.out == "raw_slots=262144 payload_bits=259968\n");
}

TEST_CASE("psnr command") {
  TempDir dir;
  Image8 a(512, 512, 0);
  write_file(dir / "a.pgm", write_pgm(a));
  Run r = run({"psnr", "--a", dir / "a.pgm", "--b", dir / "a.pgm"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("psnr_db=inf", 0) == 0);
  a.at(3, 4) = 255;
  write_file(dir / "b.pgm", write_pgm(a));
  r = run({"psnr", "--a", dir / "a.pgm", "--b", dir / "b.pgm"});
  CHECK(r.out.rfind("psnr_db=54.185", 0) == 0);
}

TEST_CASE("embed and extract bytes, container mode") {
  TempDir dir;
  write_file(dir / "cover.pgm", write_pgm(textured(128, 128, 1)));
  std::vector<std::uint8_t> secret;
  for (int i = 0; i < 400; ++i) secret.push_back(static_cast<std::uint8_t>("steganography"[i % 13]));
  write_file(dir / "secret.bin", secret);

  Run r = run({"embed", "--cover", dir / "cover.pgm", "--secret", dir / "secret.bin", "--out",
               dir / "stego.dsc"});
  REQUIRE(r.status == 0);
  CHECK(line_count(r.out) == 1);
  CHECK(r.out.find("mode=container") != std::string::npos);
  CHECK(r.out.find("residual_bit_errors=0") != std::string::npos);

  r = run({"extract", "--in", dir / "stego.dsc", "--out", dir / "back.bin"});
  REQUIRE(r.status == 0);
  CHECK(read_file(dir / "back.bin") == secret);

  r = run({"inspect", "--in", dir / "stego.dsc"});
  CHECK(r.status == 0);
  CHECK(r.out.find("symbols=400") != std::string::npos);
  CHECK(r.out.find("format=container") != std::string::npos);

  // Same inputs, same bytes.
  run({"embed", "--cover", dir / "cover.pgm", "--secret", dir / "secret.bin", "--out",
       dir / "stego2.dsc"});
  CHECK(read_file(dir / "stego.dsc") == read_file(dir / "stego2.dsc"));
}

TEST_CASE("embed and extract an image secret, spatial8 mode") {
  TempDir dir;
  write_file(dir / "cover.pgm", write_pgm(textured(128, 128, 2)));
  Image8 secret(20, 15);
  for (std::size_t i = 0; i < secret.pixels.size(); ++i) secret.pixels[i] = static_cast<std::uint8_t>(i % 9 * 20);
  write_file(dir / "secret.pgm", write_pgm(secret));

  Run r = run({"embed", "--cover", dir / "cover.pgm", "--secret", dir / "secret.pgm",
               "--secret-kind", "image", "--mode", "spatial8", "--out", dir / "stego.pgm"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("mode=spatial8") != std::string::npos);
  CHECK(r.out.find("blocks_unresolved=0") != std::string::npos);

  r = run({"extract", "--in", dir / "stego.pgm", "--out", dir / "back.pgm"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("kind=image width=20 height=15") != std::string::npos);
  CHECK(read_pgm8(read_file(dir / "back.pgm")) == secret);
}

TEST_CASE("error exit statuses") {
  TempDir dir;
  write_file(dir / "tiny.pgm", write_pgm(Image8(8, 8, 50)));
  write_file(dir / "cover.pgm", write_pgm(textured(64, 64, 3)));
  write_file(dir / "odd.pgm", write_pgm(Image8(12, 8, 50)));
  write_file(dir / "secret.bin", std::vector<std::uint8_t>{1, 2, 3});

  Run r = run({"embed", "--cover", dir / "tiny.pgm", "--secret", dir / "secret.bin", "--out",
               dir / "x.dsc"});
  CHECK(r.status == kExitTooLarge);
  CHECK(r.err.find("payload too large") != std::string::npos);
  CHECK(line_count(r.err) == 1);
  CHECK(r.out.empty());

  CHECK(run({"inspect", "--in", dir / "cover.pgm"}).status == kExitCorrupt);
  CHECK(run({"extract", "--in", dir / "cover.pgm", "--out", dir / "o"}).status == kExitCorrupt);
  CHECK(run({"capacity", "--cover", dir / "missing.pgm"}).status == kExitIo);
  CHECK(run({"capacity", "--cover", dir / "odd.pgm"}).status == kExitIo);
  CHECK(run({"capacity", "--cover", dir / "secret.bin"}).status == kExitIo);
  CHECK(run({"embed", "--cover", dir / "cover.pgm", "--secret", dir / "secret.bin",
             "--secret-kind", "image", "--out", dir / "x"})
            .status == kExitIo);
  CHECK(run({}).status == kExitUsage);
  CHECK(run({"capacity"}).status == kExitUsage);
  CHECK(run({"embed", "--cover", "a", "--secret", "b", "--out", "c", "--mode", "jpeg"}).status ==
        kExitUsage);

  // A truncated container is an I/O-class failure; a corrupted frame is not.
  write_file(dir / "secret.bin", std::vector<std::uint8_t>(50, 7));
  REQUIRE(run({"embed", "--cover", dir / "cover.pgm", "--secret", dir / "secret.bin", "--out",
               dir / "s.dsc"}).status == 0);
  auto bytes = read_file(dir / "s.dsc");
  write_file(dir / "short.dsc", std::vector<std::uint8_t>(bytes.begin(), bytes.end() - 2));
  CHECK(run({"extract", "--in", dir / "short.dsc", "--out", dir / "o"}).status == kExitIo);
  bytes[9] ^= 1;  // first coefficient LSB: magic bit 0
  write_file(dir / "flip.dsc", bytes);
  CHECK(run({"extract", "--in", dir / "flip.dsc", "--out", dir / "o"}).status == kExitCorrupt);
}
