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

// Binary PGM (P5) reading and writing, 8-bit and 16-bit samples.

#ifndef DCTSTEG_IMAGE_IO_HPP_
#define DCTSTEG_IMAGE_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <variant>
#include <vector>

namespace dctsteg {

template <typename Sample>
struct BasicImage {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<Sample> pixels;  // row-major, width * height samples

  BasicImage() = default;
  BasicImage(std::uint32_t w, std::uint32_t h, Sample fill = 0)
      : width(w), height(h), pixels(std::size_t{w} * h, fill) {}

  Sample& at(std::uint32_t x, std::uint32_t y) {
    return pixels[std::size_t{y} * width + x];
  }
  Sample at(std::uint32_t x, std::uint32_t y) const {
    return pixels[std::size_t{y} * width + x];
  }

  bool operator==(const BasicImage&) const = default;
};

using Image8 = BasicImage<std::uint8_t>;
using Image16 = BasicImage<std::uint16_t>;
using AnyImage = std::variant<Image8, Image16>;

// Parses a binary PGM. maxval 255 yields Image8, 65535 yields Image16
// (big-endian samples). Bytes after the declared samples are ignored.
AnyImage read_pgm(std::span<const std::uint8_t> bytes);

// Like read_pgm but rejects 16-bit files with UnsupportedMaxval.
Image8 read_pgm8(std::span<const std::uint8_t> bytes);

// Canonical form: "P5\n<w> <h>\n<maxval>\n" followed by raw samples.
std::vector<std::uint8_t> write_pgm(const Image8& img);
std::vector<std::uint8_t> write_pgm(const Image16& img);
std::vector<std::uint8_t> write_pgm(const AnyImage& img);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes);

}  // namespace dctsteg

#endif  // DCTSTEG_IMAGE_IO_HPP_
