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

#include "dctsteg/image_io.hpp"

#include <fstream>
#include <iterator>
#include <string>

#include "dctsteg/error.hpp"

namespace dctsteg {
namespace {

constexpr std::uint64_t kMaxDimension = 1u << 20;

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

class HeaderScanner {
 public:
  explicit HeaderScanner(std::span<const std::uint8_t> bytes)
      : bytes_(bytes) {}

  // Skips whitespace and '#' comments, then reads an unsigned decimal.
  std::uint64_t next_number(const char* field) {
    skip_separators();
    if (pos_ >= bytes_.size()) {
      throw Error(ErrorCode::kBadHeader,
                  std::string("PGM header ends before ") + field);
    }
    std::uint64_t value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > kMaxDimension * 64) {
        throw Error(ErrorCode::kBadHeader,
                    std::string("PGM ") + field + " is out of range");
      }
      ++pos_;
      ++digits;
    }
    if (digits == 0) {
      throw Error(ErrorCode::kBadHeader,
                  std::string("PGM ") + field + " is not a number");
    }
    return value;
  }

  // The raster starts after exactly one whitespace byte.
  std::size_t raster_offset() {
    if (pos_ >= bytes_.size() || !is_space(bytes_[pos_])) {
      throw Error(ErrorCode::kBadHeader,
                  "PGM maxval must be followed by a single whitespace byte");
    }
    return pos_ + 1;
  }

  void expect_separator_after_magic() {
    if (pos_ >= bytes_.size() ||
        !(is_space(bytes_[pos_]) || bytes_[pos_] == '#')) {
      throw Error(ErrorCode::kBadHeader, "PGM magic not followed by whitespace");
    }
  }

  void skip(std::size_t n) { pos_ += n; }

 private:
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::vector<std::uint8_t> header_bytes(std::uint32_t w, std::uint32_t h,
                                       unsigned maxval) {
  const std::string header = "P5\n" + std::to_string(w) + " " +
                             std::to_string(h) + "\n" + std::to_string(maxval) +
                             "\n";
  return {header.begin(), header.end()};
}

}  // namespace

AnyImage read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw Error(ErrorCode::kBadMagic, "not a binary PGM (missing P5 magic)");
  }
  HeaderScanner scan(bytes);
  scan.skip(2);
  scan.expect_separator_after_magic();
  const std::uint64_t width = scan.next_number("width");
  const std::uint64_t height = scan.next_number("height");
  const std::uint64_t maxval = scan.next_number("maxval");
  if (width == 0 || height == 0 || width > kMaxDimension ||
      height > kMaxDimension) {
    throw Error(ErrorCode::kBadHeader, "PGM dimensions must be positive");
  }
  if (maxval != 255 && maxval != 65535) {
    throw Error(ErrorCode::kUnsupportedMaxval,
                "PGM maxval " + std::to_string(maxval) +
                    " unsupported (expected 255 or 65535)");
  }
  const std::size_t offset = scan.raster_offset();
  const std::size_t count = static_cast<std::size_t>(width * height);
  const std::size_t sample_bytes = maxval == 255 ? 1 : 2;
  if (bytes.size() - offset < count * sample_bytes) {
    throw Error(ErrorCode::kTruncated,
                "PGM raster has fewer samples than declared");
  }
  const auto raster = bytes.subspan(offset, count * sample_bytes);
  const auto w = static_cast<std::uint32_t>(width);
  const auto h = static_cast<std::uint32_t>(height);
  if (sample_bytes == 1) {
    Image8 img(w, h);
    std::copy(raster.begin(), raster.end(), img.pixels.begin());
    return img;
  }
  Image16 img(w, h);
  for (std::size_t i = 0; i < count; ++i) {
    img.pixels[i] = static_cast<std::uint16_t>((raster[2 * i] << 8) |
                                               raster[2 * i + 1]);
  }
  return img;
}

Image8 read_pgm8(std::span<const std::uint8_t> bytes) {
  AnyImage any = read_pgm(bytes);
  if (auto* img = std::get_if<Image8>(&any)) return std::move(*img);
  throw Error(ErrorCode::kUnsupportedMaxval,
              "expected an 8-bit PGM (maxval 255), got 16-bit");
}

std::vector<std::uint8_t> write_pgm(const Image8& img) {
  auto out = header_bytes(img.width, img.height, 255);
  out.insert(out.end(), img.pixels.begin(), img.pixels.end());
  return out;
}

std::vector<std::uint8_t> write_pgm(const Image16& img) {
  auto out = header_bytes(img.width, img.height, 65535);
  out.reserve(out.size() + img.pixels.size() * 2);
  for (std::uint16_t v : img.pixels) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  }
  return out;
}

std::vector<std::uint8_t> write_pgm(const AnyImage& img) {
  return std::visit([](const auto& i) { return write_pgm(i); }, img);
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIo, "read failed: " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path.string());
}

}  // namespace dctsteg
