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

#ifndef DCTSTEG_BITSTREAM_HPP_
#define DCTSTEG_BITSTREAM_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dctsteg {

// Ordered bit sequence, packed MSB-first within each byte. Unused low bits
// of the final byte are always zero so equality can compare bytes.
class Bitstream {
 public:
  Bitstream() = default;

  // Adopts `bytes` and keeps the first `bit_length` bits.
  Bitstream(std::vector<std::uint8_t> bytes, std::size_t bit_length);

  // "0101..." notation; any other character is rejected.
  static Bitstream from_string(std::string_view bits);

  std::size_t size() const { return bit_length_; }
  bool empty() const { return bit_length_ == 0; }

  bool operator[](std::size_t i) const {
    return (bytes_[i >> 3] >> (7 - (i & 7))) & 1u;
  }

  void push_back(bool bit);
  // Appends the low `count` bits of `value`, most significant first.
  void push_bits(std::uint64_t value, int count);
  void append(const Bitstream& other);
  void pad_to_multiple(std::size_t multiple);

  // Reads `count` (<= 64) bits at `offset` as an unsigned integer.
  std::uint64_t read_bits(std::size_t offset, int count) const;
  Bitstream slice(std::size_t offset, std::size_t length) const;

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  std::string to_string() const;

  bool operator==(const Bitstream&) const = default;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t bit_length_ = 0;
};

// Sequential reader over a Bitstream.
class BitReader {
 public:
  explicit BitReader(const Bitstream& bits) : bits_(bits) {}

  std::size_t position() const { return pos_; }
  std::size_t remaining() const { return bits_.size() - pos_; }
  bool exhausted() const { return pos_ >= bits_.size(); }

  bool read_bit() { return bits_[pos_++]; }
  std::uint64_t read_bits(int count) {
    const auto v = bits_.read_bits(pos_, count);
    pos_ += static_cast<std::size_t>(count);
    return v;
  }

 private:
  const Bitstream& bits_;
  std::size_t pos_ = 0;
};

}  // namespace dctsteg

#endif  // DCTSTEG_BITSTREAM_HPP_
