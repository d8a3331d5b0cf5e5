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

#include "dctsteg/bitstream.hpp"

#include <cassert>
#include <stdexcept>

namespace dctsteg {

Bitstream::Bitstream(std::vector<std::uint8_t> bytes, std::size_t bit_length)
    : bytes_(std::move(bytes)), bit_length_(bit_length) {
  if (bytes_.size() * 8 < bit_length_) {
    throw std::invalid_argument("Bitstream: byte buffer shorter than bit length");
  }
  bytes_.resize((bit_length_ + 7) / 8);
  if (bit_length_ % 8 != 0) {
    bytes_.back() &= static_cast<std::uint8_t>(0xFF00u >> (bit_length_ % 8));
  }
}

Bitstream Bitstream::from_string(std::string_view bits) {
  Bitstream out;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("Bitstream::from_string: expected 0 or 1");
    }
    out.push_back(c == '1');
  }
  return out;
}

void Bitstream::push_back(bool bit) {
  if (bit_length_ % 8 == 0) bytes_.push_back(0);
  if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (bit_length_ % 8));
  ++bit_length_;
}

void Bitstream::push_bits(std::uint64_t value, int count) {
  assert(count >= 0 && count <= 64);
  for (int i = count - 1; i >= 0; --i) push_back((value >> i) & 1u);
}

void Bitstream::append(const Bitstream& other) {
  if (bit_length_ % 8 == 0) {
    bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
    bit_length_ += other.bit_length_;
    return;
  }
  for (std::size_t i = 0; i < other.size(); ++i) push_back(other[i]);
}

void Bitstream::pad_to_multiple(std::size_t multiple) {
  while (bit_length_ % multiple != 0) push_back(false);
}

std::uint64_t Bitstream::read_bits(std::size_t offset, int count) const {
  if (count < 0 || count > 64 || offset + static_cast<std::size_t>(count) > bit_length_) {
    throw std::out_of_range("Bitstream::read_bits past end");
  }
  std::uint64_t v = 0;
  for (int i = 0; i < count; ++i) v = (v << 1) | (*this)[offset + i];
  return v;
}

Bitstream Bitstream::slice(std::size_t offset, std::size_t length) const {
  if (offset + length > bit_length_) {
    throw std::out_of_range("Bitstream::slice past end");
  }
  if (offset % 8 == 0) {
    std::vector<std::uint8_t> b(bytes_.begin() + static_cast<std::ptrdiff_t>(offset / 8),
                                bytes_.begin() + static_cast<std::ptrdiff_t>((offset + length + 7) / 8));
    return Bitstream(std::move(b), length);
  }
  Bitstream out;
  for (std::size_t i = 0; i < length; ++i) out.push_back((*this)[offset + i]);
  return out;
}

std::string Bitstream::to_string() const {
  std::string s;
  s.reserve(bit_length_);
  for (std::size_t i = 0; i < bit_length_; ++i) s.push_back((*this)[i] ? '1' : '0');
  return s;
}

}  // namespace dctsteg
