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

// Canonical Huffman coding over the 256 byte symbols.
//
// A table is fully described by its 256 code lengths; codewords are assigned
// in (length, symbol) order, so the wire form is a fixed 2048-bit array of
// 8-bit lengths.

#ifndef DCTSTEG_HUFFMAN_HPP_
#define DCTSTEG_HUFFMAN_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dctsteg/bitstream.hpp"

namespace dctsteg {

inline constexpr int kAlphabetSize = 256;
inline constexpr std::size_t kSerializedTableBits = 2048;

using CodeLengths = std::array<std::uint8_t, kAlphabetSize>;

class HuffmanTable {
 public:
  // Empty table: no symbol is encodable.
  HuffmanTable() : HuffmanTable(CodeLengths{}) {}

  // Throws KraftViolation if the lengths cannot form a prefix code.
  explicit HuffmanTable(const CodeLengths& lengths);

  const CodeLengths& code_lengths() const { return lengths_; }
  int length(std::uint8_t symbol) const { return lengths_[symbol]; }
  const Bitstream& codeword(std::uint8_t symbol) const { return codes_[symbol]; }

  int symbols_present() const { return symbols_present_; }
  int max_length() const { return max_length_; }

  // Walks one codeword from `reader`. Throws InvalidCode when the bits leave
  // the code tree and TruncatedStream when the reader runs dry.
  std::uint8_t decode_symbol(BitReader& reader) const;

  bool operator==(const HuffmanTable& other) const {
    return lengths_ == other.lengths_;
  }

 private:
  CodeLengths lengths_{};
  std::array<Bitstream, kAlphabetSize> codes_{};
  std::array<int, kAlphabetSize + 1> count_{};  // codewords per length
  std::array<int, kAlphabetSize + 1> beyond_{};  // codewords longer than len
  std::vector<std::uint8_t> sorted_;            // symbols by (length, symbol)
  int symbols_present_ = 0;
  int max_length_ = 0;
};

// Optimal code lengths for the byte histogram of `data`, canonicalized.
// Merges the two lightest nodes, breaking ties leaves-first then by symbol
// (leaves) or creation order (internal nodes). A lone symbol gets length 1.
HuffmanTable build_table(std::span<const std::uint8_t> data);

Bitstream encode(std::span<const std::uint8_t> data, const HuffmanTable& table);

// Decodes exactly `symbol_count` symbols and requires the stream to end
// there; leftover bits are an InvalidCode.
std::vector<std::uint8_t> decode(const Bitstream& bits, const HuffmanTable& table,
                                 std::size_t symbol_count);

// 256 lengths as 8-bit big-endian integers, symbol 0 first.
Bitstream serialize_table(const HuffmanTable& table);
HuffmanTable parse_table(const Bitstream& bits);

}  // namespace dctsteg

#endif  // DCTSTEG_HUFFMAN_HPP_
