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

#include "dctsteg/huffman.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "dctsteg/error.hpp"

namespace dctsteg {
namespace {

// Exact Kraft check: tracks unused code space at each depth, in units of
// 2^-depth. Once the space exceeds the alphabet it can never go negative.
bool satisfies_kraft(const std::array<int, kAlphabetSize + 1>& count) {
  std::int64_t avail = 1;
  for (int len = 1; len <= kAlphabetSize; ++len) {
    avail = avail * 2 - count[len];
    if (avail < 0) return false;
    avail = std::min<std::int64_t>(avail, 1 << 20);
  }
  return true;
}

// Adds one to a big-endian bit vector. Returns false on carry out.
bool increment(std::vector<bool>& code) {
  for (auto i = code.size(); i-- > 0;) {
    if (!code[i]) {
      code[i] = true;
      return true;
    }
    code[i] = false;
  }
  return false;
}

}  // namespace

HuffmanTable::HuffmanTable(const CodeLengths& lengths) : lengths_(lengths) {
  for (int s = 0; s < kAlphabetSize; ++s) {
    if (lengths_[s] == 0) continue;
    ++count_[lengths_[s]];
    ++symbols_present_;
    max_length_ = std::max<int>(max_length_, lengths_[s]);
  }
  if (!satisfies_kraft(count_)) {
    throw Error(ErrorCode::kKraftViolation,
                "code lengths violate the Kraft inequality");
  }
  for (int len = kAlphabetSize - 1; len >= 0; --len) {
    beyond_[len] = beyond_[len + 1] + count_[len + 1];
  }

  sorted_.reserve(static_cast<std::size_t>(symbols_present_));
  for (int len = 1; len <= max_length_; ++len) {
    for (int s = 0; s < kAlphabetSize; ++s) {
      if (lengths_[s] == len) sorted_.push_back(static_cast<std::uint8_t>(s));
    }
  }

  std::vector<bool> code;
  bool first = true;
  for (std::uint8_t s : sorted_) {
    if (!first) increment(code);
    first = false;
    code.resize(lengths_[s], false);
    Bitstream cw;
    for (bool b : code) cw.push_back(b);
    codes_[s] = std::move(cw);
  }
}

std::uint8_t HuffmanTable::decode_symbol(BitReader& reader) const {
  // offset: distance of the code read so far from the first canonical code
  // of the current length. Stays below the alphabet size for valid input.
  std::int64_t offset = 0;
  std::size_t index = 0;
  for (int len = 1; len <= kAlphabetSize; ++len) {
    if (reader.exhausted()) {
      throw Error(ErrorCode::kTruncatedStream, "bitstream ends mid-codeword");
    }
    offset = 2 * offset + (reader.read_bit() ? 1 : 0);
    if (offset < count_[len]) return sorted_[index + static_cast<std::size_t>(offset)];
    offset -= count_[len];
    index += static_cast<std::size_t>(count_[len]);
    if (offset >= beyond_[len]) break;
  }
  throw Error(ErrorCode::kInvalidCode, "bit pattern is not a codeword");
}

HuffmanTable build_table(std::span<const std::uint8_t> data) {
  if (data.empty()) {
    throw Error(ErrorCode::kEmptyInput, "cannot build a code for empty input");
  }
  std::array<std::uint64_t, kAlphabetSize> freq{};
  for (std::uint8_t b : data) ++freq[b];

  struct Node {
    std::uint64_t weight;
    bool internal;
    int order;  // symbol for leaves, creation index for internal nodes
    int parent = -1;
  };
  std::vector<Node> nodes;
  std::vector<int> active;
  for (int s = 0; s < kAlphabetSize; ++s) {
    if (freq[s] == 0) continue;
    active.push_back(static_cast<int>(nodes.size()));
    nodes.push_back({freq[s], false, s});
  }

  CodeLengths lengths{};
  if (active.size() == 1) {
    lengths[nodes[0].order] = 1;
    return HuffmanTable(lengths);
  }

  auto lighter = [&](int a, int b) {
    return std::tie(nodes[a].weight, nodes[a].internal, nodes[a].order) <
           std::tie(nodes[b].weight, nodes[b].internal, nodes[b].order);
  };
  int created = 0;
  while (active.size() > 1) {
    std::sort(active.begin(), active.end(), lighter);
    const int a = active[0];
    const int b = active[1];
    const int parent = static_cast<int>(nodes.size());
    nodes.push_back({nodes[a].weight + nodes[b].weight, true, created++});
    nodes[a].parent = parent;
    nodes[b].parent = parent;
    active.erase(active.begin(), active.begin() + 2);
    active.push_back(parent);
  }

  for (const Node& n : nodes) {
    if (n.internal) continue;
    int depth = 0;
    for (int p = n.parent; p != -1; p = nodes[p].parent) ++depth;
    lengths[n.order] = static_cast<std::uint8_t>(depth);
  }
  return HuffmanTable(lengths);
}

Bitstream encode(std::span<const std::uint8_t> data, const HuffmanTable& table) {
  Bitstream out;
  for (std::uint8_t b : data) {
    if (table.length(b) == 0) {
      throw Error(ErrorCode::kSymbolNotInTable,
                  "symbol " + std::to_string(b) + " has no codeword");
    }
    out.append(table.codeword(b));
  }
  return out;
}

std::vector<std::uint8_t> decode(const Bitstream& bits, const HuffmanTable& table,
                                 std::size_t symbol_count) {
  std::vector<std::uint8_t> out;
  out.reserve(symbol_count);
  BitReader reader(bits);
  while (out.size() < symbol_count) out.push_back(table.decode_symbol(reader));
  if (!reader.exhausted()) {
    throw Error(ErrorCode::kInvalidCode,
                std::to_string(reader.remaining()) +
                    " bits left over after the last symbol");
  }
  return out;
}

Bitstream serialize_table(const HuffmanTable& table) {
  Bitstream out;
  for (std::uint8_t len : table.code_lengths()) out.push_bits(len, 8);
  return out;
}

HuffmanTable parse_table(const Bitstream& bits) {
  if (bits.size() != kSerializedTableBits) {
    throw Error(ErrorCode::kWrongLength,
                "serialized table must be 2048 bits, got " +
                    std::to_string(bits.size()));
  }
  CodeLengths lengths{};
  for (int s = 0; s < kAlphabetSize; ++s) {
    lengths[s] = static_cast<std::uint8_t>(bits.read_bits(std::size_t(s) * 8, 8));
  }
  return HuffmanTable(lengths);
}

}  // namespace dctsteg
