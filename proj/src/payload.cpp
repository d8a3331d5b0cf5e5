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

#include "dctsteg/payload.hpp"

#include <limits>
#include <string>

#include "dctsteg/error.hpp"

namespace dctsteg {

Bitstream serialize_header(const PayloadHeader& h) {
  Bitstream out;
  out.push_bits(h.magic, 16);
  out.push_bits(h.version, 8);
  out.push_bits(static_cast<std::uint8_t>(h.kind), 8);
  out.push_bits(h.width, 16);
  out.push_bits(h.height, 16);
  out.push_bits(h.symbol_count, 32);
  out.push_bits(h.payload_bit_length, 32);
  return out;
}

std::size_t frame_bits_for(std::size_t payload_bits) {
  const std::size_t raw = kFrameOverheadBits + payload_bits;
  return (raw + kGroupBits - 1) / kGroupBits * kGroupBits;
}

PayloadFrame build_frame(std::span<const std::uint8_t> secret, SecretKind kind,
                         std::uint16_t width, std::uint16_t height) {
  if (secret.empty()) {
    throw Error(ErrorCode::kEmptyInput, "secret is empty");
  }
  if (secret.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kPayloadTooLarge, "secret exceeds 2^32 - 1 bytes");
  }
  PayloadHeader header;
  header.kind = kind;
  if (kind == SecretKind::kImage) {
    if (std::size_t{width} * height != secret.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "image secret " + std::to_string(width) + "x" +
                      std::to_string(height) + " does not match " +
                      std::to_string(secret.size()) + " bytes");
    }
    header.width = width;
    header.height = height;
  }
  header.symbol_count = static_cast<std::uint32_t>(secret.size());

  const HuffmanTable table = build_table(secret);
  const Bitstream payload = encode(secret, table);
  if (payload.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kPayloadTooLarge, "encoded payload exceeds 2^32 - 1 bits");
  }
  header.payload_bit_length = static_cast<std::uint32_t>(payload.size());

  PayloadFrame frame;
  frame.bits = serialize_header(header);
  frame.bits.append(serialize_table(table));
  frame.bits.append(payload);
  frame.bits.pad_to_multiple(kGroupBits);
  return frame;
}

ParsedFrame parse_frame(const Bitstream& bits) {
  if (bits.size() >= 16 && bits.read_bits(0, 16) != kFrameMagic) {
    throw Error(ErrorCode::kBadMagic, "frame magic is not 0x5347");
  }
  if (bits.size() < kHeaderBits) {
    throw Error(ErrorCode::kTruncatedFrame,
                "frame shorter than its 128-bit header");
  }
  ParsedFrame out;
  PayloadHeader& h = out.header;
  h.magic = static_cast<std::uint16_t>(bits.read_bits(0, 16));
  h.version = static_cast<std::uint8_t>(bits.read_bits(16, 8));
  const auto kind = bits.read_bits(24, 8);
  h.width = static_cast<std::uint16_t>(bits.read_bits(32, 16));
  h.height = static_cast<std::uint16_t>(bits.read_bits(48, 16));
  h.symbol_count = static_cast<std::uint32_t>(bits.read_bits(64, 32));
  h.payload_bit_length = static_cast<std::uint32_t>(bits.read_bits(96, 32));

  if (h.version != kFrameVersion) {
    throw Error(ErrorCode::kUnsupportedVersion,
                "frame version " + std::to_string(h.version) + " is not supported");
  }
  if (kind > 1) {
    throw Error(ErrorCode::kBadHeader, "unknown secret kind " + std::to_string(kind));
  }
  h.kind = static_cast<SecretKind>(kind);
  if (h.symbol_count == 0) {
    throw Error(ErrorCode::kBadHeader, "frame declares zero symbols");
  }
  if (h.kind == SecretKind::kImage
          ? std::uint64_t{h.width} * h.height != h.symbol_count
          : (h.width != 0 || h.height != 0)) {
    throw Error(ErrorCode::kBadHeader, "secret dimensions inconsistent with kind");
  }

  const std::size_t needed = kFrameOverheadBits + h.payload_bit_length;
  if (bits.size() < needed) {
    throw Error(ErrorCode::kTruncatedFrame,
                "frame needs " + std::to_string(needed) + " bits, have " +
                    std::to_string(bits.size()));
  }
  out.table = parse_table(bits.slice(kHeaderBits, kSerializedTableBits));
  out.payload = bits.slice(kFrameOverheadBits, h.payload_bit_length);
  return out;
}

std::vector<std::uint8_t> decode_frame(const ParsedFrame& frame) {
  return decode(frame.payload, frame.table, frame.header.symbol_count);
}

std::vector<std::uint64_t> chunk_bits(const PayloadFrame& frame) {
  std::vector<std::uint64_t> groups(frame.bits.size() / kGroupBits);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    groups[i] = frame.bits.read_bits(i * kGroupBits, kGroupBits);
  }
  return groups;
}

}  // namespace dctsteg
