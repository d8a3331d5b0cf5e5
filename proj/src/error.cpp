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

#include "dctsteg/error.hpp"

namespace dctsteg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kBadMagic: return "BadMagic";
    case ErrorCode::kBadHeader: return "BadHeader";
    case ErrorCode::kUnsupportedMaxval: return "UnsupportedMaxval";
    case ErrorCode::kTruncated: return "Truncated";
    case ErrorCode::kNotBlockAligned: return "NotBlockAligned";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kSymbolNotInTable: return "SymbolNotInTable";
    case ErrorCode::kInvalidCode: return "InvalidCode";
    case ErrorCode::kTruncatedStream: return "TruncatedStream";
    case ErrorCode::kWrongLength: return "WrongLength";
    case ErrorCode::kKraftViolation: return "KraftViolation";
    case ErrorCode::kUnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::kTruncatedFrame: return "TruncatedFrame";
    case ErrorCode::kPayloadTooLarge: return "PayloadTooLarge";
  }
  return "Unknown";
}

}  // namespace dctsteg
