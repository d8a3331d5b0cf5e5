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

#ifndef DCTSTEG_ERROR_HPP_
#define DCTSTEG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dctsteg {

enum class ErrorCode {
  kIo,
  // PGM / container parsing
  kBadMagic,
  kBadHeader,
  kUnsupportedMaxval,
  kTruncated,
  // geometry
  kNotBlockAligned,
  kDimensionMismatch,
  // huffman
  kEmptyInput,
  kSymbolNotInTable,
  kInvalidCode,
  kTruncatedStream,
  kWrongLength,
  kKraftViolation,
  // payload frame
  kUnsupportedVersion,
  kTruncatedFrame,
  // embedding
  kPayloadTooLarge,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this exception; `code()` is
// stable and is what callers (and the CLI exit-status mapping) switch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dctsteg

#endif  // DCTSTEG_ERROR_HPP_
