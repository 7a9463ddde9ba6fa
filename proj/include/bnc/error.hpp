// Copyright 2026 The bnc Authors
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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bnc {

// Every failure the library reports. The CLI prints the variant name, so
// keep to_string() in sync when adding one.
enum class Errc {
  kDuplicateDigit,
  kSetTooSmall,
  kInvalidScalar,
  kSetExhausted,
  kBadSpec,
  kEmptyText,
  kEmptyDigits,
  kForeignDigit,
  kBadBase,
  kEscapeCollision,
  kSeparatorInTargetSet,
  kPadNotInSource,
  kPadCollision,
  kNegativeValue,
  kChunkOverflow,
  kMalformedBody,
  kBadChunkSize,
  kSequenceExhausted,
  kInvalidConfig,
  kKeyMismatch,
  kUnsupportedChar,
  kBadKey,
  kNetworkError,
  kParseError,
  kCacheWriteError,
  kNotNumeric,
  kInvalidUtf8,
  kIoError,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  Errc code() const noexcept { return code_; }

  // Index (or line number, for parse errors) the error refers to, if any.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  Errc code_;
  std::optional<std::size_t> position_;
};

}  // namespace bnc
