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

#include "bnc/error.hpp"

namespace bnc {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kDuplicateDigit: return "DuplicateDigit";
    case Errc::kSetTooSmall: return "SetTooSmall";
    case Errc::kInvalidScalar: return "InvalidScalar";
    case Errc::kSetExhausted: return "SetExhausted";
    case Errc::kBadSpec: return "BadSpec";
    case Errc::kEmptyText: return "EmptyText";
    case Errc::kEmptyDigits: return "EmptyDigits";
    case Errc::kForeignDigit: return "ForeignDigit";
    case Errc::kBadBase: return "BadBase";
    case Errc::kEscapeCollision: return "EscapeCollision";
    case Errc::kSeparatorInTargetSet: return "SeparatorInTargetSet";
    case Errc::kPadNotInSource: return "PadNotInSource";
    case Errc::kPadCollision: return "PadCollision";
    case Errc::kNegativeValue: return "NegativeValue";
    case Errc::kChunkOverflow: return "ChunkOverflow";
    case Errc::kMalformedBody: return "MalformedBody";
    case Errc::kBadChunkSize: return "BadChunkSize";
    case Errc::kSequenceExhausted: return "SequenceExhausted";
    case Errc::kInvalidConfig: return "InvalidConfig";
    case Errc::kKeyMismatch: return "KeyMismatch";
    case Errc::kUnsupportedChar: return "UnsupportedChar";
    case Errc::kBadKey: return "BadKey";
    case Errc::kNetworkError: return "NetworkError";
    case Errc::kParseError: return "ParseError";
    case Errc::kCacheWriteError: return "CacheWriteError";
    case Errc::kNotNumeric: return "NotNumeric";
    case Errc::kInvalidUtf8: return "InvalidUtf8";
    case Errc::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(message), code_(code), position_(position) {}

}  // namespace bnc
