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

#include <string>
#include <string_view>

namespace bnc::utf8 {

// Strict decode: rejects overlong forms, surrogates and values past U+10FFFF.
// Throws Error(kInvalidUtf8) with the byte offset of the bad sequence.
std::u32string decode(std::string_view bytes);

std::string encode(std::u32string_view text);

void append(std::string& out, char32_t cp);

// Number of bytes the UTF-8 form of `cp` occupies (1..4).
std::size_t encoded_size(char32_t cp);

bool is_scalar(char32_t cp);

}  // namespace bnc::utf8
