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

// Reference computations the tests compare the library against. None of
// these call into bnc; they are the slow, obvious versions.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bnc::testing {

using BigInt = boost::multiprecision::cpp_int;

// Repeated division, most significant digit first.
inline std::u32string render_by_division(std::uint64_t value,
                                         std::u32string_view alphabet) {
  const std::uint64_t base = alphabet.size();
  std::u32string out;
  do {
    out.insert(out.begin(), alphabet[value % base]);
    value /= base;
  } while (value != 0);
  return out;
}

inline std::size_t place_length_by_division(BigInt value, std::uint32_t base) {
  std::size_t n = 1;
  while (value >= base) {
    value /= base;
    ++n;
  }
  return n;
}

inline BigInt evaluate_big(std::u32string_view digits,
                           std::u32string_view alphabet) {
  BigInt v = 0;
  for (char32_t c : digits) {
    v = v * alphabet.size() + alphabet.find(c);
  }
  return v;
}

inline std::u32string render_big(BigInt value, std::u32string_view alphabet) {
  const BigInt base = alphabet.size();
  std::u32string out;
  do {
    const BigInt digit = value % base;
    out.insert(out.begin(), alphabet[static_cast<std::size_t>(digit)]);
    value /= base;
  } while (value != 0);
  return out;
}

// The default exclusion list, written out independently of ExclusionPolicy.
inline bool default_excluded(char32_t cp) {
  return cp <= 0x1F || (cp >= 0x7F && cp <= 0x9F) ||
         (cp >= 0xD800 && cp <= 0xDFFF) || (cp >= 0xFDD0 && cp <= 0xFDEF) ||
         (cp & 0xFFFF) == 0xFFFE || (cp & 0xFFFF) == 0xFFFF || cp == 0x200E ||
         cp == 0x200F || (cp >= 0x202A && cp <= 0x202E) ||
         (cp >= 0x2066 && cp <= 0x2069);
}

inline std::u32string first_surviving(std::size_t count) {
  std::u32string out;
  for (char32_t cp = 0; cp <= 0x10FFFF && out.size() < count; ++cp) {
    if (!default_excluded(cp)) out.push_back(cp);
  }
  return out;
}

}  // namespace bnc::testing
