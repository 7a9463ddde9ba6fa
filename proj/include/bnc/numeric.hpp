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
#include <cstdint>
#include <string>
#include <string_view>

#include "bnc/digitset.hpp"
#include "bnc/natural.hpp"

namespace bnc {

// A run of digits read against a particular set. Leading value-0 digits are
// allowed; the empty string is not a number.
struct DigitString {
  std::u32string chars;
  DigitSet set;
};

// Sum of digit values times base^position, position 0 at the right.
// Throws kForeignDigit (with the index) or kEmptyDigits.
Natural evaluate_digits(std::u32string_view chars, const DigitSet& set);
inline Natural evaluate_digits(const DigitString& digits) {
  return evaluate_digits(digits.chars, digits.set);
}

// Shortest rendering of `value`, left-padded with the value-0 digit up to
// `min_width`.
DigitString render_digits(const Natural& value, const DigitSet& set,
                          std::size_t min_width = 0);

DigitString convert_chunk(const DigitString& chunk, const DigitSet& target,
                          std::size_t min_width = 0);

// Digits needed to write `value` in `base`; 1 for zero. kBadBase if base < 2.
std::size_t place_length(const Natural& value, std::uint32_t base);

}  // namespace bnc
