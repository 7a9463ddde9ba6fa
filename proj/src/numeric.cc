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

#include "bnc/numeric.hpp"

#include <algorithm>
#include <limits>

#include "bnc/error.hpp"

namespace bnc {

namespace {

// Largest power of `base` that still fits a limb, and its exponent. Lets the
// inner loops move a whole group of digits per big-number pass.
struct Group {
  std::uint32_t power;
  std::size_t digits;
};

Group limb_group(std::uint32_t base) {
  std::uint64_t power = base;
  std::size_t digits = 1;
  while (power * base <= std::numeric_limits<std::uint32_t>::max()) {
    power *= base;
    ++digits;
  }
  return {static_cast<std::uint32_t>(power), digits};
}

std::string hex(char32_t cp) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  do {
    out.insert(out.begin(), kHex[cp & 0xF]);
    cp >>= 4;
  } while (cp != 0);
  while (out.size() < 4) out.insert(out.begin(), '0');
  return out;
}

}  // namespace

Natural evaluate_digits(std::u32string_view chars, const DigitSet& set) {
  if (chars.empty()) {
    throw Error(Errc::kEmptyDigits, "the empty digit string has no value");
  }
  const std::uint32_t base = set.base();
  const Group group = limb_group(base);
  Natural value;
  std::size_t i = 0;
  while (i < chars.size()) {
    const std::size_t take = std::min(group.digits, chars.size() - i);
    std::uint32_t multiplier = 1;
    std::uint32_t acc = 0;
    for (std::size_t k = 0; k < take; ++k, ++i) {
      auto digit = set.value_of(chars[i]);
      if (!digit) {
        throw Error(Errc::kForeignDigit,
                    "U+" + hex(chars[i]) + " at index " + std::to_string(i) +
                        " is not a digit of " + set.spec(),
                    i);
      }
      acc = acc * base + *digit;
      multiplier *= base;
    }
    value.mul_add(multiplier, acc);
  }
  return value;
}

DigitString render_digits(const Natural& value, const DigitSet& set,
                          std::size_t min_width) {
  const std::uint32_t base = set.base();
  const Group group = limb_group(base);
  std::u32string out;
  Natural rest = value;
  while (!rest.is_zero()) {
    std::uint32_t low = rest.div_mod(group.power);
    for (std::size_t k = 0; k < group.digits; ++k) {
      if (rest.is_zero() && low == 0) break;
      out.push_back(set.char_of(low % base));
      low /= base;
    }
  }
  if (out.empty()) out.push_back(set.zero());
  if (out.size() < min_width) out.append(min_width - out.size(), set.zero());
  std::reverse(out.begin(), out.end());
  return {std::move(out), set};
}

DigitString convert_chunk(const DigitString& chunk, const DigitSet& target,
                          std::size_t min_width) {
  return render_digits(evaluate_digits(chunk), target, min_width);
}

std::size_t place_length(const Natural& value, std::uint32_t base) {
  if (base < 2) {
    throw Error(Errc::kBadBase,
                "base must be at least 2, got " + std::to_string(base));
  }
  const Group group = limb_group(base);
  Natural rest = value;
  std::size_t length = 0;
  while (!rest.is_zero()) {
    std::uint32_t low = rest.div_mod(group.power);
    if (rest.is_zero()) {
      while (low != 0) {
        ++length;
        low /= base;
      }
    } else {
      length += group.digits;
    }
  }
  return std::max<std::size_t>(length, 1);
}

}  // namespace bnc
