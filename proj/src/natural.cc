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

#include "bnc/natural.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "bnc/error.hpp"

namespace bnc {

namespace {

constexpr std::uint32_t kDecimalChunk = 1'000'000'000;
constexpr int kDecimalChunkDigits = 9;

}  // namespace

Natural::Natural(std::uint64_t value) {
  while (value != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value));
    value >>= 32;
  }
}

Natural Natural::power(std::uint32_t base, std::size_t exponent) {
  Natural result(1);
  for (std::size_t i = 0; i < exponent; ++i) result.mul_add(base, 0);
  return result;
}

Natural Natural::from_decimal(std::string_view digits) {
  if (digits.empty()) {
    throw Error(Errc::kNotNumeric, "empty decimal number");
  }
  Natural out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    if (c < '0' || c > '9') {
      throw Error(Errc::kNotNumeric,
                  std::string("not a decimal digit: '") + c + "'", i);
    }
    out.mul_add(10, static_cast<std::uint32_t>(c - '0'));
  }
  return out;
}

std::size_t Natural::bit_length() const noexcept {
  if (limbs_.empty()) return 0;
  return 32 * (limbs_.size() - 1) + std::bit_width(limbs_.back());
}

std::optional<std::uint64_t> Natural::to_u64() const noexcept {
  if (limbs_.size() > 2) return std::nullopt;
  std::uint64_t v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
  return v;
}

std::string Natural::to_decimal() const {
  if (is_zero()) return "0";
  Natural rest = *this;
  std::string out;
  while (!rest.is_zero()) {
    std::uint32_t group = rest.div_mod(kDecimalChunk);
    for (int k = 0; k < kDecimalChunkDigits; ++k) {
      out.push_back(static_cast<char>('0' + group % 10));
      group /= 10;
      if (rest.is_zero() && group == 0) break;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

void Natural::mul_add(std::uint32_t multiplier, std::uint32_t addend) {
  std::uint64_t carry = addend;
  for (auto& limb : limbs_) {
    const std::uint64_t t = std::uint64_t{limb} * multiplier + carry;
    limb = static_cast<std::uint32_t>(t);
    carry = t >> 32;
  }
  if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
  trim();
}

std::uint32_t Natural::div_mod(std::uint32_t divisor) {
  if (divisor == 0) throw std::domain_error("Natural::div_mod by zero");
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    const std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

Natural& Natural::operator+=(const Natural& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    const std::uint64_t t = std::uint64_t{limbs_[i]} +
                            (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0) +
                            carry;
    limbs_[i] = static_cast<std::uint32_t>(t);
    carry = t >> 32;
    if (carry == 0 && i >= rhs.limbs_.size()) break;
  }
  if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (*this < rhs) throw std::domain_error("Natural subtraction underflow");
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t t = std::int64_t{limbs_[i]} -
                     (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0) - borrow;
    borrow = t < 0 ? 1 : 0;
    if (t < 0) t += std::int64_t{1} << 32;
    limbs_[i] = static_cast<std::uint32_t>(t);
    if (borrow == 0 && i >= rhs.limbs_.size()) break;
  }
  trim();
  return *this;
}

std::strong_ordering operator<=>(const Natural& lhs,
                                 const Natural& rhs) noexcept {
  if (lhs.limbs_.size() != rhs.limbs_.size()) {
    return lhs.limbs_.size() <=> rhs.limbs_.size();
  }
  for (std::size_t i = lhs.limbs_.size(); i-- > 0;) {
    if (lhs.limbs_[i] != rhs.limbs_[i]) return lhs.limbs_[i] <=> rhs.limbs_[i];
  }
  return std::strong_ordering::equal;
}

void Natural::trim() noexcept {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

}  // namespace bnc
