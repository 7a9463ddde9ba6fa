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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bnc {

// Arbitrary-precision non-negative integer. Little-endian 32-bit limbs with
// no high zero limbs, so zero is the empty vector and equality is limb-wise.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t value);  // NOLINT: implicit on purpose

  static Natural power(std::uint32_t base, std::size_t exponent);

  // Throws Error(kNotNumeric) unless `digits` is a non-empty run of [0-9].
  static Natural from_decimal(std::string_view digits);

  bool is_zero() const noexcept { return limbs_.empty(); }
  std::size_t bit_length() const noexcept;
  std::optional<std::uint64_t> to_u64() const noexcept;
  std::string to_decimal() const;

  // *this = *this * multiplier + addend
  void mul_add(std::uint32_t multiplier, std::uint32_t addend);

  // *this /= divisor; returns the remainder. divisor must be non-zero.
  std::uint32_t div_mod(std::uint32_t divisor);

  Natural& operator+=(const Natural& rhs);
  // Precondition: *this >= rhs.
  Natural& operator-=(const Natural& rhs);

  friend Natural operator+(Natural lhs, const Natural& rhs) {
    return lhs += rhs;
  }
  friend Natural operator-(Natural lhs, const Natural& rhs) {
    return lhs -= rhs;
  }

  friend bool operator==(const Natural&, const Natural&) = default;
  friend std::strong_ordering operator<=>(const Natural& lhs,
                                          const Natural& rhs) noexcept;

  const std::vector<std::uint32_t>& limbs() const noexcept { return limbs_; }

 private:
  void trim() noexcept;

  std::vector<std::uint32_t> limbs_;
};

}  // namespace bnc
