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

#include <gtest/gtest.h>

#include <random>

#include "bnc/error.hpp"
#include "oracles.hpp"

namespace bnc {
namespace {

using testing::BigInt;

const DigitSet& base36() {
  static const DigitSet set = DigitSet::preset(Preset::kBase36);
  return set;
}

TEST(NumericTest, EvaluatesWords) {
  EXPECT_EQ(evaluate_digits(U"this", base36()), Natural(1375732));
  EXPECT_EQ(evaluate_digits(U"is", base36()), Natural(676));
  EXPECT_EQ(evaluate_digits(U"an", base36()), Natural(383));
  EXPECT_EQ(evaluate_digits(U"example", base36()), Natural(32488192274));
}

TEST(NumericTest, HexIdentity) {
  const DigitSet hex = DigitSet::preset(Preset::kHexUpper);
  EXPECT_EQ(evaluate_digits(U"ABC", hex), Natural(12 + 11 * 16 + 10 * 256));
  EXPECT_EQ(render_digits(2748, hex).chars, U"ABC");
}

TEST(NumericTest, Errors) {
  try {
    evaluate_digits(U"", base36());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kEmptyDigits);
  }
  try {
    evaluate_digits(U"abcD", base36());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kForeignDigit);
    EXPECT_EQ(e.position(), 3u);
  }
  try {
    place_length(5, 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kBadBase);
  }
}

TEST(NumericTest, RenderZeroAndWidth) {
  const DigitSet dec = DigitSet::preset(Preset::kDecimal);
  EXPECT_EQ(render_digits(0, dec).chars, U"0");
  EXPECT_EQ(render_digits(42, dec, 6).chars, U"000042");
  EXPECT_EQ(render_digits(123456, dec, 3).chars, U"123456");
}

TEST(NumericTest, PlaceLength) {
  EXPECT_EQ(place_length(1000000, 2), 20u);
  EXPECT_EQ(place_length(1000000, 10), 7u);
  EXPECT_EQ(place_length(1000000, 16), 5u);
  EXPECT_EQ(place_length(0, 7), 1u);
  Natural v = Natural::power(121, 18);
  v -= 1;
  EXPECT_EQ(place_length(v, 50000), 8u);
}

TEST(NumericTest, ConvertChunk) {
  const DigitSet b37 = DigitSet::preset(Preset::kBase37);
  const DigitSet dec = DigitSet::preset(Preset::kDecimal);
  EXPECT_EQ(convert_chunk({U"this ", b37}, dec).chars, U"55237484");
  EXPECT_EQ(convert_chunk({U"is an", b37}, dec).chars, U"35202859");
}

// Large values and large bases against Boost.Multiprecision.
TEST(NumericTest, MatchesBigIntOracleForLongStrings) {
  std::mt19937_64 rng(11);
  for (std::uint32_t base : {2u, 3u, 10u, 37u, 255u, 256u, 257u, 65536u,
                             70001u, 1000003u}) {
    const DigitSet set = DigitSet::from_unicode_range(base);
    const std::u32string& alphabet = set.codepoints();
    std::uniform_int_distribution<std::uint32_t> digit(0, base - 1);
    for (int round = 0; round < 20; ++round) {
      std::u32string s(1 + rng() % 120, U'\0');
      for (auto& c : s) c = alphabet[digit(rng)];
      if (s[0] == set.zero()) s[0] = set.char_of(1);
      const Natural v = evaluate_digits(s, set);
      const BigInt expected = testing::evaluate_big(s, alphabet);
      EXPECT_EQ(v.to_decimal(), expected.str());
      EXPECT_EQ(render_digits(v, set).chars, s);
      EXPECT_EQ(place_length(v, base), s.size());
      EXPECT_EQ(place_length(v, 10), testing::place_length_by_division(
                                         expected, 10));
    }
  }
}

}  // namespace
}  // namespace bnc
