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

// Randomised round-trip and structural properties of the codec.

#include <gtest/gtest.h>

#include <random>

#include "bnc/codec.hpp"
#include "bnc/error.hpp"
#include "bnc/numeric.hpp"
#include "bnc/utf8.hpp"
#include "random_cases.hpp"

namespace bnc {
namespace {

using testing::Case;
using testing::pick;
using testing::random_case;
using testing::random_plan;
using testing::random_source;
using testing::random_target;
using testing::round_trip;
using testing::Rng;

TEST(CodecPropertyTest, RandomRoundTrips) {
  Rng rng(20260101);
  int checked = 0;
  int skipped = 0;
  while (checked < 1000) {
    const Case c = random_case(rng);
    std::u32string back;
    try {
      back = round_trip(c);
    } catch (const Error& e) {
      // Negative addends may legitimately push a chunk below zero.
      if (e.code() == Errc::kNegativeValue) {
        ++skipped;
        continue;
      }
      FAIL() << to_string(e.code()) << ": " << e.what() << "\n"
             << c.describe();
    }
    ASSERT_EQ(back, c.text) << c.describe();
    ++checked;
  }
  EXPECT_LT(skipped, 200);
}

TEST(CodecPropertyTest, ChunksConcatenateToTheText) {
  Rng rng(5);
  for (int round = 0; round < 300; ++round) {
    std::u32string text(1 + pick(rng, 500), U'a');
    for (auto& ch : text) ch = U'a' + static_cast<char32_t>(pick(rng, 26));
    const ChunkPlan plan = random_plan(rng);
    std::u32string joined;
    const auto chunks = chunk(text, plan);
    for (std::size_t i = 0; i < chunks.size(); ++i) {
      joined += chunks[i].text;
      if (i + 1 < chunks.size()) {
        EXPECT_EQ(chunks[i].text.size(), chunks[i].planned);
      }
    }
    EXPECT_EQ(joined, text);
  }
}

// Separator mode: each cipher chunk fits in pl(src^k - 1, dst). The one
// exception is an unpadded final chunk that starts with the zero digit,
// whose leading zeros are carried through verbatim.
TEST(CodecPropertyTest, CipherChunkWidthBound) {
  Rng rng(17);
  for (int round = 0; round < 300; ++round) {
    CodecConfig config;
    config.source = random_source(rng);
    config.target = DigitSet::preset(Preset::kHexUpper);
    config.plan = random_plan(rng);
    std::u32string text(1 + pick(rng, 300), U'\0');
    for (auto& ch : text) {
      ch = config.source->char_of(
          static_cast<std::uint32_t>(pick(rng, config.source->base())));
    }
    const CipherDocument doc = encode(text, config);
    const auto chunks = chunk(text, config.plan);
    ASSERT_EQ(doc.body.size(), chunks.size());
    for (std::size_t i = 0; i < chunks.size(); ++i) {
      const bool last = i + 1 == chunks.size();
      if (last && chunks[i].text.front() == config.source->zero()) continue;
      Natural bound = Natural::power(config.source->base(), chunks[i].planned);
      bound -= 1;
      EXPECT_LE(doc.body[i].size(), place_length(bound, 16));
    }
  }
}

TEST(CodecPropertyTest, ZeroAddendsChangeNothing) {
  Rng rng(23);
  for (int round = 0; round < 200; ++round) {
    Case c = random_case(rng);
    c.config.addends.clear();
    const CipherDocument plain = encode(c.text, c.config);
    c.config.addends.assign(1 + pick(rng, 5), 0);
    const CipherDocument zeroed = encode(c.text, c.config);
    EXPECT_EQ(plain.body, zeroed.body) << c.describe();
  }
}

TEST(CodecPropertyTest, ChainedEncodingsUnwind) {
  Rng rng(31);
  for (int round = 0; round < 100; ++round) {
    Case c = random_case(rng);
    c.config.header = HeaderMode::kHeadless;
    c.config.key_placement = KeyPlacement::kNone;
    c.config.addends.clear();
    if (!c.config.source) c.config.source = resolve_source(c.config, c.text);
    const std::u32string first = encode(c.text, c.config).body_text();

    // Second stage reads the first ciphertext as text over its own symbols.
    CodecConfig second;
    std::u32string symbols = c.config.target.codepoints();
    if (c.config.separator) symbols.push_back(*c.config.separator);
    second.source = DigitSet::from_alphabet(symbols);
    second.target = DigitSet::from_unicode_range(50000);
    second.separator = U'\U0010FFFD';
    second.plan = ChunkPlan::sequence(SequenceProvider::primes());
    const CipherDocument outer = encode(first, second);

    const std::u32string inner = decode(outer, second);
    ASSERT_EQ(inner, first);
    EXPECT_EQ(decode(parse_document(utf8::encode(inner), c.config.separator),
                     c.config),
              c.text)
        << c.describe();
  }
}

TEST(NumericPropertyTest, RenderEvaluateRoundTrip) {
  Rng rng(41);
  for (int round = 0; round < 300; ++round) {
    const DigitSet set = random_target(rng);
    Natural v;
    const std::size_t limbs = pick(rng, 129);  // up to 4096 bits
    for (std::size_t i = 0; i < limbs; ++i) {
      v.mul_add(0xFFFFFFFFu, static_cast<std::uint32_t>(rng()));
    }
    EXPECT_EQ(evaluate_digits(render_digits(v, set)), v);

    // Leading zeros come back when the width is given.
    std::u32string digits(1 + pick(rng, 40), set.zero());
    for (std::size_t i = pick(rng, digits.size()); i < digits.size(); ++i) {
      digits[i] = set.char_of(static_cast<std::uint32_t>(pick(rng, set.base())));
    }
    EXPECT_EQ(render_digits(evaluate_digits(digits, set), set, digits.size())
                  .chars,
              digits);
  }
}

TEST(NumericPropertyTest, ValueDependsOnlyOnTheValueMap) {
  Rng rng(43);
  for (int round = 0; round < 50; ++round) {
    const DigitSet ranked = DigitSet::from_unicode_range(2 + pick(rng, 5000));
    const DigitSet permuted = permute(ranked, rng());
    const DigitSet copy = DigitSet::from_alphabet(permuted.codepoints());
    std::u32string s(1 + pick(rng, 50), U'\0');
    for (auto& ch : s) ch = ranked.char_of(
        static_cast<std::uint32_t>(pick(rng, ranked.base())));
    EXPECT_EQ(evaluate_digits(s, permuted), evaluate_digits(s, copy));
    EXPECT_EQ(evaluate_digits(s, ranked),
              evaluate_digits(s, DigitSet::from_alphabet(ranked.codepoints())));
  }
}

}  // namespace
}  // namespace bnc
