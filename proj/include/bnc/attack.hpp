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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bnc/digitset.hpp"

namespace bnc::attack {

struct Candidate {
  std::uint32_t base = 0;
  std::string alphabet_rule;  // e.g. "digits+lower+space"
  std::u32string decoded;
  double score = 0;
};

// Conventional alphabets an attacker would try first: decimal digits, then
// lowercase letters, then space, then ASCII punctuation. 2 <= base <= 64.
DigitSet candidate_alphabet(std::uint32_t base);

// 0.5 * share of [a-z] and space + 0.5 * (1 - chi-square distance between
// the text's letter distribution and English), in [0, 1]. Empty text is 0.
double score_englishness(std::u32string_view text);

// Reads `cipher_body` as decimal numbers split on `separator` and renders
// them in every candidate alphabet with lo <= base <= hi. Sorted by score,
// ties to the smaller base. kNotNumeric on a non-decimal segment.
std::vector<Candidate> brute_force(std::u32string_view cipher_body,
                                   char32_t separator, std::uint32_t lo,
                                   std::uint32_t hi);

// `<rank>\t<base>\t<score, 4 decimals>\t<first 60 codepoints>` per line.
std::string format_report(const std::vector<Candidate>& candidates);

}  // namespace bnc::attack
