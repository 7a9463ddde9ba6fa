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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bnc/codec.hpp"
#include "bnc/digitset.hpp"
#include "bnc/natural.hpp"
#include "bnc/numeric.hpp"

namespace bnc::analysis {

struct LengthRow {
  Natural value;                     // 10^power
  std::vector<std::size_t> lengths;  // one per base
};

struct LengthTable {
  std::vector<std::uint32_t> bases;
  std::vector<LengthRow> rows;  // power 0, 1, ...

  // Header `value,base<b1>,...`, one row per power, LF endings.
  std::string to_csv() const;
};

// Place lengths of 10^0 .. 10^max_power in each base. kBadBase if any
// base < 2.
LengthTable length_table(std::size_t max_power,
                         const std::vector<std::uint32_t>& bases);

// Exact count ratio cipher/plain.
struct Ratio {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 0;

  double value() const {
    return denominator == 0 ? 0.0
                            : static_cast<double>(numerator) / denominator;
  }
};

struct CompressionReport {
  std::uint64_t plain_chars = 0;
  std::uint64_t plain_utf8_bytes = 0;
  std::uint64_t cipher_chars = 0;
  std::uint64_t cipher_utf8_bytes = 0;

  Ratio char_ratio() const { return {cipher_chars, plain_chars}; }
  Ratio byte_ratio() const { return {cipher_utf8_bytes, plain_utf8_bytes}; }
};

// Counts scalars and UTF-8 bytes on both sides. The header, if any, is not
// part of the cipher count; separators are.
CompressionReport compression_report(std::u32string_view plaintext,
                                     const CipherDocument& doc);

struct FrequencySignature {
  std::map<std::uint32_t, std::uint64_t> histogram;  // digit value -> count
  std::uint64_t total = 0;
  std::uint32_t base = 0;
  // Pearson's statistic against the uniform distribution over all `base`
  // digit values: sum (observed - N/base)^2 / (N/base).
  double chi_square = 0;

  // chi_square / (N * (base - 1)): 0 for a uniform body, 1 when every digit
  // is the same. Comparable across bases and body lengths.
  double normalized_chi_square() const;
};

// Separators must already be stripped. kForeignDigit on a non-member.
FrequencySignature digit_frequency(std::u32string_view body,
                                   const DigitSet& set);

// Sentences end at '.', '!' or '?'; tokens are whitespace-separated runs.
// Sentences without tokens are dropped.
std::vector<std::size_t> tokens_per_sentence(std::u32string_view text);

// Decimal digit values, most significant first, joined by '-': "ABC" in hex
// becomes "10-11-12".
std::string pretty_print_decomposition(const DigitString& digits);

}  // namespace bnc::analysis
