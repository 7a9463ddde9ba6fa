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

#include "bnc/analysis.hpp"

#include "bnc/error.hpp"
#include "bnc/utf8.hpp"

namespace bnc::analysis {

std::string LengthTable::to_csv() const {
  std::string out = "value";
  for (std::uint32_t b : bases) out += ",base" + std::to_string(b);
  out += '\n';
  for (const LengthRow& row : rows) {
    out += row.value.to_decimal();
    for (std::size_t len : row.lengths) out += ',' + std::to_string(len);
    out += '\n';
  }
  return out;
}

LengthTable length_table(std::size_t max_power,
                         const std::vector<std::uint32_t>& bases) {
  for (std::uint32_t b : bases) {
    if (b < 2) {
      throw Error(Errc::kBadBase,
                  "base must be at least 2, got " + std::to_string(b));
    }
  }
  LengthTable table{bases, {}};
  Natural value(1);
  for (std::size_t p = 0; p <= max_power; ++p) {
    LengthRow row{value, {}};
    for (std::uint32_t b : bases) row.lengths.push_back(place_length(value, b));
    table.rows.push_back(std::move(row));
    value.mul_add(10, 0);
  }
  return table;
}

CompressionReport compression_report(std::u32string_view plaintext,
                                     const CipherDocument& doc) {
  CompressionReport r;
  r.plain_chars = plaintext.size();
  for (char32_t c : plaintext) r.plain_utf8_bytes += utf8::encoded_size(c);
  const std::u32string body = doc.body_text();
  r.cipher_chars = body.size();
  for (char32_t c : body) r.cipher_utf8_bytes += utf8::encoded_size(c);
  return r;
}

double FrequencySignature::normalized_chi_square() const {
  if (total == 0 || base < 2) return 0;
  return chi_square / (static_cast<double>(total) * (base - 1));
}

FrequencySignature digit_frequency(std::u32string_view body,
                                   const DigitSet& set) {
  FrequencySignature sig;
  sig.base = set.base();
  for (std::size_t i = 0; i < body.size(); ++i) {
    auto v = set.value_of(body[i]);
    if (!v) {
      throw Error(Errc::kForeignDigit,
                  "codepoint at index " + std::to_string(i) +
                      " is not a digit of " + set.spec(),
                  i);
    }
    ++sig.histogram[*v];
  }
  sig.total = body.size();
  if (sig.total == 0) return sig;

  const double expected = static_cast<double>(sig.total) / sig.base;
  double sum = 0;
  for (const auto& [value, count] : sig.histogram) {
    const double d = static_cast<double>(count) - expected;
    sum += d * d / expected;
  }
  // Digits never seen contribute (0 - e)^2 / e = e each.
  sum += expected * static_cast<double>(sig.base - sig.histogram.size());
  sig.chi_square = sum;
  return sig;
}

std::vector<std::size_t> tokens_per_sentence(std::u32string_view text) {
  std::vector<std::size_t> out;
  std::size_t tokens = 0;
  bool in_token = false;
  for (char32_t c : text) {
    const bool terminator = c == U'.' || c == U'!' || c == U'?';
    const bool space = c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' ||
                       c == U'\f' || c == U'\v';
    if (terminator || space) {
      in_token = false;
    } else if (!in_token) {
      in_token = true;
      ++tokens;
    }
    if (terminator) {
      if (tokens > 0) out.push_back(tokens);
      tokens = 0;
    }
  }
  if (tokens > 0) out.push_back(tokens);
  return out;
}

std::string pretty_print_decomposition(const DigitString& digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.chars.size(); ++i) {
    auto v = digits.set.value_of(digits.chars[i]);
    if (!v) {
      throw Error(Errc::kForeignDigit,
                  "codepoint at index " + std::to_string(i) +
                      " is not a digit of " + digits.set.spec(),
                  i);
    }
    if (i != 0) out += '-';
    out += std::to_string(*v);
  }
  return out;
}

}  // namespace bnc::analysis
