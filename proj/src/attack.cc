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

#include "bnc/attack.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "bnc/error.hpp"
#include "bnc/natural.hpp"
#include "bnc/numeric.hpp"
#include "bnc/utf8.hpp"

namespace bnc::attack {

namespace {

constexpr std::u32string_view kDigitsLowerSpace =
    U"0123456789abcdefghijklmnopqrstuvwxyz ";
constexpr std::u32string_view kPunctuation =
    U".,;:!?'\"()-[]{}/\\@#$%&*+=_<>";

// Relative letter frequencies of English (percent), a-z. Standard values
// from large-corpus counts (Lewand, "Cryptological Mathematics").
constexpr std::array<double, 26> kEnglish = {
    8.167, 1.492, 2.782, 4.253, 12.702, 2.228, 2.015, 6.094, 6.966,
    0.153, 0.772, 4.025, 2.406, 6.749,  7.507, 1.929, 0.095, 5.987,
    6.327, 9.056, 2.758, 0.978, 2.360,  0.150, 1.974, 0.074};

std::string rule_for(std::uint32_t base) {
  if (base <= 10) return "digits";
  if (base <= 36) return "digits+lower";
  if (base == 37) return "digits+lower+space";
  return "digits+lower+space+punct";
}

}  // namespace

DigitSet candidate_alphabet(std::uint32_t base) {
  if (base < 2 || base > 64) {
    throw Error(Errc::kBadBase, "candidate alphabets cover bases 2..64, got " +
                                    std::to_string(base));
  }
  std::u32string cps(kDigitsLowerSpace.substr(0, std::min<std::size_t>(base, 37)));
  if (base > 37) cps += kPunctuation.substr(0, base - 37);
  return DigitSet::from_alphabet(cps);
}

double score_englishness(std::u32string_view text) {
  if (text.empty()) return 0;
  std::array<std::uint64_t, 26> counts{};
  std::uint64_t good = 0;
  std::uint64_t letters = 0;
  for (char32_t c : text) {
    if (c >= U'a' && c <= U'z') {
      ++counts[c - U'a'];
      ++letters;
      ++good;
    } else if (c == U' ') {
      ++good;
    }
  }
  double distance = 1;
  if (letters > 0) {
    double total = 0;
    for (double f : kEnglish) total += f;
    distance = 0;
    for (std::size_t i = 0; i < 26; ++i) {
      const double q = static_cast<double>(counts[i]) / letters;
      const double p = kEnglish[i] / total;
      if (p + q > 0) distance += (q - p) * (q - p) / (q + p);
    }
    distance *= 0.5;
  }
  const double shape = std::clamp(1.0 - distance, 0.0, 1.0);
  const double share = static_cast<double>(good) / text.size();
  return std::clamp(0.5 * share + 0.5 * shape, 0.0, 1.0);
}

std::vector<Candidate> brute_force(std::u32string_view cipher_body,
                                   char32_t separator, std::uint32_t lo,
                                   std::uint32_t hi) {
  std::vector<Natural> numbers;
  std::size_t start = 0;
  while (true) {
    const auto pos = cipher_body.find(separator, start);
    const std::u32string_view seg = cipher_body.substr(start, pos - start);
    std::string digits;
    for (std::size_t i = 0; i < seg.size(); ++i) {
      if (seg[i] < U'0' || seg[i] > U'9') {
        throw Error(Errc::kNotNumeric,
                    "segment at index " + std::to_string(start) +
                        " is not a decimal number",
                    start + i);
      }
      digits.push_back(static_cast<char>(seg[i]));
    }
    if (digits.empty()) {
      throw Error(Errc::kNotNumeric, "empty segment", start);
    }
    numbers.push_back(Natural::from_decimal(digits));
    if (pos == std::u32string_view::npos) break;
    start = pos + 1;
  }

  std::vector<Candidate> out;
  for (std::uint32_t b = lo; b <= hi; ++b) {
    const DigitSet alphabet = candidate_alphabet(b);
    Candidate c{b, rule_for(b), {}, 0};
    for (std::size_t i = 0; i < numbers.size(); ++i) {
      if (i != 0 && b < 37) c.decoded.push_back(U' ');
      c.decoded += render_digits(numbers[i], alphabet).chars;
    }
    c.score = score_englishness(c.decoded);
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Candidate& a, const Candidate& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return a.base < b.base;
                   });
  return out;
}

std::string format_report(const std::vector<Candidate>& candidates) {
  std::string out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Candidate& c = candidates[i];
    char score[32];
    std::snprintf(score, sizeof score, "%.4f", c.score);
    out += std::to_string(i + 1) + '\t' + std::to_string(c.base) + '\t' +
           score + '\t' +
           utf8::encode(std::u32string_view(c.decoded).substr(0, 60)) + '\n';
  }
  return out;
}

}  // namespace bnc::attack
