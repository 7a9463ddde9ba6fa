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

#include <cctype>

#include "bnc/codec.hpp"
#include "bnc/error.hpp"
#include "bnc/numeric.hpp"

namespace bnc {

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_ascii_space(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_ascii_space(s[i])) ++i;
    if (i > start) words.push_back(s.substr(start, i - start));
  }
  return words;
}

Error unsupported(char c, std::size_t at) {
  return Error(Errc::kUnsupportedChar,
               std::string("unsupported character '") + c + "' at index " +
                   std::to_string(at),
               at);
}

}  // namespace

std::string encode_words(std::string_view sentence) {
  const DigitSet base36 = DigitSet::preset(Preset::kBase36);
  const DigitSet decimal = DigitSet::preset(Preset::kDecimal);
  const auto words = split_words(sentence);
  if (words.empty()) throw Error(Errc::kEmptyText, "no words to encode");

  std::string out;
  for (std::string_view word : words) {
    const std::size_t at = static_cast<std::size_t>(word.data() - sentence.data());
    const bool period = word.back() == '.';
    if (period) word.remove_suffix(1);
    if (word.empty()) throw unsupported('.', at);

    const bool capital = std::isupper(static_cast<unsigned char>(word[0]));
    std::u32string digits;
    for (std::size_t i = 0; i < word.size(); ++i) {
      const auto c = static_cast<unsigned char>(word[i]);
      if (std::isupper(c) && i == 0) {
        digits.push_back(static_cast<char32_t>(std::tolower(c)));
      } else if (std::islower(c) || std::isdigit(c)) {
        digits.push_back(c);
      } else {
        throw unsupported(word[i], at + i);
      }
    }
    if (!out.empty()) out += '-';
    if (capital) out += 'X';
    out += evaluate_digits(digits, base36).to_decimal();
    if (period) out += '.';
  }
  return out;
}

std::string decode_words(std::string_view cipher) {
  const DigitSet base36 = DigitSet::preset(Preset::kBase36);
  std::string out;
  std::size_t start = 0;
  while (start <= cipher.size()) {
    auto dash = cipher.find('-', start);
    if (dash == std::string_view::npos) dash = cipher.size();
    std::string_view token = cipher.substr(start, dash - start);
    const bool capital = token.starts_with('X');
    if (capital) token.remove_prefix(1);
    const bool period = token.ends_with('.');
    if (period) token.remove_suffix(1);

    std::string word;
    for (char32_t c : render_digits(Natural::from_decimal(token), base36).chars) {
      word.push_back(static_cast<char>(c));
    }
    if (capital) {
      word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
    }
    if (!out.empty()) out += ' ';
    out += word;
    if (period) out += '.';
    start = dash + 1;
  }
  return out;
}

}  // namespace bnc
