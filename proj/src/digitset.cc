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

#include "bnc/digitset.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <unordered_map>
#include <utility>

#include "bnc/error.hpp"
#include "bnc/utf8.hpp"

namespace bnc {

namespace {

constexpr char32_t kMaxScalar = 0x10FFFF;

bool is_noncharacter(char32_t cp) {
  return (cp >= 0xFDD0 && cp <= 0xFDEF) || (cp & 0xFFFE) == 0xFFFE;
}

bool is_bidi_control(char32_t cp) {
  return cp == 0x200E || cp == 0x200F || (cp >= 0x202A && cp <= 0x202E) ||
         (cp >= 0x2066 && cp <= 0x2069);
}

std::u32string ascii(std::string_view s) { return {s.begin(), s.end()}; }

std::string hex_codepoint(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%X", static_cast<unsigned>(cp));
  return buf;
}

std::optional<std::uint64_t> parse_unsigned(std::string_view s, int radix) {
  if (s.empty()) return std::nullopt;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, radix);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

bool ExclusionPolicy::excludes(char32_t cp) const {
  if (cp >= 0xD800 && cp <= 0xDFFF) return true;
  if (exclude_c0c1_controls && (cp <= 0x1F || (cp >= 0x7F && cp <= 0x9F))) {
    return true;
  }
  if (exclude_noncharacters && is_noncharacter(cp)) return true;
  if (exclude_bidi_controls && is_bidi_control(cp)) return true;
  return extra.contains(cp);
}

std::string_view to_string(Preset preset) {
  switch (preset) {
    case Preset::kDecimal: return "decimal";
    case Preset::kHexUpper: return "hexUpper";
    case Preset::kBase36: return "base36";
    case Preset::kBase37: return "base37";
  }
  return "";
}

std::optional<Preset> preset_from_name(std::string_view name) {
  for (Preset p : {Preset::kDecimal, Preset::kHexUpper, Preset::kBase36,
                   Preset::kBase37}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

DigitSet DigitSet::build(std::u32string codepoints, DigitSetOrigin origin,
                         std::u32string unpermuted) {
  auto data = std::make_shared<Data>();
  data->unpermuted = std::move(unpermuted);
  const char32_t max_cp =
      *std::max_element(codepoints.begin(), codepoints.end());
  const bool use_dense =
      max_cp < std::max<std::size_t>(0x10000, 8 * codepoints.size());
  if (use_dense) {
    data->dense.assign(std::size_t{max_cp} + 1, -1);
  } else {
    data->sparse.reserve(codepoints.size());
  }
  for (std::size_t i = 0; i < codepoints.size(); ++i) {
    const char32_t cp = codepoints[i];
    if (!utf8::is_scalar(cp)) {
      throw Error(Errc::kInvalidScalar,
                  "U+" + hex_codepoint(cp) + " is not a Unicode scalar value",
                  i);
    }
    bool inserted = true;
    if (use_dense) {
      inserted = data->dense[cp] < 0;
      if (inserted) data->dense[cp] = static_cast<std::int32_t>(i);
    } else {
      inserted = data->sparse.emplace(cp, static_cast<std::uint32_t>(i)).second;
    }
    if (!inserted) {
      throw Error(Errc::kDuplicateDigit,
                  "duplicate digit U+" + hex_codepoint(cp), i);
    }
  }
  data->codepoints = std::move(codepoints);
  data->origin = std::move(origin);
  return DigitSet(std::move(data));
}

std::optional<std::uint32_t> DigitSet::value_of(char32_t cp) const noexcept {
  if (!data_->dense.empty()) {
    if (cp >= data_->dense.size() || data_->dense[cp] < 0) return std::nullopt;
    return static_cast<std::uint32_t>(data_->dense[cp]);
  }
  auto it = data_->sparse.find(cp);
  if (it == data_->sparse.end()) return std::nullopt;
  return it->second;
}

DigitSet DigitSet::from_alphabet(std::u32string_view codepoints) {
  if (codepoints.size() < 2) {
    throw Error(Errc::kSetTooSmall, "a digit set needs at least two digits");
  }
  return build(std::u32string(codepoints), DigitSetOrigin{},
               std::u32string(codepoints));
}

DigitSet DigitSet::from_unicode_range(std::uint32_t base,
                                      const ExclusionPolicy& policy) {
  if (base < 2) {
    throw Error(Errc::kSetTooSmall, "a digit set needs at least two digits");
  }
  std::u32string cps;
  cps.reserve(base);
  for (char32_t cp = 0; cp <= kMaxScalar && cps.size() < base; ++cp) {
    if (!policy.excludes(cp)) cps.push_back(cp);
  }
  if (cps.size() < base) {
    throw Error(Errc::kSetExhausted,
                "only " + std::to_string(cps.size()) +
                    " codepoints survive the exclusion policy, base " +
                    std::to_string(base) + " requested");
  }
  DigitSetOrigin origin{.kind = DigitSetOrigin::Kind::kUnicodeRange,
                        .range_base = base,
                        .standard_policy = policy == ExclusionPolicy::standard(),
                        .preset = Preset::kDecimal,
                        .permutation_seeds = {}};
  std::u32string root = origin.standard_policy ? std::u32string() : cps;
  return build(std::move(cps), std::move(origin), std::move(root));
}

DigitSet DigitSet::preset(Preset which) {
  static const std::u32string kDigits = ascii("0123456789");
  static const std::u32string kLower = ascii("abcdefghijklmnopqrstuvwxyz");
  std::u32string cps;
  switch (which) {
    case Preset::kDecimal: cps = kDigits; break;
    case Preset::kHexUpper: cps = kDigits + ascii("ABCDEF"); break;
    case Preset::kBase36: cps = kDigits + kLower; break;
    case Preset::kBase37: cps = kDigits + kLower + U' '; break;
  }
  return build(std::move(cps), DigitSetOrigin{.kind = DigitSetOrigin::Kind::kPreset,
                                              .range_base = 0,
                                              .standard_policy = false,
                                              .preset = which,
                                              .permutation_seeds = {}});
}

std::uint64_t SplitMix64::next() noexcept {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

DigitSet permute(const DigitSet& set, std::uint64_t seed) {
  std::u32string cps = set.codepoints();
  SplitMix64 rng(seed);
  for (std::size_t i = cps.size() - 1; i >= 1; --i) {
    const std::size_t j = rng.next() % (i + 1);
    std::swap(cps[i], cps[j]);
  }
  DigitSetOrigin origin = set.origin();
  origin.permutation_seeds.push_back(seed);
  return DigitSet::build(std::move(cps), std::move(origin),
                         set.data_->unpermuted);
}

std::string DigitSet::spec() const {
  const DigitSetOrigin& o = origin();
  std::string out;
  if (o.kind == DigitSetOrigin::Kind::kPreset) {
    out = "p:" + std::string(to_string(o.preset));
  } else if (o.kind == DigitSetOrigin::Kind::kUnicodeRange &&
             o.standard_policy) {
    out = "u" + std::to_string(o.range_base);
  } else {
    out = "a:";
    const std::u32string& root = data_->unpermuted;
    for (std::size_t i = 0; i < root.size(); ++i) {
      if (i != 0) out += ',';
      out += hex_codepoint(root[i]);
    }
  }
  for (std::uint64_t seed : o.permutation_seeds) {
    out += "~perm:" + std::to_string(seed);
  }
  return out;
}

DigitSet DigitSet::parse_spec(std::string_view spec) {
  constexpr std::string_view kPerm = "~perm:";
  const auto bad = [&](const std::string& why) {
    return Error(Errc::kBadSpec,
                 "bad digit set spec '" + std::string(spec) + "': " + why);
  };

  std::vector<std::uint64_t> seeds;
  std::string_view head = spec;
  if (auto pos = spec.find(kPerm); pos != std::string_view::npos) {
    head = spec.substr(0, pos);
    std::string_view rest = spec.substr(pos);
    while (!rest.empty()) {
      if (!rest.starts_with(kPerm)) throw bad("expected ~perm:<seed>");
      rest.remove_prefix(kPerm.size());
      const auto next = rest.find('~');
      auto seed = parse_unsigned(rest.substr(0, next), 10);
      if (!seed) throw bad("permutation seed is not a decimal integer");
      seeds.push_back(*seed);
      rest = next == std::string_view::npos ? std::string_view{}
                                            : rest.substr(next);
    }
  }

  std::optional<DigitSet> set;
  if (head.starts_with("u")) {
    auto n = parse_unsigned(head.substr(1), 10);
    if (!n || *n > kMaxScalar + 1) throw bad("expected u<decimal base>");
    set = from_unicode_range(static_cast<std::uint32_t>(*n));
  } else if (head.starts_with("p:")) {
    auto preset_name = preset_from_name(head.substr(2));
    if (!preset_name) throw bad("unknown preset");
    set = preset(*preset_name);
  } else if (head.starts_with("a:")) {
    std::u32string cps;
    std::string_view list = head.substr(2);
    while (true) {
      const auto comma = list.find(',');
      auto cp = parse_unsigned(list.substr(0, comma), 16);
      if (!cp || *cp > 0xFFFFFFFF) throw bad("expected hex codepoint list");
      cps.push_back(static_cast<char32_t>(*cp));
      if (comma == std::string_view::npos) break;
      list.remove_prefix(comma + 1);
    }
    set = from_alphabet(cps);
  } else {
    throw bad("expected u<N>, p:<preset> or a:<hex list>");
  }
  for (std::uint64_t seed : seeds) set = permute(*set, seed);
  return *set;
}

std::uint32_t minimal_source_base(std::u32string_view text) {
  if (text.empty()) {
    throw Error(Errc::kEmptyText, "cannot derive a base from empty text");
  }
  const char32_t max_cp = *std::max_element(text.begin(), text.end());
  return std::max<std::uint32_t>(2, static_cast<std::uint32_t>(max_cp) + 1);
}

}  // namespace bnc
