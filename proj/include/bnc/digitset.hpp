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
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bnc {

// Which codepoints a Unicode-rank digit set skips. Surrogates are never
// scalar values and are skipped under every policy.
struct ExclusionPolicy {
  bool exclude_c0c1_controls = true;
  bool exclude_noncharacters = true;
  bool exclude_bidi_controls = true;
  std::set<char32_t> extra;

  // C0/C1 controls, noncharacters and bidi controls.
  static ExclusionPolicy standard() { return {}; }
  static ExclusionPolicy surrogates_only() {
    return {.exclude_c0c1_controls = false,
            .exclude_noncharacters = false,
            .exclude_bidi_controls = false,
            .extra = {}};
  }

  bool excludes(char32_t cp) const;

  friend bool operator==(const ExclusionPolicy&,
                         const ExclusionPolicy&) = default;
};

enum class Preset { kDecimal, kHexUpper, kBase36, kBase37 };

std::string_view to_string(Preset preset);
std::optional<Preset> preset_from_name(std::string_view name);

// How a set was built. Used to print the shortest spec string for it.
struct DigitSetOrigin {
  enum class Kind { kExplicit, kUnicodeRange, kPreset };
  Kind kind = Kind::kExplicit;
  std::uint32_t range_base = 0;     // kUnicodeRange
  bool standard_policy = false;     // kUnicodeRange
  Preset preset = Preset::kDecimal;  // kPreset
  std::vector<std::uint64_t> permutation_seeds;  // applied in order

  bool is_permuted() const { return !permutation_seeds.empty(); }
};

// Ordered, duplicate-free digit inventory. The digit at index i has value i.
// Immutable; copies share storage.
class DigitSet {
 public:
  static DigitSet from_alphabet(std::u32string_view codepoints);
  static DigitSet from_unicode_range(
      std::uint32_t base,
      const ExclusionPolicy& policy = ExclusionPolicy::standard());
  static DigitSet preset(Preset which);

  // Parses `u<N>`, `p:<name>` or `a:<hex>,<hex>,...`, each optionally
  // followed by one or more `~perm:<seed>` suffixes.
  static DigitSet parse_spec(std::string_view spec);
  std::string spec() const;

  std::uint32_t base() const noexcept {
    return static_cast<std::uint32_t>(data_->codepoints.size());
  }
  const std::u32string& codepoints() const noexcept {
    return data_->codepoints;
  }
  const DigitSetOrigin& origin() const noexcept { return data_->origin; }

  // Precondition: value < base().
  char32_t char_of(std::uint32_t value) const {
    return data_->codepoints.at(value);
  }
  char32_t zero() const noexcept { return data_->codepoints[0]; }
  std::optional<std::uint32_t> value_of(char32_t cp) const noexcept;
  bool contains(char32_t cp) const noexcept { return value_of(cp).has_value(); }

  // Equal value maps; origin is ignored.
  friend bool operator==(const DigitSet& lhs, const DigitSet& rhs) noexcept {
    return lhs.data_ == rhs.data_ ||
           lhs.data_->codepoints == rhs.data_->codepoints;
  }

 private:
  struct Data {
    std::u32string codepoints;
    DigitSetOrigin origin;
    // Alphabet before any permutation; kept for sets that print as
    // `a:...~perm:...`.
    std::u32string unpermuted;
    // Dense codepoint -> value table when the codepoints are compact
    // enough, a hash map otherwise.
    std::vector<std::int32_t> dense;
    std::unordered_map<char32_t, std::uint32_t> sparse;
  };

  explicit DigitSet(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static DigitSet build(std::u32string codepoints, DigitSetOrigin origin,
                        std::u32string unpermuted = {});

  friend DigitSet permute(const DigitSet& set, std::uint64_t seed);

  std::shared_ptr<const Data> data_;
};

// Fisher-Yates over the digits, driven by splitmix64(seed). Bit-exact:
// for i = base-1 down to 1, swap index i with next() % (i + 1).
DigitSet permute(const DigitSet& set, std::uint64_t seed);

// Highest codepoint in `text` plus one, never below 2.
std::uint32_t minimal_source_base(std::u32string_view text);

// The splitmix64 generator used by permute(); exposed for tests and tools.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() noexcept;

 private:
  std::uint64_t state_;
};

}  // namespace bnc
