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
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bnc {

// An OEIS A-number. "40" and "A000040" name the same sequence.
struct SequenceKey {
  std::uint32_t number = 0;

  // Throws kBadKey unless `text` is 1..999999 in decimal or "A" followed by
  // exactly six digits.
  static SequenceKey parse(std::string_view text);
  std::string canonical() const;

  friend bool operator==(const SequenceKey&, const SequenceKey&) = default;
};

inline SequenceKey parse_key(std::string_view text) {
  return SequenceKey::parse(text);
}

enum class Builtin { kNaturals, kPrimes, kFibonacci, kConstant };

// A deterministic integer stream. Builtins are infinite (fibonacci stops
// once a term no longer fits in 64 bits), explicit lists repeat, OEIS
// sequences end with their b-file.
class SequenceProvider {
 public:
  enum class Kind { kBuiltin, kExplicit, kOeis };

  static SequenceProvider builtin(Builtin which, std::int64_t constant = 0);
  static SequenceProvider naturals() { return builtin(Builtin::kNaturals); }
  static SequenceProvider primes() { return builtin(Builtin::kPrimes); }
  static SequenceProvider fibonacci() { return builtin(Builtin::kFibonacci); }
  static SequenceProvider constant(std::int64_t k) {
    return builtin(Builtin::kConstant, k);
  }
  // Throws kInvalidConfig on an empty list.
  static SequenceProvider explicit_list(std::vector<std::int64_t> terms);
  static SequenceProvider oeis(SequenceKey key, std::vector<std::int64_t> terms);

  class Cursor {
   public:
    // nullopt once a finite sequence runs out.
    std::optional<std::int64_t> next();

   private:
    friend class SequenceProvider;
    struct State;
    explicit Cursor(std::shared_ptr<State> state) : state_(std::move(state)) {}
    std::shared_ptr<State> state_;
  };

  Cursor cursor() const;

  // First `n` terms; throws kSequenceExhausted if there are fewer.
  std::vector<std::int64_t> take(std::size_t n) const;

  Kind kind() const noexcept;

  // The OEIS entry this stream matches, if any (primes is A000040).
  std::optional<SequenceKey> key() const;

  // `primes`, `naturals`, `fibonacci`, `constant:<k>`, `list:<csv>` or the
  // canonical A-number.
  std::string spec() const;

 private:
  struct Source;
  explicit SequenceProvider(std::shared_ptr<const Source> source)
      : source_(std::move(source)) {}
  std::shared_ptr<const Source> source_;
};

// Looks up the provider for an OEIS key (cache or network).
using OeisLookup = std::function<SequenceProvider(const SequenceKey&)>;

// Inverse of SequenceProvider::spec(). A-numbers and bare decimal keys go
// through `lookup`; without one they fail with kNetworkError.
SequenceProvider parse_sequence_spec(std::string_view spec,
                                     const OeisLookup& lookup = {});

}  // namespace bnc
