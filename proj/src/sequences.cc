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

#include "bnc/sequences.hpp"

#include <charconv>
#include <cstdio>
#include <limits>
#include <variant>

#include "bnc/error.hpp"

namespace bnc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (s.starts_with('+')) s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return v;
}

}  // namespace

SequenceKey SequenceKey::parse(std::string_view text) {
  const auto bad = [&] {
    return Error(Errc::kBadKey, "bad OEIS key '" + std::string(text) +
                                    "': expected e.g. 40 or A000040");
  };
  std::string_view digits = text;
  if (text.starts_with('A')) {
    digits.remove_prefix(1);
    if (digits.size() != 6) throw bad();
  }
  if (!all_digits(digits) || digits.size() > 6) throw bad();
  std::uint32_t n = 0;
  std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (n == 0) throw bad();
  return SequenceKey{n};
}

std::string SequenceKey::canonical() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "A%06u", number);
  return buf;
}

struct SequenceProvider::Source {
  Kind kind;
  Builtin builtin = Builtin::kNaturals;
  std::int64_t constant = 0;
  std::vector<std::int64_t> terms;  // explicit list or OEIS terms
  std::optional<SequenceKey> oeis_key;
};

struct SequenceProvider::Cursor::State {
  std::shared_ptr<const Source> source;
  std::size_t index = 0;
  // Builtin generator state.
  std::vector<std::int64_t> primes;
  // Cleared once a term no longer fits in 64 bits.
  std::optional<std::int64_t> fib_a = 1, fib_b = 1;
};

SequenceProvider SequenceProvider::builtin(Builtin which,
                                           std::int64_t constant) {
  auto s = std::make_shared<Source>();
  s->kind = Kind::kBuiltin;
  s->builtin = which;
  s->constant = constant;
  return SequenceProvider(std::move(s));
}

SequenceProvider SequenceProvider::explicit_list(
    std::vector<std::int64_t> terms) {
  if (terms.empty()) {
    throw Error(Errc::kInvalidConfig, "an explicit sequence needs a term");
  }
  auto s = std::make_shared<Source>();
  s->kind = Kind::kExplicit;
  s->terms = std::move(terms);
  return SequenceProvider(std::move(s));
}

SequenceProvider SequenceProvider::oeis(SequenceKey key,
                                        std::vector<std::int64_t> terms) {
  auto s = std::make_shared<Source>();
  s->kind = Kind::kOeis;
  s->oeis_key = key;
  s->terms = std::move(terms);
  return SequenceProvider(std::move(s));
}

SequenceProvider::Kind SequenceProvider::kind() const noexcept {
  return source_->kind;
}

std::optional<SequenceKey> SequenceProvider::key() const {
  if (source_->kind == Kind::kOeis) return source_->oeis_key;
  if (source_->kind != Kind::kBuiltin) return std::nullopt;
  switch (source_->builtin) {
    case Builtin::kNaturals: return SequenceKey{27};
    case Builtin::kPrimes: return SequenceKey{40};
    case Builtin::kFibonacci: return SequenceKey{45};
    case Builtin::kConstant: return std::nullopt;
  }
  return std::nullopt;
}

std::string SequenceProvider::spec() const {
  switch (source_->kind) {
    case Kind::kOeis:
      return source_->oeis_key->canonical();
    case Kind::kExplicit: {
      std::string out = "list:";
      for (std::size_t i = 0; i < source_->terms.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(source_->terms[i]);
      }
      return out;
    }
    case Kind::kBuiltin:
      switch (source_->builtin) {
        case Builtin::kNaturals: return "naturals";
        case Builtin::kPrimes: return "primes";
        case Builtin::kFibonacci: return "fibonacci";
        case Builtin::kConstant:
          return "constant:" + std::to_string(source_->constant);
      }
  }
  return "";
}

SequenceProvider::Cursor SequenceProvider::cursor() const {
  auto state = std::make_shared<Cursor::State>();
  state->source = source_;
  return Cursor(std::move(state));
}

std::optional<std::int64_t> SequenceProvider::Cursor::next() {
  State& st = *state_;
  const Source& src = *st.source;
  const std::size_t i = st.index++;
  switch (src.kind) {
    case Kind::kExplicit:
      return src.terms[i % src.terms.size()];
    case Kind::kOeis:
      if (i >= src.terms.size()) return std::nullopt;
      return src.terms[i];
    case Kind::kBuiltin:
      break;
  }
  switch (src.builtin) {
    case Builtin::kNaturals:
      return static_cast<std::int64_t>(i + 1);
    case Builtin::kConstant:
      return src.constant;
    case Builtin::kFibonacci: {
      if (!st.fib_a) return std::nullopt;
      const std::int64_t out = *st.fib_a;
      std::optional<std::int64_t> after;
      std::int64_t sum = 0;
      if (st.fib_b && !__builtin_add_overflow(out, *st.fib_b, &sum)) {
        after = sum;
      }
      st.fib_a = st.fib_b;
      st.fib_b = after;
      return out;
    }
    case Builtin::kPrimes: {
      std::int64_t candidate = st.primes.empty() ? 2 : st.primes.back() + 1;
      for (;; ++candidate) {
        bool prime = true;
        for (std::int64_t p : st.primes) {
          if (p * p > candidate) break;
          if (candidate % p == 0) {
            prime = false;
            break;
          }
        }
        if (prime) break;
      }
      st.primes.push_back(candidate);
      return candidate;
    }
  }
  return std::nullopt;
}

std::vector<std::int64_t> SequenceProvider::take(std::size_t n) const {
  std::vector<std::int64_t> out;
  out.reserve(n);
  Cursor c = cursor();
  while (out.size() < n) {
    auto term = c.next();
    if (!term) {
      throw Error(Errc::kSequenceExhausted,
                  spec() + " has only " + std::to_string(out.size()) +
                      " terms, " + std::to_string(n) + " requested");
    }
    out.push_back(*term);
  }
  return out;
}

SequenceProvider parse_sequence_spec(std::string_view spec,
                                     const OeisLookup& lookup) {
  if (spec == "primes") return SequenceProvider::primes();
  if (spec == "naturals") return SequenceProvider::naturals();
  if (spec == "fibonacci") return SequenceProvider::fibonacci();
  if (spec.starts_with("constant:")) {
    auto k = parse_int(spec.substr(9));
    if (!k) {
      throw Error(Errc::kInvalidConfig,
                  "bad constant sequence '" + std::string(spec) + "'");
    }
    return SequenceProvider::constant(*k);
  }
  if (spec.starts_with("list:")) {
    std::vector<std::int64_t> terms;
    std::string_view rest = spec.substr(5);
    while (true) {
      const auto comma = rest.find(',');
      auto term = parse_int(rest.substr(0, comma));
      if (!term) {
        throw Error(Errc::kInvalidConfig,
                    "bad list sequence '" + std::string(spec) + "'");
      }
      terms.push_back(*term);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return SequenceProvider::explicit_list(std::move(terms));
  }
  const SequenceKey key = SequenceKey::parse(spec);
  if (!lookup) {
    throw Error(Errc::kNetworkError,
                key.canonical() +
                    " needs the OEIS client; enable it or use a builtin such "
                    "as seq:primes");
  }
  return lookup(key);
}

}  // namespace bnc
