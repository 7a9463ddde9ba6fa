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

#include "bnc/codec.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>

#include "bnc/error.hpp"
#include "bnc/numeric.hpp"
#include "bnc/utf8.hpp"

namespace bnc {

namespace {

// Largest A-number; prefix/suffix key chunks in fixed-width mode are padded
// to the width of this value.
constexpr std::uint32_t kMaxKeyNumber = 999999;

Natural add_signed(Natural value, std::int64_t addend, std::size_t index) {
  if (addend >= 0) return value += Natural(static_cast<std::uint64_t>(addend));
  const Natural magnitude(static_cast<std::uint64_t>(-(addend + 1)) + 1);
  if (value < magnitude) {
    throw Error(Errc::kNegativeValue,
                "chunk " + std::to_string(index) + " would become negative",
                index);
  }
  return value -= magnitude;
}

std::size_t leading_zeros(std::u32string_view digits, char32_t zero) {
  std::size_t n = 0;
  while (n < digits.size() && digits[n] == zero) ++n;
  return n;
}

Natural evaluate_at(std::u32string_view digits, const DigitSet& set,
                    std::size_t offset) {
  try {
    return evaluate_digits(digits, set);
  } catch (const Error& e) {
    if (e.code() != Errc::kForeignDigit || !e.position()) throw;
    const std::size_t at = offset + *e.position();
    char cp[16];
    std::snprintf(cp, sizeof cp, "U+%04X",
                  static_cast<unsigned>(digits[*e.position()]));
    throw Error(Errc::kForeignDigit,
                std::string(cp) + " at index " + std::to_string(at) +
                    " is not a digit of " + set.spec(),
                at);
  }
}

// Powers of the source base, memoised per chunk length because plans repeat
// the same few sizes.
class PowerTable {
 public:
  explicit PowerTable(std::uint32_t base) : base_(base) {}

  // base^k
  const Natural& power(std::size_t k) {
    auto it = powers_.find(k);
    if (it == powers_.end()) {
      it = powers_.emplace(k, Natural::power(base_, k)).first;
    }
    return it->second;
  }

  // base^1 + ... + base^k: the number of non-empty strings of length <= k.
  const Natural& power_sum(std::size_t k) {
    auto it = sums_.find(k);
    if (it == sums_.end()) {
      Natural sum;
      Natural p(1);
      for (std::size_t l = 1; l <= k; ++l) {
        p.mul_add(base_, 0);
        sum += p;
      }
      it = sums_.emplace(k, std::move(sum)).first;
    }
    return it->second;
  }

 private:
  std::uint32_t base_;
  std::map<std::size_t, Natural> powers_;
  std::map<std::size_t, Natural> sums_;
};

std::optional<SequenceKey> placement_key(const CodecConfig& config) {
  if (config.key_placement == KeyPlacement::kNone) return std::nullopt;
  if (config.header == HeaderMode::kSelfDescribing) {
    throw Error(Errc::kInvalidConfig,
                "key placement cannot be combined with a self-describing "
                "header");
  }
  std::optional<SequenceKey> key;
  if (config.plan.provider()) key = config.plan.provider()->key();
  if (!key) {
    throw Error(Errc::kInvalidConfig,
                "key placement needs a chunk plan backed by an OEIS sequence");
  }
  return key;
}

std::int64_t addend_at(const std::vector<std::int64_t>& addends,
                       std::size_t i) {
  return addends.empty() ? 0 : addends[i % addends.size()];
}

// Width of every cipher chunk in separator-less mode. Depends only on the
// plan and config, so the decoder can slice the body without knowing which
// chunk is last. Unpadded final chunks carry their length folded into the
// value, hence the power sum.
std::size_t dense_width(PowerTable& powers, std::size_t planned,
                        std::size_t index, const CodecConfig& config,
                        std::optional<SequenceKey> key) {
  Natural bound = config.pad ? powers.power(planned)
                             : powers.power_sum(planned);
  bound -= Natural(1);
  if (const auto a = addend_at(config.addends, index); a > 0) {
    bound += Natural(static_cast<std::uint64_t>(a));
  }
  if (index == 0 && config.key_placement == KeyPlacement::kAddToFirst) {
    bound += Natural(key->number);
  }
  return place_length(bound, config.target.base());
}

std::vector<std::u32string> split(std::u32string_view text, char32_t sep) {
  std::vector<std::u32string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::u32string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void check_separator(const CodecConfig& config) {
  if (config.separator && config.target.contains(*config.separator)) {
    throw Error(Errc::kSeparatorInTargetSet,
                "separator is a digit of the target set " +
                    config.target.spec());
  }
}

}  // namespace

// --- ChunkPlan -------------------------------------------------------------

ChunkPlan ChunkPlan::fixed(std::size_t k) {
  if (k == 0) throw Error(Errc::kBadChunkSize, "chunk size must be >= 1");
  ChunkPlan plan;
  plan.fixed_ = k;
  return plan;
}

ChunkPlan ChunkPlan::sequence(SequenceProvider provider) {
  ChunkPlan plan;
  plan.provider_ = std::move(provider);
  return plan;
}

std::string ChunkPlan::spec() const {
  if (is_fixed()) return "fixed:" + std::to_string(fixed_);
  return "seq:" + provider_->spec();
}

ChunkPlan ChunkPlan::parse(std::string_view spec, const OeisLookup& lookup) {
  if (spec.starts_with("fixed:")) {
    const std::string_view digits = spec.substr(6);
    std::size_t k = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (digits.empty() || ec != std::errc() ||
        ptr != digits.data() + digits.size()) {
      throw Error(Errc::kInvalidConfig,
                  "bad chunk plan '" + std::string(spec) + "'");
    }
    return fixed(k);
  }
  if (spec.starts_with("seq:")) {
    return sequence(parse_sequence_spec(spec.substr(4), lookup));
  }
  throw Error(Errc::kInvalidConfig, "bad chunk plan '" + std::string(spec) +
                                        "': expected fixed:<k> or seq:<key>");
}

ChunkPlan::Cursor::Cursor(const ChunkPlan& plan) : fixed_(plan.fixed_) {
  if (plan.provider_) terms_ = plan.provider_->cursor();
}

std::size_t ChunkPlan::Cursor::next() {
  const std::size_t index = index_++;
  if (!terms_) return fixed_;
  auto term = terms_->next();
  if (!term) {
    throw Error(Errc::kSequenceExhausted,
                "chunk sequence ran out after " + std::to_string(index) +
                    " terms",
                index);
  }
  if (*term < 1) {
    throw Error(Errc::kBadChunkSize,
                "sequence term " + std::to_string(index) + " is " +
                    std::to_string(*term) + "; chunk sizes must be >= 1",
                index);
  }
  return static_cast<std::size_t>(*term);
}

std::string_view to_string(KeyPlacement placement) {
  switch (placement) {
    case KeyPlacement::kNone: return "none";
    case KeyPlacement::kPrefix: return "prefix";
    case KeyPlacement::kSuffix: return "suffix";
    case KeyPlacement::kAddToFirst: return "addToFirst";
  }
  return "";
}

std::optional<KeyPlacement> key_placement_from_name(std::string_view name) {
  for (auto p : {KeyPlacement::kNone, KeyPlacement::kPrefix,
                 KeyPlacement::kSuffix, KeyPlacement::kAddToFirst}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

// --- documents -------------------------------------------------------------

std::optional<char32_t> default_separator(const DigitSet& target) {
  if (target.contains(U'-')) return std::nullopt;
  return U'-';
}

std::u32string CipherDocument::body_text() const {
  std::u32string out;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (i != 0 && separator) out.push_back(*separator);
    out += body[i];
  }
  return out;
}

std::string CipherDocument::serialize() const {
  std::string out;
  if (header) {
    out += *header;
    out.push_back('\n');
  }
  out += utf8::encode(body_text());
  return out;
}

// --- pipeline steps --------------------------------------------------------

std::u32string escape_newlines(std::u32string_view text,
                               std::u32string_view escape) {
  if (escape.empty()) {
    throw Error(Errc::kInvalidConfig, "newline escape must not be empty");
  }
  if (auto pos = text.find(escape); pos != std::u32string_view::npos) {
    throw Error(Errc::kEscapeCollision,
                "escape sequence already occurs in the text", pos);
  }
  std::u32string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    if (c == U'\n') {
      out += escape;
    } else {
      out.push_back(c);
    }
  }
  // An escape that overlaps its own neighbours (e.g. "aa" next to 'a') would
  // not read back the same way.
  if (unescape_newlines(out, escape) != text) {
    throw Error(Errc::kEscapeCollision,
                "escape sequence overlaps the surrounding text");
  }
  return out;
}

std::u32string unescape_newlines(std::u32string_view text,
                                 std::u32string_view escape) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text.substr(i, escape.size()) == escape) {
      out.push_back(U'\n');
      i += escape.size();
    } else {
      out.push_back(text[i++]);
    }
  }
  return out;
}

std::vector<Chunk> chunk(std::u32string_view text, const ChunkPlan& plan) {
  if (text.empty()) throw Error(Errc::kEmptyText, "nothing to chunk");
  std::vector<Chunk> out;
  auto sizes = plan.cursor();
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t planned = sizes.next();
    out.push_back({text.substr(pos, planned), planned});
    pos += out.back().text.size();
  }
  return out;
}

std::vector<Natural> apply_addends(std::vector<Natural> values,
                                   const std::vector<std::int64_t>& addends) {
  if (addends.empty()) return values;
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = add_signed(std::move(values[i]), addend_at(addends, i), i);
  }
  return values;
}

std::vector<Natural> remove_addends(std::vector<Natural> values,
                                    const std::vector<std::int64_t>& addends) {
  if (addends.empty()) return values;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::int64_t a = addend_at(addends, i);
    if (a >= 0) {
      values[i] = add_signed(std::move(values[i]), -a, i);
    } else {
      values[i] += Natural(static_cast<std::uint64_t>(-(a + 1)) + 1);
    }
  }
  return values;
}

DigitSet resolve_source(const CodecConfig& config, std::u32string_view text) {
  if (config.source) return *config.source;
  return DigitSet::from_unicode_range(minimal_source_base(text));
}

CipherDocument encode(std::u32string_view text, const CodecConfig& config) {
  check_separator(config);
  if (text.empty()) throw Error(Errc::kEmptyText, "nothing to encode");
  const std::u32string escaped = config.newline_escape.empty()
                                     ? std::u32string(text)
                                     : escape_newlines(text,
                                                       config.newline_escape);
  const DigitSet source = resolve_source(config, escaped);
  if (config.pad && !source.contains(*config.pad)) {
    throw Error(Errc::kPadNotInSource,
                "pad codepoint is not a digit of the source set");
  }
  const auto key = placement_key(config);
  const bool dense = !config.separator;
  const bool padded = config.pad.has_value();
  const DigitSet& target = config.target;

  const std::vector<Chunk> chunks = chunk(escaped, config.plan);
  std::vector<Natural> values;
  values.reserve(chunks.size());
  std::size_t offset = 0;
  std::size_t final_zero_run = 0;
  PowerTable powers(source.base());
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    const Chunk& c = chunks[i];
    const bool last = i + 1 == chunks.size();
    std::u32string digits(c.text);
    if (last && padded) {
      if (auto pos = digits.find(*config.pad); pos != std::u32string::npos) {
        throw Error(Errc::kPadCollision,
                    "pad codepoint occurs in the final chunk", offset + pos);
      }
      digits.append(c.planned - digits.size(), *config.pad);
    }
    Natural v = evaluate_at(digits, source, offset);
    if (last && !padded) {
      if (dense) {
        // Fold the length in: strings shorter than L come first.
        v += powers.power_sum(digits.size() - 1);
      } else {
        const std::size_t z = leading_zeros(digits, source.zero());
        final_zero_run = z == digits.size() ? z - 1 : z;
      }
    }
    values.push_back(std::move(v));
    offset += c.text.size();
  }

  values = apply_addends(std::move(values), config.addends);
  if (config.key_placement == KeyPlacement::kAddToFirst) {
    values[0] += Natural(key->number);
  }

  CipherDocument doc;
  doc.separator = config.separator;
  doc.body.reserve(chunks.size() + 1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const bool last = i + 1 == values.size();
    if (dense) {
      const std::size_t width =
          dense_width(powers, chunks[i].planned, i, config, key);
      doc.body.push_back(render_digits(values[i], target, width).chars);
    } else if (last && !padded) {
      doc.body.push_back(std::u32string(final_zero_run, target.zero()) +
                         render_digits(values[i], target).chars);
    } else {
      doc.body.push_back(render_digits(values[i], target).chars);
    }
  }

  if (config.key_placement == KeyPlacement::kPrefix ||
      config.key_placement == KeyPlacement::kSuffix) {
    const std::size_t width =
        dense ? place_length(Natural(kMaxKeyNumber), target.base()) : 0;
    auto key_chunk = render_digits(Natural(key->number), target, width).chars;
    if (config.key_placement == KeyPlacement::kPrefix) {
      doc.body.insert(doc.body.begin(), std::move(key_chunk));
    } else {
      doc.body.push_back(std::move(key_chunk));
    }
  }

  if (config.header == HeaderMode::kSelfDescribing) {
    CodecConfig resolved = config;
    resolved.source = source;
    doc.header = format_header(resolved);
  }
  return doc;
}

std::u32string decode(const CipherDocument& doc, const CodecConfig& config) {
  if (!config.source) {
    throw Error(Errc::kInvalidConfig,
                "an auto source set can only be decoded from a "
                "self-describing document; pass the resolved set");
  }
  check_separator(config);
  const DigitSet& source = *config.source;
  const DigitSet& target = config.target;
  const auto key = placement_key(config);
  const bool dense = !config.separator;
  const bool padded = config.pad.has_value();
  if (config.pad && !source.contains(*config.pad)) {
    throw Error(Errc::kPadNotInSource,
                "pad codepoint is not a digit of the source set");
  }

  const std::u32string text = doc.body_text();
  if (text.empty()) throw Error(Errc::kEmptyText, "empty cipher body");

  PowerTable powers(source.base());
  std::vector<std::u32string> cipher;
  std::vector<std::size_t> planned;
  std::vector<std::size_t> offsets;
  std::optional<std::u32string> key_chunk;
  auto sizes = config.plan.cursor();

  if (dense) {
    std::u32string_view rest = text;
    std::size_t offset = 0;
    const bool prefix = config.key_placement == KeyPlacement::kPrefix;
    const bool suffix = config.key_placement == KeyPlacement::kSuffix;
    if (prefix || suffix) {
      const std::size_t w = place_length(Natural(kMaxKeyNumber), target.base());
      if (rest.size() < w) {
        throw Error(Errc::kMalformedBody, "body is shorter than the key chunk");
      }
      key_chunk = std::u32string(prefix ? rest.substr(0, w)
                                        : rest.substr(rest.size() - w));
      rest = prefix ? rest.substr(w) : rest.substr(0, rest.size() - w);
      if (prefix) offset = w;
    }
    while (!rest.empty()) {
      const std::size_t k = sizes.next();
      const std::size_t w =
          dense_width(powers, k, cipher.size(), config, key);
      if (rest.size() < w) {
        throw Error(Errc::kMalformedBody,
                    "body length does not match the chunk plan", offset);
      }
      cipher.emplace_back(rest.substr(0, w));
      planned.push_back(k);
      offsets.push_back(offset);
      rest.remove_prefix(w);
      offset += w;
    }
  } else {
    cipher = split(text, *config.separator);
    if (config.key_placement == KeyPlacement::kPrefix) {
      key_chunk = cipher.front();
      cipher.erase(cipher.begin());
    } else if (config.key_placement == KeyPlacement::kSuffix) {
      key_chunk = cipher.back();
      cipher.pop_back();
    }
    std::size_t offset = key_chunk && config.key_placement ==
                                          KeyPlacement::kPrefix
                             ? key_chunk->size() + 1
                             : 0;
    for (const auto& c : cipher) {
      if (c.empty()) {
        throw Error(Errc::kMalformedBody, "empty cipher chunk", offset);
      }
      planned.push_back(sizes.next());
      offsets.push_back(offset);
      offset += c.size() + 1;
    }
  }
  if (cipher.empty()) throw Error(Errc::kMalformedBody, "no cipher chunks");

  if (key_chunk) {
    const Natural found = evaluate_at(*key_chunk, target, 0);
    if (found != Natural(key->number)) {
      throw Error(Errc::kKeyMismatch,
                  "ciphertext carries key " + found.to_decimal() +
                      ", expected " + key->canonical());
    }
  }

  std::vector<Natural> values;
  values.reserve(cipher.size());
  for (std::size_t i = 0; i < cipher.size(); ++i) {
    values.push_back(evaluate_at(cipher[i], target, offsets[i]));
  }
  if (config.key_placement == KeyPlacement::kAddToFirst) {
    values[0] = add_signed(std::move(values[0]),
                           -static_cast<std::int64_t>(key->number), 0);
  }
  values = remove_addends(std::move(values), config.addends);

  const auto overflow = [](std::size_t i) {
    return Error(Errc::kChunkOverflow,
                 "chunk " + std::to_string(i) +
                     " decodes past its planned length; wrong base or config?",
                 i);
  };

  std::u32string plain;
  for (std::size_t i = 0; i < cipher.size(); ++i) {
    const bool last = i + 1 == cipher.size();
    const std::size_t k = planned[i];
    const Natural& v = values[i];
    if (!last || padded) {
      if (v >= powers.power(k)) throw overflow(i);
      std::u32string digits = render_digits(v, source, k).chars;
      if (last) {
        while (!digits.empty() && digits.back() == *config.pad) {
          digits.pop_back();
        }
      }
      plain += digits;
    } else if (dense) {
      if (v >= powers.power_sum(k)) throw overflow(i);
      // Strip the length fold: find L with sum(base^1..base^(L-1)) <= v.
      Natural shorter;
      Natural p(1);
      std::size_t length = 1;
      while (true) {
        p.mul_add(source.base(), 0);
        if (v < shorter + p) break;
        shorter += p;
        ++length;
      }
      plain += render_digits(v - shorter, source, length).chars;
    } else {
      const std::u32string& c = cipher[i];
      std::size_t z = leading_zeros(c, target.zero());
      if (z == c.size()) --z;
      std::u32string digits(z, source.zero());
      if (v.is_zero()) {
        digits.push_back(source.zero());
      } else {
        digits += render_digits(v, source).chars;
      }
      if (digits.size() > k) throw overflow(i);
      plain += digits;
    }
  }

  if (config.newline_escape.empty()) return plain;
  return unescape_newlines(plain, config.newline_escape);
}

std::u32string decode_document(const CipherDocument& doc,
                               const CodecConfig& fallback,
                               const OeisLookup& lookup) {
  CodecConfig config = doc.header ? parse_header(*doc.header, lookup) : fallback;
  CipherDocument body = doc;
  // Tolerate the newline an editor or `echo` appends.
  std::u32string text = body.body_text();
  if (!text.empty() && text.back() == U'\n' && !config.target.contains(U'\n') &&
      config.separator != U'\n') {
    text.pop_back();
    if (!text.empty() && text.back() == U'\r' &&
        !config.target.contains(U'\r')) {
      text.pop_back();
    }
  }
  body.body = {std::move(text)};
  body.separator.reset();
  return decode(body, config);
}

}  // namespace bnc
