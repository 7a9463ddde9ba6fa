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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bnc/digitset.hpp"
#include "bnc/natural.hpp"
#include "bnc/sequences.hpp"

namespace bnc {

// Rule producing the sequence of chunk lengths.
class ChunkPlan {
 public:
  // Throws kBadChunkSize for k == 0.
  static ChunkPlan fixed(std::size_t k);
  static ChunkPlan sequence(SequenceProvider provider);

  bool is_fixed() const noexcept { return !provider_.has_value(); }
  std::size_t fixed_size() const noexcept { return fixed_; }
  const std::optional<SequenceProvider>& provider() const noexcept {
    return provider_;
  }

  // `fixed:<k>` or `seq:<sequence spec>`.
  std::string spec() const;
  static ChunkPlan parse(std::string_view spec, const OeisLookup& lookup = {});

  class Cursor {
   public:
    // Throws kBadChunkSize for terms < 1 and kSequenceExhausted when a
    // finite sequence ends.
    std::size_t next();

   private:
    friend class ChunkPlan;
    explicit Cursor(const ChunkPlan& plan);
    std::size_t fixed_;
    std::optional<SequenceProvider::Cursor> terms_;
    std::size_t index_ = 0;
  };

  Cursor cursor() const { return Cursor(*this); }

 private:
  std::size_t fixed_ = 1;
  std::optional<SequenceProvider> provider_;
};

enum class HeaderMode { kHeadless, kSelfDescribing };

// Where the plan's OEIS number travels with the ciphertext.
enum class KeyPlacement { kNone, kPrefix, kSuffix, kAddToFirst };

std::string_view to_string(KeyPlacement placement);
std::optional<KeyPlacement> key_placement_from_name(std::string_view name);

struct CodecConfig {
  // nullopt selects the Unicode-rank set sized by minimal_source_base().
  std::optional<DigitSet> source;
  DigitSet target = DigitSet::preset(Preset::kDecimal);
  ChunkPlan plan = ChunkPlan::fixed(5);
  // nullopt selects separator-less fixed-width output.
  std::optional<char32_t> separator = U'-';
  std::optional<char32_t> pad;
  // Cycled over the chunks; empty means no addends.
  std::vector<std::int64_t> addends;
  // Replaces U+000A before chunking; empty means no escaping.
  std::u32string newline_escape;
  HeaderMode header = HeaderMode::kHeadless;
  KeyPlacement key_placement = KeyPlacement::kNone;
};

// '-' unless the target set uses it as a digit, in which case the output is
// separator-less.
std::optional<char32_t> default_separator(const DigitSet& target);

struct CipherDocument {
  std::optional<std::string> header;  // without the trailing LF
  std::vector<std::u32string> body;
  std::optional<char32_t> separator;

  // Header chunks joined by the separator (or concatenated), as a string.
  std::u32string body_text() const;
  // File bytes: UTF-8, header line first when present, no trailing separator.
  std::string serialize() const;
};

// Splits a serialized document. A leading "BNC1;" line is taken as the
// header; `separator` is used only for headless documents.
CipherDocument parse_document(std::string_view utf8,
                              std::optional<char32_t> separator);

// --- pipeline steps --------------------------------------------------------

std::u32string escape_newlines(std::u32string_view text,
                               std::u32string_view escape);
std::u32string unescape_newlines(std::u32string_view text,
                                 std::u32string_view escape);

struct Chunk {
  std::u32string_view text;
  std::size_t planned;  // length the plan asked for; text may be shorter
};

// Throws kEmptyText for empty input.
std::vector<Chunk> chunk(std::u32string_view text, const ChunkPlan& plan);

// values[i] + addends[i % addends.size()]; kNegativeValue (index) when a
// result would drop below zero.
std::vector<Natural> apply_addends(std::vector<Natural> values,
                                   const std::vector<std::int64_t>& addends);
std::vector<Natural> remove_addends(std::vector<Natural> values,
                                    const std::vector<std::int64_t>& addends);

// The source set encode() would use for `text` (after escaping).
DigitSet resolve_source(const CodecConfig& config, std::u32string_view text);

CipherDocument encode(std::u32string_view text, const CodecConfig& config);
std::u32string decode(const CipherDocument& doc, const CodecConfig& config);

// --- self-describing header ------------------------------------------------

// `BNC1;src=..;dst=..;chunk=..;sep=..;pad=..;add=..;esc=..` for a config
// whose source is already resolved.
std::string format_header(const CodecConfig& config);
CodecConfig parse_header(std::string_view line, const OeisLookup& lookup = {});

// Decodes a document, taking the config from its header when it has one.
std::u32string decode_document(const CipherDocument& doc,
                               const CodecConfig& fallback,
                               const OeisLookup& lookup = {});

// --- word-per-number mode --------------------------------------------------

// Each word read as a base-36 number and written in decimal, joined by '-'.
// A capitalised word gets an 'X' prefix; a trailing '.' is kept.
std::string encode_words(std::string_view sentence);
std::string decode_words(std::string_view cipher);

}  // namespace bnc
