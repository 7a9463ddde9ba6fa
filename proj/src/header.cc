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

#include <array>
#include <charconv>
#include <cstdio>

#include "bnc/codec.hpp"
#include "bnc/error.hpp"
#include "bnc/utf8.hpp"

namespace bnc {

namespace {

constexpr std::string_view kMagic = "BNC1";
constexpr std::array<std::string_view, 7> kFields = {
    "src", "dst", "chunk", "sep", "pad", "add", "esc"};
constexpr std::size_t kFieldCount = 7;

std::string hex(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%X", static_cast<unsigned>(cp));
  return buf;
}

Error bad_header(const std::string& why) {
  return Error(Errc::kParseError, "bad BNC1 header: " + why, 1);
}

char32_t parse_hex_cp(std::string_view s) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() ||
      !utf8::is_scalar(v)) {
    throw bad_header("expected a hex codepoint, got '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split_csv(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(s.substr(0, comma));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

// Values of the seven fields, in header order.
std::array<std::string_view, kFieldCount> header_fields(
    std::string_view line) {
  if (!line.starts_with(kMagic) || line.size() == kMagic.size() ||
      line[kMagic.size()] != ';') {
    throw bad_header("missing BNC1 magic");
  }
  line.remove_prefix(kMagic.size() + 1);
  std::array<std::string_view, kFieldCount> values;
  for (std::size_t i = 0; i < kFieldCount; ++i) {
    const auto semi = line.find(';');
    const std::string_view field = line.substr(0, semi);
    const auto eq = field.find('=');
    if (eq == std::string_view::npos || field.substr(0, eq) != kFields[i]) {
      throw bad_header("expected field '" + std::string(kFields[i]) + "'");
    }
    values[i] = field.substr(eq + 1);
    if ((semi == std::string_view::npos) != (i + 1 == kFieldCount)) {
      throw bad_header("wrong number of fields");
    }
    if (semi != std::string_view::npos) line.remove_prefix(semi + 1);
  }
  return values;
}

std::optional<char32_t> optional_cp(std::string_view s) {
  if (s == "none") return std::nullopt;
  return parse_hex_cp(s);
}

}  // namespace

std::string format_header(const CodecConfig& config) {
  if (!config.source) {
    throw Error(Errc::kInvalidConfig, "header needs a resolved source set");
  }
  std::string out(kMagic);
  out += ";src=" + config.source->spec();
  out += ";dst=" + config.target.spec();
  out += ";chunk=" + config.plan.spec();
  out += ";sep=" + (config.separator ? hex(*config.separator) : "none");
  out += ";pad=" + (config.pad ? hex(*config.pad) : "none");
  out += ";add=";
  if (config.addends.empty()) {
    out += "none";
  } else {
    for (std::size_t i = 0; i < config.addends.size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(config.addends[i]);
    }
  }
  out += ";esc=";
  if (config.newline_escape.empty()) {
    out += "none";
  } else {
    for (std::size_t i = 0; i < config.newline_escape.size(); ++i) {
      if (i != 0) out += ',';
      out += hex(config.newline_escape[i]);
    }
  }
  return out;
}

CodecConfig parse_header(std::string_view line, const OeisLookup& lookup) {
  const auto f = header_fields(line);
  CodecConfig config;
  config.header = HeaderMode::kSelfDescribing;
  config.source = DigitSet::parse_spec(f[0]);
  config.target = DigitSet::parse_spec(f[1]);
  config.plan = ChunkPlan::parse(f[2], lookup);
  config.separator = optional_cp(f[3]);
  config.pad = optional_cp(f[4]);
  if (f[5] != "none") {
    for (std::string_view term : split_csv(f[5])) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(term.data(), term.data() + term.size(), v);
      if (term.empty() || ec != std::errc() ||
          ptr != term.data() + term.size()) {
        throw bad_header("bad addend '" + std::string(term) + "'");
      }
      config.addends.push_back(v);
    }
  }
  if (f[6] != "none") {
    for (std::string_view cp : split_csv(f[6])) {
      config.newline_escape.push_back(parse_hex_cp(cp));
    }
  }
  return config;
}

CipherDocument parse_document(std::string_view utf8_text,
                              std::optional<char32_t> separator) {
  CipherDocument doc;
  std::string_view body = utf8_text;
  if (body.starts_with(std::string(kMagic) + ";")) {
    const auto eol = body.find('\n');
    doc.header = std::string(body.substr(0, eol));
    body = eol == std::string_view::npos ? std::string_view{}
                                         : body.substr(eol + 1);
    separator = optional_cp(header_fields(*doc.header)[3]);
  }
  doc.separator = separator;
  const std::u32string text = utf8::decode(body);
  if (!separator) {
    doc.body.push_back(text);
    return doc;
  }
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(*separator, start);
    doc.body.push_back(text.substr(start, pos - start));
    if (pos == std::u32string::npos) break;
    start = pos + 1;
  }
  return doc;
}

}  // namespace bnc
