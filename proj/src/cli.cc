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

#include "bnc/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "bnc/analysis.hpp"
#include "bnc/attack.hpp"
#include "bnc/codec.hpp"
#include "bnc/error.hpp"
#include "bnc/numeric.hpp"
#include "bnc/oeis.hpp"
#include "bnc/sequences.hpp"
#include "bnc/utf8.hpp"

namespace bnc::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// encode/decode settings that may also come from a --config file.
constexpr std::string_view kConfigKeys[] = {
    "src", "dst", "chunk", "sep", "pad", "add", "esc", "key-place", "header"};

struct CodecFlags {
  std::map<std::string, std::string> values;  // key -> raw flag value
  std::string config_path;
  std::string input = "-";
  std::string output = "-";
  bool words = false;
  bool header = false;
  bool oeis = false;
  std::string oeis_url;
  std::string cache_dir;
  int timeout_ms = 10000;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::kIoError, "cannot open " + path);
  ss << file.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, std::ostream& out,
                  std::string_view bytes) {
  if (path == "-") {
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!file) throw Error(Errc::kIoError, "cannot write " + path);
}

std::string_view strip_newline(std::string_view s) {
  if (s.ends_with('\n')) s.remove_suffix(1);
  if (s.ends_with('\r')) s.remove_suffix(1);
  return s;
}

char32_t parse_hex_cp(std::string_view s, std::string_view what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() ||
      !utf8::is_scalar(v)) {
    throw UsageError(std::string(what) + " expects a hex codepoint, got '" +
                     std::string(s) + "'");
  }
  return v;
}

std::optional<char32_t> parse_optional_cp(std::string_view s,
                                          std::string_view what) {
  if (s == "none") return std::nullopt;
  return parse_hex_cp(s, what);
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

std::vector<std::uint32_t> parse_bases(std::string_view s) {
  std::vector<std::uint32_t> out;
  for (std::string_view item : split_csv(s)) {
    std::uint32_t b = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), b);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError("bad base list '" + std::string(s) + "'");
    }
    out.push_back(b);
  }
  return out;
}

// Reads `key=value` lines; '#' starts a comment. Values already given on the
// command line win.
void merge_config_file(CodecFlags& flags) {
  if (flags.config_path.empty()) return;
  std::ifstream file(flags.config_path);
  if (!file) throw Error(Errc::kIoError, "cannot open " + flags.config_path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    std::string_view view = strip_newline(line);
    while (!view.empty() && (view.front() == ' ' || view.front() == '\t')) {
      view.remove_prefix(1);
    }
    if (view.empty() || view.front() == '#') continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError(flags.config_path + ":" + std::to_string(line_no) +
                       ": expected key=value");
    }
    std::string key(view.substr(0, eq));
    while (!key.empty() && key.back() == ' ') key.pop_back();
    std::string_view value = view.substr(eq + 1);
    while (!value.empty() && value.front() == ' ') value.remove_prefix(1);
    if (std::find(std::begin(kConfigKeys), std::end(kConfigKeys), key) ==
        std::end(kConfigKeys)) {
      throw UsageError(flags.config_path + ":" + std::to_string(line_no) +
                       ": unknown key '" + key + "'");
    }
    flags.values.try_emplace(key, value);
  }
}

std::string flag(const CodecFlags& flags, const std::string& key,
                 const std::string& fallback) {
  auto it = flags.values.find(key);
  return it == flags.values.end() ? fallback : it->second;
}

OeisClient make_oeis_client(const CodecFlags& flags, bool allow_network) {
  OeisOptions options;
  if (!flags.cache_dir.empty()) options.cache_dir = flags.cache_dir;
  if (!flags.oeis_url.empty()) options.base_url = flags.oeis_url;
  options.timeout_ms = flags.timeout_ms;
  options.allow_network = allow_network;
  return OeisClient(options);
}

CodecConfig build_config(const CodecFlags& flags, OeisClient& oeis,
                         bool for_decode) {
  CodecConfig config;
  const std::string src = flag(flags, "src", for_decode ? "" : "auto");
  if (src.empty()) {
    throw UsageError("decode needs --src unless the input has a BNC1 header");
  }
  if (src != "auto") config.source = DigitSet::parse_spec(src);
  config.target = DigitSet::parse_spec(flag(flags, "dst", "u50000"));
  config.plan = ChunkPlan::parse(
      flag(flags, "chunk", "fixed:5"),
      [&oeis](const SequenceKey& key) { return oeis.fetch(key); });
  const std::string sep = flag(flags, "sep", "");
  config.separator = sep.empty() ? default_separator(config.target)
                                 : parse_optional_cp(sep, "--sep");
  config.pad = parse_optional_cp(flag(flags, "pad", "none"), "--pad");
  if (const std::string add = flag(flags, "add", "none"); add != "none") {
    for (std::string_view term : split_csv(add)) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(term.data(), term.data() + term.size(), v);
      if (term.empty() || ec != std::errc() ||
          ptr != term.data() + term.size()) {
        throw UsageError("--add expects comma-separated integers");
      }
      config.addends.push_back(v);
    }
  }
  if (const std::string esc = flag(flags, "esc", "none"); esc != "none") {
    for (std::string_view cp : split_csv(esc)) {
      config.newline_escape.push_back(parse_hex_cp(cp, "--esc"));
    }
  }
  const std::string place = flag(flags, "key-place", "none");
  auto placement = key_placement_from_name(place);
  if (!placement) {
    throw UsageError("--key-place expects none, prefix, suffix or addToFirst");
  }
  config.key_placement = *placement;
  const std::string header = flag(flags, "header", flags.header ? "true" : "false");
  if (header != "true" && header != "false") {
    throw UsageError("header expects true or false");
  }
  config.header = header == "true" ? HeaderMode::kSelfDescribing
                                   : HeaderMode::kHeadless;
  return config;
}

void add_codec_options(CLI::App* cmd, CodecFlags& f) {
  const auto value_option = [&](const std::string& name,
                                const std::string& help) {
    cmd->add_option_function<std::string>(
        "--" + name, [&f, name](const std::string& v) { f.values[name] = v; },
        help);
  };
  value_option("src", "source digit set: auto, u<N>, p:<preset>, a:<hex,...>");
  value_option("dst", "target digit set (default u50000)");
  value_option("chunk", "fixed:<k> or seq:<primes|naturals|fibonacci|"
                        "constant:k|list:a,b|A-number> (default fixed:5)");
  value_option("sep", "separator codepoint in hex, or none (default 2D, or none "
                     "when the target set contains '-')");
  value_option("pad", "pad codepoint in hex, or none");
  value_option("add", "comma-separated addends");
  value_option("esc", "newline escape as comma-separated hex codepoints");
  value_option("key-place", "none, prefix, suffix or addToFirst");
  cmd->add_flag("--header", f.header, "write a self-describing BNC1 header");
  cmd->add_flag("--words,--fig2", f.words,
                "word-per-number mode over base 36 with X/period marks");
  cmd->add_option("--config", f.config_path, "key=value settings file");
  cmd->add_option("-i,--input", f.input, "input file, - for stdin");
  cmd->add_option("-o,--output", f.output, "output file, - for stdout");
  cmd->add_flag("--oeis", f.oeis, "allow fetching OEIS sequences");
  cmd->add_option("--oeis-url", f.oeis_url, "OEIS server base URL");
  cmd->add_option("--cache-dir", f.cache_dir, "OEIS cache directory");
  cmd->add_option("--timeout-ms", f.timeout_ms, "OEIS request timeout");
}

int do_encode(CodecFlags& f, Io& io) {
  merge_config_file(f);
  const std::string input = read_input(f.input, io.in);
  if (f.words) {
    write_output(f.output, io.out, encode_words(input));
    return kExitOk;
  }
  OeisClient oeis = make_oeis_client(f, f.oeis);
  const CodecConfig config = build_config(f, oeis, false);
  const std::u32string text = utf8::decode(input);
  const CipherDocument doc = encode(text, config);
  if (!config.source && config.header == HeaderMode::kHeadless) {
    std::u32string escaped =
        config.newline_escape.empty()
            ? text
            : escape_newlines(text, config.newline_escape);
    io.err << "note: --src auto resolved to "
           << resolve_source(config, escaped).spec()
           << "; pass it to decode\n";
  }
  write_output(f.output, io.out, doc.serialize());
  return kExitOk;
}

int do_decode(CodecFlags& f, Io& io) {
  merge_config_file(f);
  const std::string input = read_input(f.input, io.in);
  if (f.words) {
    write_output(f.output, io.out, decode_words(strip_newline(input)));
    return kExitOk;
  }
  OeisClient oeis = make_oeis_client(f, f.oeis);
  const OeisLookup lookup = [&oeis](const SequenceKey& key) {
    return oeis.fetch(key);
  };
  // Headless bodies are re-split with the configured separator, so the
  // split here only has to be lossless.
  const CipherDocument doc = parse_document(input, std::nullopt);
  CodecConfig fallback;
  if (!doc.header) fallback = build_config(f, oeis, true);
  write_output(f.output, io.out,
               utf8::encode(decode_document(doc, fallback, lookup)));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Re-encode text between digit sets of arbitrary base", "bnc"};
  app.require_subcommand(1, 1);

  CodecFlags enc_flags;
  CLI::App* enc = app.add_subcommand("encode", "encode plaintext");
  add_codec_options(enc, enc_flags);

  CodecFlags dec_flags;
  CLI::App* dec = app.add_subcommand("decode", "decode a cipher document");
  add_codec_options(dec, dec_flags);

  std::string atk_input = "-";
  std::string atk_sep = "2D";
  std::string atk_bases = "2-64";
  CLI::App* atk =
      app.add_subcommand("attack", "rank conventional-alphabet decodings");
  atk->add_option("-i,--input", atk_input, "cipher body, - for stdin");
  atk->add_option("--sep", atk_sep, "separator codepoint in hex (default 2D)");
  atk->add_option("--bases", atk_bases, "base range lo-hi (default 2-64)");

  CLI::App* ana = app.add_subcommand("analyze", "statistics");
  ana->require_subcommand(1, 1);
  std::size_t max_power = 9;
  std::string bases_csv = "2,10,16";
  CLI::App* lengths = ana->add_subcommand("lengths", "place-length table CSV");
  lengths->add_option("--max-power", max_power, "largest power of ten");
  lengths->add_option("--bases", bases_csv, "comma-separated bases");

  std::string rep_plain, rep_cipher, rep_sep = "2D";
  CLI::App* report = ana->add_subcommand("report", "size comparison");
  report->add_option("--plain", rep_plain, "plaintext file")->required();
  report->add_option("--cipher", rep_cipher, "cipher document")->required();
  report->add_option("--sep", rep_sep, "separator in hex, or none");

  std::string freq_set, freq_sep = "none", freq_input = "-";
  CLI::App* freq = ana->add_subcommand("freq", "digit histogram, chi-square");
  freq->add_option("--set", freq_set, "digit set spec")->required();
  freq->add_option("--sep", freq_sep, "separator to strip, hex or none");
  freq->add_option("-i,--input", freq_input, "body, - for stdin");

  std::string tok_input = "-";
  CLI::App* tokens = ana->add_subcommand("tokens", "tokens per sentence");
  tokens->add_option("-i,--input", tok_input, "text, - for stdin");

  std::string pretty_set, pretty_digits;
  CLI::App* pretty = ana->add_subcommand("pretty", "digit values as a-b-c");
  pretty->add_option("--set", pretty_set, "digit set spec")->required();
  pretty->add_option("digits", pretty_digits, "digit string")->required();

  CLI::App* seq = app.add_subcommand("seq", "integer sequences");
  seq->require_subcommand(1, 1);
  CodecFlags seq_flags;
  std::string seq_name;
  std::size_t seq_count = 10;
  CLI::App* fetch = seq->add_subcommand("fetch", "fetch an OEIS b-file");
  fetch->add_option("key", seq_name, "A-number, e.g. A000040 or 40")
      ->required();
  fetch->add_option("--count", seq_count, "terms to print");
  fetch->add_option("--oeis-url", seq_flags.oeis_url, "OEIS server base URL");
  fetch->add_option("--cache-dir", seq_flags.cache_dir, "cache directory");
  fetch->add_option("--timeout-ms", seq_flags.timeout_ms, "request timeout");
  CLI::App* show = seq->add_subcommand("show", "print a builtin sequence");
  show->add_option("spec", seq_name, "primes, fibonacci, list:1,2, ...")
      ->required();
  show->add_option("--count", seq_count, "terms to print");

  std::string ds_spec;
  std::optional<std::uint64_t> ds_seed;
  CLI::App* ds = app.add_subcommand("digitset", "describe a digit set");
  ds->add_option("spec", ds_spec, "digit set spec")->required();
  ds->add_option("--permute", ds_seed, "apply a keyed permutation");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "bnc: " << e.what() << "\n";
    // Help for the deepest subcommand that was selected.
    const CLI::App* target = &app;
    for (CLI::App* sub : app.get_subcommands()) {
      target = sub;
      for (CLI::App* leaf : sub->get_subcommands()) target = leaf;
    }
    err << target->help();
    return kExitUsage;
  }

  try {
    if (enc->parsed()) return do_encode(enc_flags, io);
    if (dec->parsed()) return do_decode(dec_flags, io);
    if (atk->parsed()) {
      const auto dash = atk_bases.find('-');
      if (dash == std::string::npos) throw UsageError("--bases expects lo-hi");
      const auto lo = parse_bases(atk_bases.substr(0, dash));
      const auto hi = parse_bases(atk_bases.substr(dash + 1));
      const std::string body =
          std::string(strip_newline(read_input(atk_input, in)));
      const auto ranked = attack::brute_force(
          utf8::decode(body), parse_hex_cp(atk_sep, "--sep"), lo.at(0),
          hi.at(0));
      out << attack::format_report(ranked);
      return kExitOk;
    }
    if (lengths->parsed()) {
      out << analysis::length_table(max_power, parse_bases(bases_csv)).to_csv();
      return kExitOk;
    }
    if (report->parsed()) {
      const std::u32string plain = utf8::decode(read_input(rep_plain, in));
      const CipherDocument doc = parse_document(
          read_input(rep_cipher, in), parse_optional_cp(rep_sep, "--sep"));
      const auto r = analysis::compression_report(plain, doc);
      out << "plain_chars\t" << r.plain_chars << "\n"
          << "plain_utf8_bytes\t" << r.plain_utf8_bytes << "\n"
          << "cipher_chars\t" << r.cipher_chars << "\n"
          << "cipher_utf8_bytes\t" << r.cipher_utf8_bytes << "\n"
          << "char_ratio\t" << r.char_ratio().numerator << "/"
          << r.char_ratio().denominator << "\n"
          << "byte_ratio\t" << r.byte_ratio().numerator << "/"
          << r.byte_ratio().denominator << "\n";
      return kExitOk;
    }
    if (freq->parsed()) {
      const DigitSet set = DigitSet::parse_spec(freq_set);
      std::u32string body =
          utf8::decode(strip_newline(read_input(freq_input, in)));
      if (auto sep = parse_optional_cp(freq_sep, "--sep")) {
        std::erase(body, *sep);
      }
      const auto sig = analysis::digit_frequency(body, set);
      out << "base\t" << sig.base << "\n"
          << "total\t" << sig.total << "\n"
          << "chi_square\t" << sig.chi_square << "\n"
          << "normalized\t" << sig.normalized_chi_square() << "\n";
      for (const auto& [value, count] : sig.histogram) {
        out << value << "\t" << count << "\n";
      }
      return kExitOk;
    }
    if (tokens->parsed()) {
      const auto counts = analysis::tokens_per_sentence(
          utf8::decode(read_input(tok_input, in)));
      for (std::size_t i = 0; i < counts.size(); ++i) {
        out << (i ? "," : "") << counts[i];
      }
      out << "\n";
      return kExitOk;
    }
    if (pretty->parsed()) {
      const DigitSet set = DigitSet::parse_spec(pretty_set);
      out << analysis::pretty_print_decomposition(
                 {utf8::decode(pretty_digits), set})
          << "\n";
      return kExitOk;
    }
    if (fetch->parsed() || show->parsed()) {
      SequenceProvider provider = SequenceProvider::naturals();
      if (fetch->parsed()) {
        OeisClient client = make_oeis_client(seq_flags, true);
        provider = client.fetch(SequenceKey::parse(seq_name));
      } else {
        provider = parse_sequence_spec(seq_name);
      }
      auto cursor = provider.cursor();
      for (std::size_t i = 0; i < seq_count; ++i) {
        auto term = cursor.next();
        if (!term) break;
        out << (i ? "," : "") << *term;
      }
      out << "\n";
      return kExitOk;
    }
    if (ds->parsed()) {
      DigitSet set = DigitSet::parse_spec(ds_spec);
      if (ds_seed) set = permute(set, *ds_seed);
      out << "spec\t" << set.spec() << "\n"
          << "base\t" << set.base() << "\n"
          << "digits\t"
          << utf8::encode(std::u32string_view(set.codepoints()).substr(0, 100))
          << (set.base() > 100 ? "..." : "") << "\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "bnc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "bnc: error: " << to_string(e.code());
    if (e.position()) err << " at " << *e.position();
    err << ": " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "bnc: error: " << e.what() << "\n";
    return kExitFailure;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace bnc::cli
