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

#include "bnc/oeis.hpp"

#include <httplib.h>

#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "bnc/error.hpp"

namespace bnc {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool is_integer(std::string_view s) {
  if (s.starts_with('-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// One lock per A-number so parallel fetches of the same key serialize on the
// cache check and only the first one downloads.
std::mutex& key_mutex(const SequenceKey& key) {
  static std::mutex registry_mutex;
  static std::map<std::uint32_t, std::mutex> registry;
  std::lock_guard lock(registry_mutex);
  return registry[key.number];
}

std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<std::int64_t> parse_bfile(std::string_view body) {
  std::vector<std::int64_t> terms;
  bool truncated = false;
  std::size_t line_no = 0;
  while (!body.empty()) {
    ++line_no;
    const auto eol = body.find('\n');
    std::string_view line = trim(body.substr(0, eol));
    body = eol == std::string_view::npos ? std::string_view{}
                                         : body.substr(eol + 1);
    if (line.empty() || line.front() == '#') continue;

    std::size_t split = 0;
    while (split < line.size() && !is_space(line[split])) ++split;
    const std::string_view index = line.substr(0, split);
    const std::string_view term = trim(line.substr(split));
    if (!is_integer(index) || !is_integer(term)) {
      throw Error(Errc::kParseError,
                  "b-file line " + std::to_string(line_no) +
                      ": expected \"<index> <term>\", got \"" +
                      std::string(line) + "\"",
                  line_no);
    }
    if (truncated) continue;
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(term.data(), term.data() + term.size(), value);
    if (ec != std::errc()) {
      truncated = true;
      continue;
    }
    terms.push_back(value);
  }
  return terms;
}

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("BNC_CACHE_DIR"); dir && *dir) {
    return dir;
  }
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "bnc";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "bnc";
  }
  return std::filesystem::path(".bnc-cache");
}

OeisClient::OeisClient(OeisOptions options) : options_(std::move(options)) {}

std::filesystem::path OeisClient::cache_path(const SequenceKey& key) const {
  return options_.cache_dir / (key.canonical() + ".bfile");
}

std::string OeisClient::download(const SequenceKey& key) {
  const std::string name = key.canonical();
  const std::string path = "/" + name + "/b" + name.substr(1) + ".txt";
  const auto fail = [&](const std::string& why) {
    return Error(Errc::kNetworkError,
                 "fetching " + options_.base_url + path + " failed: " + why +
                     " (builtin sequences such as seq:primes work offline)");
  };
  if (!options_.allow_network) throw fail("network access is disabled");

  requests_.fetch_add(1);
  try {
    httplib::Client client(options_.base_url);
    if (!client.is_valid()) throw fail("unsupported URL");
    const auto sec = options_.timeout_ms / 1000;
    const auto usec = (options_.timeout_ms % 1000) * 1000;
    client.set_connection_timeout(sec, usec);
    client.set_read_timeout(sec, usec);
    client.set_follow_location(true);
    auto res = client.Get(path);
    if (!res) throw fail(httplib::to_string(res.error()));
    if (res->status != 200) throw fail("HTTP " + std::to_string(res->status));
    return res->body;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw fail(e.what());
  }
}

SequenceProvider OeisClient::fetch(const SequenceKey& key) {
  std::lock_guard lock(key_mutex(key));
  const auto path = cache_path(key);
  if (auto cached = read_file(path)) {
    return SequenceProvider::oeis(key, parse_bfile(*cached));
  }

  std::string body = download(key);
  // Parse before caching so a malformed body never lands on disk.
  auto terms = parse_bfile(body);

  std::error_code ec;
  std::filesystem::create_directories(options_.cache_dir, ec);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!out) {
      throw Error(Errc::kCacheWriteError,
                  "cannot write OEIS cache file " + tmp);
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw Error(Errc::kCacheWriteError,
                "cannot move OEIS cache file into place at " + path.string() +
                    ": " + ec.message());
  }
  return SequenceProvider::oeis(key, std::move(terms));
}

SequenceProvider fetch_oeis(const SequenceKey& key,
                            const std::filesystem::path& cache_dir,
                            int timeout_ms) {
  OeisClient client(
      OeisOptions{.cache_dir = cache_dir, .timeout_ms = timeout_ms});
  return client.fetch(key);
}

}  // namespace bnc
