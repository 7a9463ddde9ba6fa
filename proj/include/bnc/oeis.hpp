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

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bnc/sequences.hpp"

namespace bnc {

// Terms of an OEIS b-file: "<index> <term>" per line, '#' lines and blank
// lines skipped. Throws kParseError with the 1-based line number. Terms past
// the first one that does not fit in 64 bits are dropped.
std::vector<std::int64_t> parse_bfile(std::string_view body);

// $BNC_CACHE_DIR if set, otherwise $XDG_CACHE_HOME/bnc or ~/.cache/bnc.
std::filesystem::path default_cache_dir();

struct OeisOptions {
  std::filesystem::path cache_dir = default_cache_dir();
  int timeout_ms = 10000;
  std::string base_url = "https://oeis.org";
  bool allow_network = true;
};

// Fetches b-files from `<base_url>/<A-number>/b<digits>.txt` and keeps the
// verbatim body at `<cache_dir>/<A-number>.bfile`. Cached keys never touch
// the network. Concurrent fetches of one key issue at most one request.
class OeisClient {
 public:
  explicit OeisClient(OeisOptions options = {});

  SequenceProvider fetch(const SequenceKey& key);

  std::filesystem::path cache_path(const SequenceKey& key) const;

  // HTTP requests issued by this client so far.
  std::size_t requests() const noexcept { return requests_.load(); }

  const OeisOptions& options() const noexcept { return options_; }

 private:
  std::string download(const SequenceKey& key);

  OeisOptions options_;
  std::atomic<std::size_t> requests_{0};
};

SequenceProvider fetch_oeis(const SequenceKey& key,
                            const std::filesystem::path& cache_dir,
                            int timeout_ms);

}  // namespace bnc
