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

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "bfile_server.hpp"
#include "bnc/error.hpp"

namespace bnc {
namespace {

namespace fs = std::filesystem;

class OeisClientTest : public ::testing::Test {
 protected:
  void SetUp() override {
    cache_ = fs::temp_directory_path() /
             ("bnc-oeis-test-" + std::to_string(std::random_device{}()));
    fs::remove_all(cache_);
  }
  void TearDown() override { fs::remove_all(cache_); }

  OeisOptions options(bool network = true) const {
    return {.cache_dir = cache_,
            .timeout_ms = 5000,
            .base_url = server_.url(),
            .allow_network = network};
  }

  testing::BFileServer server_;
  fs::path cache_;
};

TEST_F(OeisClientTest, FetchesAndMatchesBuiltinPrimes) {
  OeisClient client(options());
  const SequenceProvider fetched = client.fetch(SequenceKey{40});
  EXPECT_EQ(fetched.take(100), SequenceProvider::primes().take(100));
  EXPECT_EQ(fetched.take(1000).back(), 7919);
  EXPECT_EQ(client.requests(), 1u);
  EXPECT_EQ(server_.requests(), 1);
  EXPECT_TRUE(fs::exists(client.cache_path(SequenceKey{40})));
}

TEST_F(OeisClientTest, SecondFetchIsServedFromCache) {
  OeisClient(options()).fetch(SequenceKey{40});
  OeisClient offline(options(false));
  const SequenceProvider cached = offline.fetch(SequenceKey{40});
  EXPECT_EQ(cached.take(100), SequenceProvider::primes().take(100));
  EXPECT_EQ(offline.requests(), 0u);
  EXPECT_EQ(server_.requests(), 1);
}

TEST_F(OeisClientTest, OfflineWithoutCacheFails) {
  OeisClient offline(options(false));
  try {
    offline.fetch(SequenceKey{40});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNetworkError);
  }
}

TEST_F(OeisClientTest, MissingSequenceIsANetworkError) {
  OeisClient client(options());
  try {
    client.fetch(SequenceKey{999999});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNetworkError);
  }
  EXPECT_FALSE(fs::exists(client.cache_path(SequenceKey{999999})));
}

TEST_F(OeisClientTest, UnreachableServerIsANetworkError) {
  OeisOptions opts = options();
  opts.base_url = "http://127.0.0.1:1";
  opts.timeout_ms = 500;
  try {
    OeisClient(opts).fetch(SequenceKey{40});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNetworkError);
  }
}

TEST_F(OeisClientTest, UnwritableCacheIsReported) {
  // A regular file where the cache directory should be.
  { std::ofstream(cache_.string()) << "x"; }
  OeisOptions opts = options();
  opts.cache_dir = cache_ / "sub";
  try {
    OeisClient(opts).fetch(SequenceKey{40});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kCacheWriteError);
  }
  fs::remove(cache_);
}

TEST(BFileTest, ParsesCommentsAndBlankLines) {
  EXPECT_EQ(parse_bfile("# header\n\n1 2\r\n2  3\n3\t-5\n"),
            (std::vector<std::int64_t>{2, 3, -5}));
}

TEST(BFileTest, MalformedLineReportsItsNumber) {
  try {
    parse_bfile("1 1\n2 2\nthree 3\n");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kParseError);
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(BFileTest, StopsAtTheFirstTermBeyondInt64) {
  EXPECT_EQ(parse_bfile("1 9223372036854775807\n2 9223372036854775808\n3 1\n"),
            (std::vector<std::int64_t>{9223372036854775807}));
}

}  // namespace
}  // namespace bnc
