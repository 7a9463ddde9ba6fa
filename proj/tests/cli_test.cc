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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "bfile_server.hpp"

namespace bnc::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir()
      : path_(fs::temp_directory_path() /
              ("bnc-cli-test-" + std::to_string(std::random_device{}()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  std::string file(const std::string& name, const std::string& body) const {
    const fs::path p = path_ / name;
    std::ofstream(p, std::ios::binary) << body;
    return p.string();
  }

 private:
  fs::path path_;
};

TEST(CliTest, EncodesTheFixedChunkExample) {
  const Result r = run_cli(
      {"encode", "--src", "p:base37", "--dst", "p:decimal", "--chunk",
       "fixed:5"},
      "this is an example");
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "55237484-35202859-68224507-35016");

  const Result back = run_cli(
      {"decode", "--src", "p:base37", "--dst", "p:decimal", "--chunk",
       "fixed:5"},
      r.out + "\n");
  EXPECT_EQ(back.code, kExitOk) << back.err;
  EXPECT_EQ(back.out, "this is an example");
}

TEST(CliTest, PrimeChunksIntoHex) {
  const Result r = run_cli({"encode", "--src", "p:base37", "--dst",
                            "p:hexUpper", "--chunk", "seq:primes"},
                           "this is an example");
  EXPECT_EQ(r.out, "442-6472-219272B-15BF08FEF5-E");
}

TEST(CliTest, WordsMode) {
  EXPECT_EQ(run_cli({"encode", "--words"}, "This is an example.").out,
            "X1375732-676-383-32488192274.");
  EXPECT_EQ(run_cli({"encode", "--fig2"}, "This is an example.").out,
            "X1375732-676-383-32488192274.");
  EXPECT_EQ(run_cli({"decode", "--words"}, "X1375732-676-383-32488192274.\n")
                .out,
            "This is an example.");
}

TEST(CliTest, AutoSourceNotesTheResolvedSet) {
  const std::string text = "Übergrößenträger, naïve café.";
  const Result r = run_cli({"encode"}, text);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.err.find("resolved to u247"), std::string::npos) << r.err;
  const Result back = run_cli({"decode", "--src", "u247"}, r.out);
  EXPECT_EQ(back.out, text);
  EXPECT_EQ(run_cli({"decode"}, r.out).code, kExitUsage);
}

TEST(CliTest, HeaderDocumentsDecodeWithoutFlags) {
  const std::string text = "Headers carry every setting.";
  const Result r = run_cli({"encode", "--header", "--chunk", "seq:list:3,0",
                            "--add", "5"},
                           text);
  // The second planned chunk has length zero.
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("bnc: error: BadChunkSize at 1:"), std::string::npos)
      << r.err;

  const Result ok = run_cli(
      {"encode", "--header", "--chunk", "seq:list:2,3,5", "--add", "5,-1",
       "--esc", "5C,6E", "--sep", "none"},
      "two\nlines");
  ASSERT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_TRUE(ok.out.starts_with("BNC1;src=u120;dst=u50000;chunk=seq:list:2,"
                                 "3,5;sep=none;pad=none;add=5,-1;esc=5C,6E\n"))
      << ok.out;
  const Result back = run_cli({"decode"}, ok.out);
  EXPECT_EQ(back.code, kExitOk) << back.err;
  EXPECT_EQ(back.out, "two\nlines");
}

TEST(CliTest, FlagRoundTripsOverFixtures) {
  const std::vector<std::vector<std::string>> flag_sets = {
      {"--src", "u200", "--dst", "u50000"},
      {"--src", "u200", "--dst", "p:decimal", "--chunk", "seq:primes"},
      {"--src", "u200~perm:9", "--dst", "p:base36", "--sep", "none"},
      {"--src", "u200", "--dst", "p:hexUpper", "--pad", "7E", "--add",
       "1,2,3"},
      {"--src", "u200", "--dst", "u1000~perm:4", "--chunk", "seq:naturals",
       "--key-place", "prefix"},
      {"--src", "u200", "--dst", "p:decimal", "--chunk", "seq:primes",
       "--key-place", "addToFirst", "--sep", "none"},
  };
  const std::vector<std::string> fixtures = {
      "this is an example", "Grüße aus Köln!", "x", "  leading spaces",
      "ends with zero digit  "};
  for (const auto& flags : flag_sets) {
    for (const auto& text : fixtures) {
      std::vector<std::string> enc{"encode"};
      enc.insert(enc.end(), flags.begin(), flags.end());
      const Result r = run_cli(enc, text);
      ASSERT_EQ(r.code, kExitOk) << r.err;
      std::vector<std::string> dec{"decode"};
      dec.insert(dec.end(), flags.begin(), flags.end());
      const Result back = run_cli(dec, r.out);
      EXPECT_EQ(back.out, text) << flags[3] << " " << back.err;
    }
  }
}

TEST(CliTest, ConfigFileAndFiles) {
  TempDir dir;
  const std::string config = dir.file(
      "bnc.conf", "# settings\nsrc = p:base37\ndst=p:decimal\nchunk=fixed:5\n");
  const std::string input = dir.file("plain.txt", "this is an example");
  const std::string output = (dir.path() / "cipher.txt").string();
  Result r = run_cli({"encode", "--config", config, "-i", input, "-o", output});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(output);
  std::string cipher;
  std::getline(in, cipher);
  EXPECT_EQ(cipher, "55237484-35202859-68224507-35016");

  // Flags override the file.
  r = run_cli({"encode", "--config", config, "--dst", "p:hexUpper", "-i",
               input});
  EXPECT_EQ(r.out.substr(0, 8), "34ADB6C-");

  const std::string bad = dir.file("bad.conf", "colour=blue\n");
  EXPECT_EQ(run_cli({"encode", "--config", bad}, "x").code, kExitUsage);
  EXPECT_EQ(run_cli({"encode", "-i", (dir.path() / "missing").string()}).code,
            kExitFailure);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"encode", "--frobnicate"}, "x").code, kExitUsage);
  EXPECT_EQ(run_cli({"encode", "decode"}, "x").code, kExitUsage);
  EXPECT_EQ(run_cli({"encode", "--sep", "zz"}, "x").code, kExitUsage);
  EXPECT_EQ(run_cli({"encode", "--key-place", "middle"}, "x").code,
            kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);

  const Result foreign =
      run_cli({"encode", "--src", "p:base37", "--dst", "p:decimal"}, "Hi");
  EXPECT_EQ(foreign.code, kExitFailure);
  EXPECT_NE(foreign.err.find("bnc: error: ForeignDigit at 0:"),
            std::string::npos)
      << foreign.err;

  EXPECT_EQ(run_cli({"encode", "--src", "u5x"}, "x").code, kExitFailure);
  EXPECT_EQ(run_cli({"encode", "--dst", "p:decimal", "--sep", "30"}, "x").code,
            kExitFailure);
  EXPECT_EQ(run_cli({"encode"}, "\xFF").code, kExitFailure);
}

TEST(CliTest, Attack) {
  const Result r = run_cli({"attack", "--bases", "11-64"},
                           "1375732-676-383-32488192274\n");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.starts_with("1\t36\t")) << r.out;
  EXPECT_NE(r.out.find("this is an example"), std::string::npos);
  EXPECT_EQ(run_cli({"attack"}, "12-ab").code, kExitFailure);
  EXPECT_EQ(run_cli({"attack", "--bases", "11"}, "12").code, kExitUsage);
}

TEST(CliTest, Analyze) {
  EXPECT_EQ(run_cli({"analyze", "lengths", "--max-power", "1", "--bases",
                     "2,10,16"})
                .out,
            "value,base2,base10,base16\n1,1,1,1\n10,4,2,1\n");
  EXPECT_EQ(run_cli({"analyze", "pretty", "--set", "p:hexUpper", "ABC"}).out,
            "10-11-12\n");
  EXPECT_EQ(run_cli({"analyze", "tokens"}, "a. b b.").out, "1,2\n");
  const Result freq =
      run_cli({"analyze", "freq", "--set", "p:decimal"}, "0123456789\n");
  EXPECT_NE(freq.out.find("chi_square\t0\n"), std::string::npos) << freq.out;

  TempDir dir;
  const std::string plain = dir.file("p.txt", "this is an example");
  const std::string cipher = dir.file("c.txt", "55237484-35202859-68224507-35016");
  const Result report =
      run_cli({"analyze", "report", "--plain", plain, "--cipher", cipher});
  EXPECT_NE(report.out.find("cipher_chars\t32\n"), std::string::npos)
      << report.out;
  EXPECT_NE(report.out.find("char_ratio\t32/18\n"), std::string::npos);
  EXPECT_EQ(run_cli({"analyze"}).code, kExitUsage);
}

TEST(CliTest, SequencesAndDigitSets) {
  EXPECT_EQ(run_cli({"seq", "show", "primes", "--count", "5"}).out,
            "2,3,5,7,11\n");
  EXPECT_EQ(run_cli({"seq", "show", "squares"}).code, kExitFailure);
  const Result ds = run_cli({"digitset", "p:decimal", "--permute", "42"});
  EXPECT_EQ(ds.out, "spec\tp:decimal~perm:42\nbase\t10\ndigits\t0958647213\n");
}

TEST(CliTest, SeqFetchUsesTheCache) {
  testing::BFileServer server;
  TempDir cache;
  const std::vector<std::string> args{
      "seq", "fetch", "A000040", "--count", "5", "--oeis-url", server.url(),
      "--cache-dir", cache.path().string()};
  const Result first = run_cli(args);
  EXPECT_EQ(first.code, kExitOk) << first.err;
  EXPECT_EQ(first.out, "2,3,5,7,11\n");
  const Result second = run_cli(args);
  EXPECT_EQ(second.out, "2,3,5,7,11\n");
  EXPECT_EQ(server.requests(), 1);
}

TEST(CliTest, OeisChunkPlan) {
  testing::BFileServer server;
  TempDir cache;
  std::vector<std::string> flags{
      "--src", "p:base37", "--dst", "p:hexUpper", "--chunk", "seq:A000040",
      "--oeis", "--oeis-url", server.url(), "--cache-dir",
      cache.path().string()};
  std::vector<std::string> enc{"encode"};
  enc.insert(enc.end(), flags.begin(), flags.end());
  const Result r = run_cli(enc, "this is an example");
  EXPECT_EQ(r.out, "442-6472-219272B-15BF08FEF5-E") << r.err;

  // Without --oeis the key cannot be resolved.
  EXPECT_EQ(run_cli({"encode", "--chunk", "seq:A000040", "--cache-dir",
                     cache.path().string() + "/empty"},
                    "x")
                .code,
            kExitFailure);
}

}  // namespace
}  // namespace bnc::cli
