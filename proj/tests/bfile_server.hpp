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

// A local stand-in for oeis.org that serves b-files from tests/data and
// counts the requests it sees.
#pragma once

#include <httplib.h>

#include <atomic>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>

namespace bnc::testing {

inline std::string read_test_file(const std::string& name) {
  std::ifstream in(std::string(BNC_TEST_DATA_DIR) + "/" + name,
                   std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class BFileServer {
 public:
  BFileServer() {
    server_.Get(R"(/A(\d{6})/b(\d{6})\.txt)",
                [this](const httplib::Request& req, httplib::Response& res) {
                  ++requests_;
                  const std::string body =
                      read_test_file("b" + std::string(req.matches[2]) + ".txt");
                  if (body.empty()) {
                    res.status = 404;
                    return;
                  }
                  res.set_content(body, "text/plain");
                });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~BFileServer() {
    server_.stop();
    thread_.join();
  }

  BFileServer(const BFileServer&) = delete;
  BFileServer& operator=(const BFileServer&) = delete;

  std::string url() const {
    return "http://127.0.0.1:" + std::to_string(port_);
  }
  int requests() const { return requests_.load(); }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::atomic<int> requests_{0};
};

}  // namespace bnc::testing
