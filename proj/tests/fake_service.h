// Copyright 2026 The chartclean Authors.
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


// In-process stand-in for the scoring service, speaking the same JSON over
// HTTP on a loopback port.

#ifndef CHARTCLEAN_TESTS_FAKE_SERVICE_H_
#define CHARTCLEAN_TESTS_FAKE_SERVICE_H_

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <atomic>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "httplib.h"
#include "json.hpp"

namespace chartclean::testing {

class FakeService {
 public:
  // Maps a (premise, hypothesis) pair to the raw value the service reports.
  using Scorer = std::function<double(const std::string&, const std::string&)>;

  explicit FakeService(Scorer scorer) : scorer_(std::move(scorer)) {
    server_.Post("/v1/score", [this](const httplib::Request& req, httplib::Response& res) {
      if (Fail(res)) return;
      const auto body = nlohmann::json::parse(req.body, nullptr, false);
      if (body.is_discarded() || !body.contains("premise") || !body.contains("hypothesis")) {
        res.status = 400;
        return;
      }
      if (garbage_) {
        res.set_content("{\"entailment\": \"high\"}", "application/json");
        return;
      }
      const double v = scorer_(body["premise"], body["hypothesis"]);
      res.set_content(nlohmann::json{{"entailment", v}}.dump(), "application/json");
    });
    server_.Post("/v1/score_batch", [this](const httplib::Request& req, httplib::Response& res) {
      if (Fail(res)) return;
      const auto body = nlohmann::json::parse(req.body, nullptr, false);
      if (body.is_discarded() || !body.contains("pairs")) {
        res.status = 400;
        return;
      }
      {
        std::lock_guard lock(mu_);
        batch_sizes_.push_back(body["pairs"].size());
      }
      nlohmann::json out = nlohmann::json::array();
      for (const auto& p : body["pairs"]) out.push_back(scorer_(p["premise"], p["hypothesis"]));
      res.set_content(nlohmann::json{{"entailments", out}}.dump(), "application/json");
    });
    server_.Get("/v1/health", [this](const httplib::Request&, httplib::Response& res) {
      if (Fail(res)) return;
      res.set_content(R"({"status":"ok","model":"fake-nli-1"})", "application/json");
    });
    server_.Post("/v1/generate", [this](const httplib::Request& req, httplib::Response& res) {
      if (Fail(res)) return;
      const auto body = nlohmann::json::parse(req.body, nullptr, false);
      if (body.is_discarded() || !body.contains("prompt") || body["prompt"] == "") {
        res.status = 400;
        return;
      }
      res.set_content(nlohmann::json{{"text", generated_}}.dump(), "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~FakeService() {
    server_.stop();
    thread_.join();
  }

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }
  int requests() const { return requests_; }
  std::vector<size_t> batch_sizes() const {
    std::lock_guard lock(mu_);
    return batch_sizes_;
  }

  // The next `n` requests answer 503.
  void FailNext(int n) { failures_left_ = n; }
  // /v1/score answers with a non-numeric value.
  void SendGarbage(bool on) { garbage_ = on; }
  void SetGenerated(std::string text) { generated_ = std::move(text); }

 private:
  bool Fail(httplib::Response& res) {
    ++requests_;
    if (failures_left_.fetch_sub(1) > 0) {
      res.status = 503;
      res.set_content("busy", "text/plain");
      return true;
    }
    return false;
  }

  Scorer scorer_;
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> requests_{0};
  std::atomic<int> failures_left_{0};
  std::atomic<bool> garbage_{false};
  std::string generated_ = "Experts also expected further growth.";
  mutable std::mutex mu_;
  std::vector<size_t> batch_sizes_;
};

// A loopback URL on which nothing is listening: the port is reserved by a
// bound socket that is closed again before returning.
inline std::string DeadUrl() {
  const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = 0;
  ::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr);
  socklen_t len = sizeof addr;
  ::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len);
  ::close(fd);
  return "http://127.0.0.1:" + std::to_string(ntohs(addr.sin_port));
}

}  // namespace chartclean::testing

#endif  // CHARTCLEAN_TESTS_FAKE_SERVICE_H_
