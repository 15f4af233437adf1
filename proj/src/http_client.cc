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

#include "http_client.h"

#include <chrono>
#include <optional>
#include <thread>

#include "httplib.h"

namespace chartclean::internal {

struct HttpSession::Impl {
  explicit Impl(const RemoteOptions& opts) : options(opts), client(opts.base_url) {
    const auto timeout = std::chrono::duration<double>(options.timeout_seconds);
    const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(timeout);
    const time_t sec = static_cast<time_t>(micros.count() / 1000000);
    const time_t usec = static_cast<time_t>(micros.count() % 1000000);
    client.set_connection_timeout(sec, usec);
    client.set_read_timeout(sec, usec);
    client.set_write_timeout(sec, usec);
    client.set_keep_alive(true);
  }

  template <typename Send>
  nlohmann::json WithRetry(const std::string& what, const std::string& request_id,
                           const HttpSession::Check& check, Send send) {
    std::string last_error;
    const int attempts = 1 + std::max(0, options.retries);
    for (int attempt = 0; attempt < attempts; ++attempt) {
      if (attempt > 0 && options.backoff_seconds > 0) {
        std::this_thread::sleep_for(
            std::chrono::duration<double>(options.backoff_seconds * attempt));
      }
      httplib::Result result = send();
      if (!result) {
        last_error = "transport failure: " + httplib::to_string(result.error());
        continue;
      }
      if (result->status < 200 || result->status >= 300) {
        last_error = "HTTP status " + std::to_string(result->status);
        continue;
      }
      try {
        nlohmann::json parsed = nlohmann::json::parse(result->body);
        if (check) check(parsed);
        return parsed;
      } catch (const std::exception& e) {
        last_error = std::string("malformed response: ") + e.what();
      }
    }
    throw BackendError(what + " " + options.base_url + " failed after " +
                           std::to_string(attempts) + " attempt(s) [" + request_id +
                           "]: " + last_error,
                       request_id, true);
  }

  RemoteOptions options;
  httplib::Client client;
};

HttpSession::HttpSession(const RemoteOptions& options)
    : impl_(std::make_unique<Impl>(options)) {}
HttpSession::~HttpSession() = default;
HttpSession::HttpSession(HttpSession&&) noexcept = default;
HttpSession& HttpSession::operator=(HttpSession&&) noexcept = default;

nlohmann::json HttpSession::PostJson(const std::string& path, const nlohmann::json& body,
                                     const std::string& request_id, const Check& check) {
  const std::string payload = body.dump();
  return impl_->WithRetry("POST " + path, request_id, check, [&] {
    return impl_->client.Post(path, payload, "application/json");
  });
}

nlohmann::json HttpSession::GetJson(const std::string& path, const std::string& request_id,
                                    const Check& check) {
  return impl_->WithRetry("GET " + path, request_id, check,
                          [&] { return impl_->client.Get(path); });
}

}  // namespace chartclean::internal
