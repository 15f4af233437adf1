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

// Small JSON-over-HTTP helper shared by the remote scorer and generator.
// Internal to the library.

#ifndef CHARTCLEAN_SRC_HTTP_CLIENT_H_
#define CHARTCLEAN_SRC_HTTP_CLIENT_H_

#include <functional>
#include <memory>
#include <string>

#include "chartclean/entailment.h"
#include "json.hpp"

namespace chartclean::internal {

// One keep-alive connection to the service. Not thread-safe; give each worker
// its own session.
class HttpSession {
 public:
  explicit HttpSession(const RemoteOptions& options);
  ~HttpSession();
  HttpSession(HttpSession&&) noexcept;
  HttpSession& operator=(HttpSession&&) noexcept;

  // Throws (any std::exception) when a parsed body breaks the endpoint's
  // response contract; the attempt then counts as a malformed response.
  using Check = std::function<void(const nlohmann::json&)>;

  // POSTs `body` and returns the parsed JSON response. Transport failures,
  // non-2xx statuses, unparsable bodies and bodies rejected by `check` are
  // retried up to options.retries times; the last failure is thrown as
  // BackendError carrying `request_id`.
  nlohmann::json PostJson(const std::string& path, const nlohmann::json& body,
                          const std::string& request_id, const Check& check = {});

  // Same retry contract for a GET.
  nlohmann::json GetJson(const std::string& path, const std::string& request_id,
                         const Check& check = {});

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace chartclean::internal

#endif  // CHARTCLEAN_SRC_HTTP_CLIENT_H_
