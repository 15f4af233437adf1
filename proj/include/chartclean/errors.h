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

#ifndef CHARTCLEAN_ERRORS_H_
#define CHARTCLEAN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace chartclean {

// Bad input data: malformed files, invariant violations, degenerate records.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Misuse of an API or bad configuration (bad flag values, empty markers).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Failure of an external scorer or generator. `retryable` is true for
// transport-level failures that a retry may fix.
class BackendError : public std::runtime_error {
 public:
  BackendError(const std::string& message, std::string request_id,
               bool retryable)
      : std::runtime_error(message),
        request_id_(std::move(request_id)),
        retryable_(retryable) {}

  const std::string& request_id() const { return request_id_; }
  bool retryable() const { return retryable_; }

 private:
  std::string request_id_;
  bool retryable_;
};

}  // namespace chartclean

#endif  // CHARTCLEAN_ERRORS_H_
