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

// Premise/hypothesis entailment scoring.
//
// All backends report scores on [0, 1]. Three implementations ship:
//
//   ConstantBackend       fixed score for every request (mock).
//   LexicalOracleBackend  covered-content-token fraction; deterministic and
//                         brute-forceable, used to exercise filtering without
//                         a model. It says nothing about NLI quality.
//   RemoteBackend         HTTP client for an NLI service:
//                           POST /v1/score        {"premise","hypothesis"}
//                                                 -> {"entailment": v}
//                           POST /v1/score_batch  {"pairs":[{..},..]}
//                                                 -> {"entailments":[v,..]}
//                           GET  /v1/health       -> {"status":"ok","model":id}
//
// Remote failures are never turned into a default score: after the retry
// budget is spent the call throws BackendError.

#ifndef CHARTCLEAN_ENTAILMENT_H_
#define CHARTCLEAN_ENTAILMENT_H_

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "chartclean/errors.h"
#include "json.hpp"

namespace chartclean {

class EntailmentScore {
 public:
  // Clamps into [0, 1]; NaN becomes 0.
  static EntailmentScore Clamped(double value);

  double value() const { return value_; }
  bool operator==(const EntailmentScore&) const = default;

 private:
  explicit EntailmentScore(double value) : value_(value) {}
  double value_;
};

struct ScoringRequest {
  std::string premise;     // linearized chart
  std::string hypothesis;  // one summary sentence
};

// Throws UsageError unless premise and hypothesis are both non-empty.
void CheckRequest(const ScoringRequest& request);

// "req-" + 16 hex digits of FNV-1a over premise, NUL, hypothesis.
std::string RequestId(const ScoringRequest& request);

// Thrown by ScoreBatch; `index` is the position of the failing request.
class BatchScoringError : public BackendError {
 public:
  BatchScoringError(const BackendError& cause, size_t index);
  size_t index() const { return index_; }

 private:
  size_t index_;
};

class EntailmentBackend {
 public:
  virtual ~EntailmentBackend() = default;

  // Same request on the same backend instance always gives the same score.
  // Safe to call concurrently.
  virtual EntailmentScore Score(const ScoringRequest& request) const = 0;

  // Element-wise Score with up to `parallelism` requests in flight. Output
  // order follows input order. Throws BatchScoringError for the lowest
  // failing index and UsageError when parallelism is 0.
  virtual std::vector<EntailmentScore> ScoreBatch(std::span<const ScoringRequest> requests,
                                                  size_t parallelism) const;

  // Configuration echoed into run manifests.
  virtual nlohmann::ordered_json Describe() const = 0;
};

class ConstantBackend : public EntailmentBackend {
 public:
  explicit ConstantBackend(double value);
  EntailmentScore Score(const ScoringRequest& request) const override;
  nlohmann::ordered_json Describe() const override;

 private:
  EntailmentScore score_;
};

// Tokens are whitespace-delimited, ASCII-lowercased, with ASCII punctuation
// deleted ("U.S." -> "us", "53%" -> "53"); empty tokens and stopwords are
// dropped. The score is the fraction of hypothesis content tokens (counted
// with multiplicity) that occur anywhere in the premise, or 0 when the
// hypothesis has no content tokens.
class LexicalOracleBackend : public EntailmentBackend {
 public:
  explicit LexicalOracleBackend(std::unordered_set<std::string> stopwords);

  // Stopwords from data/stopwords.txt as compiled into the library.
  static LexicalOracleBackend WithDefaultStopwords();
  static std::unordered_set<std::string> ParseStopwords(std::string_view list_text);

  std::vector<std::string> ContentTokens(std::string_view text) const;
  EntailmentScore Score(const ScoringRequest& request) const override;
  nlohmann::ordered_json Describe() const override;

 private:
  std::unordered_set<std::string> stopwords_;
};

struct RemoteOptions {
  std::string base_url = "http://127.0.0.1:8080";
  double timeout_seconds = 30.0;
  int retries = 3;  // extra attempts after the first
  double backoff_seconds = 0.5;  // sleep before retry k is k * backoff
  // 0 scores one request per POST /v1/score; otherwise ScoreBatch sends
  // chunks of this size to /v1/score_batch.
  size_t batch_size = 0;
};

// Normalizes a service value to [0, 1]. Values in (1, 100] are read as the
// 0-100 scale and divided by 100 (87 -> 0.87). Anything else outside [0, 1],
// or a non-finite value, throws BackendError (retryable).
EntailmentScore NormalizeServiceScore(double raw, const std::string& request_id);

class RemoteBackend : public EntailmentBackend {
 public:
  explicit RemoteBackend(RemoteOptions options);

  EntailmentScore Score(const ScoringRequest& request) const override;
  std::vector<EntailmentScore> ScoreBatch(std::span<const ScoringRequest> requests,
                                          size_t parallelism) const override;
  nlohmann::ordered_json Describe() const override;

  // GET /v1/health; returns the model identifier the service reports.
  std::string Health() const;

  const RemoteOptions& options() const { return options_; }

 private:
  RemoteOptions options_;
};

// Parses a backend descriptor: "lexical", "mock:<value>" or "remote".
std::unique_ptr<EntailmentBackend> MakeBackend(std::string_view descriptor,
                                               const RemoteOptions& remote);

}  // namespace chartclean

#endif  // CHARTCLEAN_ENTAILMENT_H_
