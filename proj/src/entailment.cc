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

#include "chartclean/entailment.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "chartclean/parallel.h"
#include "chartclean/random.h"
#include "http_client.h"

namespace chartclean {
namespace embedded {
extern const std::string_view kStopwords;
}  // namespace embedded

EntailmentScore EntailmentScore::Clamped(double value) {
  if (std::isnan(value)) return EntailmentScore(0.0);
  return EntailmentScore(std::clamp(value, 0.0, 1.0));
}

void CheckRequest(const ScoringRequest& request) {
  if (request.premise.empty()) throw UsageError("scoring request has an empty premise");
  if (request.hypothesis.empty()) throw UsageError("scoring request has an empty hypothesis");
}

std::string RequestId(const ScoringRequest& request) {
  std::string key = request.premise;
  key.push_back('\0');
  key += request.hypothesis;
  char buffer[24];
  std::snprintf(buffer, sizeof buffer, "req-%016llx",
                static_cast<unsigned long long>(Fnv1a64(key)));
  return buffer;
}

BatchScoringError::BatchScoringError(const BackendError& cause, size_t index)
    : BackendError("batch index " + std::to_string(index) + ": " + cause.what(),
                   cause.request_id(), cause.retryable()),
      index_(index) {}

std::vector<EntailmentScore> EntailmentBackend::ScoreBatch(
    std::span<const ScoringRequest> requests, size_t parallelism) const {
  if (parallelism == 0) throw UsageError("parallelism must be at least 1");
  std::vector<EntailmentScore> scores(requests.size(), EntailmentScore::Clamped(0.0));
  auto failure = ParallelFor(requests.size(), parallelism,
                             [&](size_t i) { scores[i] = Score(requests[i]); });
  if (failure) {
    try {
      std::rethrow_exception(failure->error);
    } catch (const BackendError& e) {
      throw BatchScoringError(e, failure->index);
    }
  }
  return scores;
}

ConstantBackend::ConstantBackend(double value) : score_(EntailmentScore::Clamped(value)) {}

EntailmentScore ConstantBackend::Score(const ScoringRequest& request) const {
  CheckRequest(request);
  return score_;
}

nlohmann::ordered_json ConstantBackend::Describe() const {
  nlohmann::ordered_json out;
  out["kind"] = "mock";
  out["value"] = score_.value();
  return out;
}

LexicalOracleBackend::LexicalOracleBackend(std::unordered_set<std::string> stopwords)
    : stopwords_(std::move(stopwords)) {}

std::unordered_set<std::string> LexicalOracleBackend::ParseStopwords(
    std::string_view list_text) {
  std::unordered_set<std::string> words;
  std::istringstream in{std::string(list_text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string word;
    while (fields >> word) words.insert(word);
  }
  return words;
}

LexicalOracleBackend LexicalOracleBackend::WithDefaultStopwords() {
  return LexicalOracleBackend(ParseStopwords(embedded::kStopwords));
}

std::vector<std::string> LexicalOracleBackend::ContentTokens(std::string_view text) const {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (in >> raw) {
    std::string token;
    for (char c : raw) {
      const auto u = static_cast<unsigned char>(c);
      if (u < 0x80 && std::ispunct(u)) continue;
      token.push_back(u < 0x80 ? static_cast<char>(std::tolower(u)) : c);
    }
    if (!token.empty() && !stopwords_.contains(token)) tokens.push_back(std::move(token));
  }
  return tokens;
}

EntailmentScore LexicalOracleBackend::Score(const ScoringRequest& request) const {
  CheckRequest(request);
  const auto hypothesis = ContentTokens(request.hypothesis);
  if (hypothesis.empty()) return EntailmentScore::Clamped(0.0);
  const auto premise_tokens = ContentTokens(request.premise);
  const std::unordered_set<std::string> premise(premise_tokens.begin(), premise_tokens.end());
  size_t covered = 0;
  for (const auto& token : hypothesis) covered += premise.contains(token) ? 1 : 0;
  return EntailmentScore::Clamped(static_cast<double>(covered) /
                                  static_cast<double>(hypothesis.size()));
}

nlohmann::ordered_json LexicalOracleBackend::Describe() const {
  nlohmann::ordered_json out;
  out["kind"] = "lexical";
  out["stopword_count"] = stopwords_.size();
  return out;
}

EntailmentScore NormalizeServiceScore(double raw, const std::string& request_id) {
  if (!std::isfinite(raw) || raw < 0.0 || raw > 100.0) {
    throw BackendError("entailment value out of range: " + std::to_string(raw), request_id,
                       true);
  }
  return EntailmentScore::Clamped(raw > 1.0 ? raw / 100.0 : raw);
}

namespace {

double EntailmentField(const nlohmann::json& body, const std::string& request_id) {
  auto it = body.find("entailment");
  if (it == body.end() || !it->is_number()) {
    throw BackendError("response lacks numeric 'entailment'", request_id, true);
  }
  const double raw = it->get<double>();
  NormalizeServiceScore(raw, request_id);
  return raw;
}

nlohmann::json PairJson(const ScoringRequest& request) {
  return {{"premise", request.premise}, {"hypothesis", request.hypothesis}};
}

EntailmentScore ScoreWith(internal::HttpSession& session, const ScoringRequest& request) {
  CheckRequest(request);
  const std::string id = RequestId(request);
  const auto body = session.PostJson("/v1/score", PairJson(request), id,
                                     [&](const nlohmann::json& b) { EntailmentField(b, id); });
  return NormalizeServiceScore(EntailmentField(body, id), id);
}

}  // namespace

RemoteBackend::RemoteBackend(RemoteOptions options) : options_(std::move(options)) {
  if (options_.timeout_seconds <= 0) throw UsageError("remote timeout must be positive");
  if (options_.retries < 0) throw UsageError("remote retry count must be non-negative");
}

EntailmentScore RemoteBackend::Score(const ScoringRequest& request) const {
  internal::HttpSession session(options_);
  return ScoreWith(session, request);
}

std::vector<EntailmentScore> RemoteBackend::ScoreBatch(std::span<const ScoringRequest> requests,
                                                       size_t parallelism) const {
  if (parallelism == 0) throw UsageError("parallelism must be at least 1");
  for (const auto& request : requests) CheckRequest(request);
  std::vector<EntailmentScore> scores(requests.size(), EntailmentScore::Clamped(0.0));
  auto make_session = [this] { return internal::HttpSession(options_); };

  std::optional<ParallelFailure> failure;
  if (options_.batch_size == 0) {
    failure = ParallelForWithState(requests.size(), parallelism, make_session,
                                   [&](internal::HttpSession& session, size_t i) {
                                     scores[i] = ScoreWith(session, requests[i]);
                                   });
  } else {
    const size_t chunk = options_.batch_size;
    const size_t chunks = (requests.size() + chunk - 1) / chunk;
    failure = ParallelForWithState(
        chunks, parallelism, make_session, [&](internal::HttpSession& session, size_t c) {
          const size_t begin = c * chunk;
          const size_t end = std::min(requests.size(), begin + chunk);
          nlohmann::json pairs = nlohmann::json::array();
          std::string key;
          for (size_t i = begin; i < end; ++i) {
            pairs.push_back(PairJson(requests[i]));
            key += RequestId(requests[i]);
          }
          char id[32];
          std::snprintf(id, sizeof id, "batch-%016llx",
                        static_cast<unsigned long long>(Fnv1a64(key)));
          const size_t expected = end - begin;
          auto check = [&](const nlohmann::json& body) {
            auto it = body.find("entailments");
            if (it == body.end() || !it->is_array() || it->size() != expected) {
              throw BackendError("response lacks 'entailments' of the request length", id,
                                 true);
            }
            for (const auto& v : *it) {
              if (!v.is_number()) throw BackendError("non-numeric entailment", id, true);
              NormalizeServiceScore(v.get<double>(), id);
            }
          };
          const auto body =
              session.PostJson("/v1/score_batch", {{"pairs", pairs}}, id, check);
          for (size_t i = begin; i < end; ++i) {
            scores[i] = NormalizeServiceScore(body["entailments"][i - begin].get<double>(), id);
          }
        });
    if (failure) failure->index *= chunk;
  }
  if (failure) {
    try {
      std::rethrow_exception(failure->error);
    } catch (const BackendError& e) {
      throw BatchScoringError(e, failure->index);
    }
  }
  return scores;
}

nlohmann::ordered_json RemoteBackend::Describe() const {
  nlohmann::ordered_json out;
  out["kind"] = "remote";
  out["base_url"] = options_.base_url;
  out["timeout_seconds"] = options_.timeout_seconds;
  out["retries"] = options_.retries;
  out["backoff_seconds"] = options_.backoff_seconds;
  out["batch_size"] = options_.batch_size;
  return out;
}

std::string RemoteBackend::Health() const {
  internal::HttpSession session(options_);
  const auto body = session.GetJson("/v1/health", "health", [](const nlohmann::json& b) {
    if (!b.is_object() || b.value("status", "") != "ok") {
      throw BackendError("service not healthy", "health", true);
    }
  });
  return body.value("model", "");
}

std::unique_ptr<EntailmentBackend> MakeBackend(std::string_view descriptor,
                                               const RemoteOptions& remote) {
  if (descriptor == "lexical") {
    return std::make_unique<LexicalOracleBackend>(LexicalOracleBackend::WithDefaultStopwords());
  }
  if (descriptor == "remote") return std::make_unique<RemoteBackend>(remote);
  if (descriptor.starts_with("mock:")) {
    const std::string text(descriptor.substr(5));
    double value = 0;
    try {
      size_t used = 0;
      value = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw UsageError("bad mock score '" + text + "'");
    }
    if (!(value >= 0.0 && value <= 1.0)) throw UsageError("mock score must lie in [0, 1]");
    return std::make_unique<ConstantBackend>(value);
  }
  throw UsageError("unknown backend '" + std::string(descriptor) +
                   "' (expected remote, lexical or mock:<v>)");
}

}  // namespace chartclean
