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

#include "chartclean/noise.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "chartclean/errors.h"
#include "chartclean/parallel.h"
#include "chartclean/random.h"
#include "chartclean/segment.h"
#include "http_client.h"

namespace chartclean {

StubGenerator::StubGenerator(std::string template_text) : template_(std::move(template_text)) {}

std::string StubGenerator::Generate(const std::string& prompt) const {
  std::string word;
  for (char c : prompt) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isspace(u)) {
      if (!word.empty()) break;
      continue;
    }
    if (u < 0x80 && std::ispunct(u)) continue;
    word.push_back(static_cast<char>(u < 0x80 ? std::tolower(u) : u));
  }
  std::string out = template_;
  const std::string placeholder = "{prompt}";
  for (size_t pos = out.find(placeholder); pos != std::string::npos;
       pos = out.find(placeholder, pos + word.size())) {
    out.replace(pos, placeholder.size(), word);
  }
  return out;
}

nlohmann::ordered_json StubGenerator::Describe() const {
  nlohmann::ordered_json out;
  out["kind"] = "stub";
  out["template"] = template_;
  return out;
}

RemoteGenerator::RemoteGenerator(RemoteOptions options) : options_(std::move(options)) {}

std::string RemoteGenerator::Generate(const std::string& prompt) const {
  internal::HttpSession session(options_);
  const std::string id = RequestId({prompt, "generate"});
  const auto body = session.PostJson("/v1/generate", {{"prompt", prompt}}, id,
                                     [&](const nlohmann::json& b) {
                                       auto it = b.find("text");
                                       if (it == b.end() || !it->is_string()) {
                                         throw BackendError("response lacks string 'text'", id,
                                                            true);
                                       }
                                     });
  return body["text"].get<std::string>();
}

nlohmann::ordered_json RemoteGenerator::Describe() const {
  nlohmann::ordered_json out;
  out["kind"] = "remote";
  out["base_url"] = options_.base_url;
  out["timeout_seconds"] = options_.timeout_seconds;
  out["retries"] = options_.retries;
  return out;
}

uint64_t RecordSeed(uint64_t seed, const std::string& record_id) {
  return seed ^ Fnv1a64(record_id);
}

std::pair<ChartRecord, NoiseEvent> InjectNoise(const ChartRecord& record,
                                               const TextGenerator& generator, uint64_t seed) {
  SegmentedSummary segmented = Segment(record.summary);
  const size_t n = segmented.sentences.size();
  if (n == 0) throw DataError("record '" + record.id + "' has an empty summary");

  SplitMix64 rng(RecordSeed(seed, record.id));
  NoiseEvent event;
  event.record_id = record.id;
  event.seed = seed;
  event.prompt_index = static_cast<size_t>(rng.Below(n));
  event.insert_index = static_cast<size_t>(rng.Below(n + 1));

  std::string generated;
  try {
    generated = generator.Generate(segmented.sentences[event.prompt_index]);
  } catch (const BackendError& e) {
    throw BackendError("record '" + record.id + "': generator failed: " + e.what(),
                       e.request_id(), e.retryable());
  }
  const SegmentedSummary pieces = Segment(generated);
  if (pieces.sentences.size() != 1) {
    throw DataError("record '" + record.id + "': generator returned " +
                    std::to_string(pieces.sentences.size()) +
                    " sentences, expected exactly one");
  }
  event.generated = pieces.sentences.front();

  segmented.sentences.insert(
      segmented.sentences.begin() + static_cast<std::ptrdiff_t>(event.insert_index),
      event.generated);
  ChartRecord noised = record;
  noised.summary = Reassemble(segmented);
  // An unterminated sentence next to the insertion point would swallow it.
  if (Segment(noised.summary).sentences.size() != n + 1) {
    throw DataError("record '" + record.id + "': inserted sentence does not stand alone at "
                    "position " + std::to_string(event.insert_index));
  }
  return {std::move(noised), std::move(event)};
}

InjectResult InjectCorpus(const Corpus& corpus, const TextGenerator& generator, uint64_t seed,
                          double fraction, size_t parallelism) {
  if (corpus.records.empty()) throw DataError("cannot inject noise into an empty corpus");
  if (!(fraction > 0.0 && fraction <= 1.0)) throw UsageError("fraction must lie in (0, 1]");
  if (parallelism == 0) throw UsageError("parallelism must be at least 1");

  const size_t n = corpus.records.size();
  const size_t k = std::min(
      n, static_cast<size_t>(std::ceil(fraction * static_cast<double>(n) - 1e-9)));
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  SplitMix64 rng(seed);
  Shuffle(order, rng);
  std::vector<size_t> chosen(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(chosen.begin(), chosen.end());

  InjectResult result;
  result.corpus = corpus;
  std::vector<NoiseEvent> events(chosen.size());
  auto failure = ParallelFor(chosen.size(), parallelism, [&](size_t j) {
    auto [noised, event] = InjectNoise(corpus.records[chosen[j]], generator, seed);
    result.corpus.records[chosen[j]] = std::move(noised);
    events[j] = std::move(event);
  });
  if (failure) std::rethrow_exception(failure->error);
  result.events = std::move(events);
  return result;
}

nlohmann::ordered_json NoiseEventToJson(const NoiseEvent& event) {
  nlohmann::ordered_json out;
  out["record_id"] = event.record_id;
  out["prompt_index"] = event.prompt_index;
  out["insert_index"] = event.insert_index;
  out["generated"] = event.generated;
  out["seed"] = event.seed;
  return out;
}

}  // namespace chartclean
