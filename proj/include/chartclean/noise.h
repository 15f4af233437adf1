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

// Synthetic noise injection into clean summaries.
//
// One sentence of the summary is chosen as a prompt, a text generator
// continues it with one sentence, and that sentence is inserted at a random
// position of the sentence list. The original sentences are left untouched and
// in order.
//
// Randomness: record r uses SplitMix64(seed XOR Fnv1a64(r.id)); the first
// draw is prompt_index = Below(n) and the second is insert_index = Below(n + 1),
// where n is the number of sentences. Records can therefore be processed in
// any order, or in parallel, with identical results.

#ifndef CHARTCLEAN_NOISE_H_
#define CHARTCLEAN_NOISE_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chartclean/chart_model.h"
#include "chartclean/entailment.h"
#include "json.hpp"

namespace chartclean {

class TextGenerator {
 public:
  virtual ~TextGenerator() = default;
  // Returns one sentence continuing `prompt`. Safe to call concurrently.
  virtual std::string Generate(const std::string& prompt) const = 0;
  virtual nlohmann::ordered_json Describe() const = 0;
};

// Deterministic template generator. "{prompt}" in the template is replaced
// with the prompt's first word (punctuation stripped), so that distinct prompts
// give distinct but reproducible sentences.
class StubGenerator : public TextGenerator {
 public:
  static constexpr const char* kDefaultTemplate =
      "Observers also noted that {prompt} figures were widely discussed in the media.";

  explicit StubGenerator(std::string template_text = kDefaultTemplate);
  std::string Generate(const std::string& prompt) const override;
  nlohmann::ordered_json Describe() const override;

 private:
  std::string template_;
};

// POST {base_url}/v1/generate {"prompt": p} -> {"text": s}. Decoding strategy
// (greedy) is the service's responsibility. Retries follow RemoteOptions.
class RemoteGenerator : public TextGenerator {
 public:
  explicit RemoteGenerator(RemoteOptions options);
  std::string Generate(const std::string& prompt) const override;
  nlohmann::ordered_json Describe() const override;

 private:
  RemoteOptions options_;
};

struct NoiseEvent {
  std::string record_id;
  size_t prompt_index = 0;
  size_t insert_index = 0;
  std::string generated;
  uint64_t seed = 0;  // the run seed, before mixing with the id hash

  bool operator==(const NoiseEvent&) const = default;
};

uint64_t RecordSeed(uint64_t seed, const std::string& record_id);

// Throws DataError for an empty summary, when the generator output is empty
// or more than one sentence, or when the result would not re-segment into one
// more sentence than the original (an unterminated neighbour). Throws
// BackendError (naming the record) when the generator fails.
std::pair<ChartRecord, NoiseEvent> InjectNoise(const ChartRecord& record,
                                               const TextGenerator& generator, uint64_t seed);

struct InjectResult {
  Corpus corpus;                   // same order as the input
  std::vector<NoiseEvent> events;  // in corpus order
};

// Noises ceil(fraction * N) records (the product is taken with a 1e-9
// allowance for binary rounding). The chosen records are the first k of the
// record indices shuffled by SplitMix64(seed). fraction must lie in (0, 1].
InjectResult InjectCorpus(const Corpus& corpus, const TextGenerator& generator, uint64_t seed,
                          double fraction, size_t parallelism = 1);

nlohmann::ordered_json NoiseEventToJson(const NoiseEvent& event);

}  // namespace chartclean

#endif  // CHARTCLEAN_NOISE_H_
