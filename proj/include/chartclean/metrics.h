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

// Reference-based metrics: corpus BLEU-4 and mean ROUGE-2 F1.
//
// Both metrics tokenize with Tokenize13a, a port of the "13a" tokenizer of
// mteval-v13a / sacreBLEU, preceded by a small Unicode punctuation
// normalization. Case is preserved.
//
// BLEU follows sacreBLEU's corpus BLEU with exponential ("exp", NIST)
// smoothing and a single reference per hypothesis:
//   * clipped n-gram matches and hypothesis n-gram totals are summed over the
//     corpus for n = 1..4;
//   * with no match at any order the score is 0;
//   * otherwise p_n = 100 * matched_n / total_n, or, when matched_n = 0,
//     100 / (2^k * total_n) where k counts the zero-match orders so far;
//     a zero total_n makes the score 0;
//   * BP = exp(1 - r / c) when c < r, else 1 (c, r: corpus token counts);
//   * BLEU = BP * exp(mean log p_n), on a 0-100 scale.
//
// ROUGE-2 per pair is the F1 of clipped bigram matches,
// P = matched / hyp bigrams, R = matched / ref bigrams, F1 = 2PR / (P + R);
// a side with fewer than two tokens, or no match, gives 0. The corpus value is
// the arithmetic mean of the per-pair F1.

#ifndef CHARTCLEAN_METRICS_H_
#define CHARTCLEAN_METRICS_H_

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace chartclean {

struct EvalPair {
  std::string id;
  std::string hypothesis;
  std::string reference;
};

// Replaces curly quotes with ASCII quotes, en and em dashes with '-', the
// ellipsis character with "..." and no-break spaces with spaces.
std::string NormalizeUnicodePunctuation(std::string_view text);

std::vector<std::string> Tokenize13a(std::string_view text);

struct BleuStats {
  std::array<size_t, 4> matched{};
  std::array<size_t, 4> total{};
  size_t hypothesis_length = 0;
  size_t reference_length = 0;

  BleuStats& operator+=(const BleuStats& other);
};

BleuStats ComputeBleuStats(const std::vector<std::string>& hypothesis,
                           const std::vector<std::string>& reference);
double BleuFromStats(const BleuStats& stats);

// Throws DataError for an empty pair list.
double Bleu4(const std::vector<EvalPair>& pairs);

double Rouge2F1(const std::vector<std::string>& hypothesis,
                const std::vector<std::string>& reference);

// Throws DataError for an empty pair list.
double Rouge2(const std::vector<EvalPair>& pairs);

struct PairScore {
  std::string id;
  double rouge2_f1 = 0.0;
};

struct EvalReport {
  double bleu4 = 0.0;
  double rouge2_f1 = 0.0;
  size_t pair_count = 0;
  std::vector<PairScore> per_pair_rouge2;
  // Reserved for model-based metrics computed outside the toolkit.
  std::optional<double> perplexity;
  std::optional<double> nubia;
};

EvalReport Evaluate(const std::vector<EvalPair>& pairs);

// Reads JSONL files whose lines carry "id" and a text field ("text", or
// "summary" when there is no "text", so a canonical corpus can serve as the
// reference side). Pairs follow reference-file order. Throws DataError
// listing every id present on only one side, for duplicate ids, and for empty
// files.
std::vector<EvalPair> AlignPairs(const std::filesystem::path& hypothesis_path,
                                 const std::filesystem::path& reference_path);

nlohmann::ordered_json EvalReportToJson(const EvalReport& report);

}  // namespace chartclean

#endif  // CHARTCLEAN_METRICS_H_
