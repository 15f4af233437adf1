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

// Entailment-based cleaning of reference summaries.
//
// For each record the chart is linearized into the premise and the summary is
// segmented into sentences. Each sentence is scored as a hypothesis against the
// premise and kept only when its score is strictly greater than the threshold.
// Kept sentences are reassembled in their original order. Sentences are only
// ever removed, never rewritten or replaced.

#ifndef CHARTCLEAN_NLI_FILTER_H_
#define CHARTCLEAN_NLI_FILTER_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chartclean/chart_model.h"
#include "chartclean/entailment.h"
#include "json.hpp"

namespace chartclean {

inline constexpr double kDefaultThreshold = 0.3;

// What to do with a record none of whose sentences clears the threshold.
enum class EmptyPolicy {
  kDropRecord,  // remove the record from the cleaned corpus
  kKeepBest,    // keep the single highest-scoring sentence (ties: lowest index)
};

// Which policy actually fired for a record.
enum class AppliedPolicy { kNone, kDropRecord, kKeepBest };

// CLI spelling: "drop", "keep-best".
std::optional<EmptyPolicy> ParseEmptyPolicy(std::string_view name);
std::string_view EmptyPolicyName(EmptyPolicy policy);
std::string_view AppliedPolicyName(AppliedPolicy policy);

// What filter_corpus does when the backend fails terminally on a record.
enum class OnBackendError { kAbort, kSkip };

struct FilterDecision {
  size_t sentence_index = 0;
  std::string sentence;
  EntailmentScore score = EntailmentScore::Clamped(0.0);
  bool kept = false;  // score > threshold
  double threshold = kDefaultThreshold;
};

struct FilteredRecord {
  std::string id;
  std::vector<FilterDecision> decisions;
  std::string cleaned_summary;
  AppliedPolicy empty_policy_applied = AppliedPolicy::kNone;

  // True when the record survives into the cleaned corpus.
  bool retained() const { return empty_policy_applied != AppliedPolicy::kDropRecord; }
};

struct ScoreHistogram {
  // Bin b counts scores in [b/10, (b+1)/10); the last bin also holds 1.0.
  std::array<size_t, 10> counts{};
};

struct FilterStats {
  size_t records_total = 0;      // records that were filtered
  size_t records_unchanged = 0;  // every sentence kept
  size_t records_modified = 0;   // some, not all, sentences kept
  size_t records_emptied = 0;    // no sentence cleared the threshold
  size_t records_dropped = 0;    // emptied and removed by kDropRecord
  size_t records_failed = 0;     // skipped after a backend failure
  size_t sentences_total = 0;
  size_t sentences_kept = 0;
  size_t sentences_discarded = 0;
  // Absent when the population is empty.
  std::optional<double> score_mean_kept;
  std::optional<double> score_mean_discarded;
  ScoreHistogram histogram;
};

struct RecordFailure {
  std::string id;
  std::string message;
};

struct FilterOptions {
  LinearizationSpec spec;
  double threshold = kDefaultThreshold;
  EmptyPolicy empty_policy = EmptyPolicy::kDropRecord;
  OnBackendError on_error = OnBackendError::kAbort;
  size_t parallelism = 1;
};

// Throws UsageError for a threshold outside [0, 1], DataError for an empty
// summary or an unlinearizable record, and BackendError (request id attached)
// when scoring fails terminally.
FilteredRecord FilterRecord(const ChartRecord& record, const LinearizationSpec& spec,
                            const EntailmentBackend& backend, double threshold,
                            EmptyPolicy empty_policy);

struct FilterCorpusResult {
  Corpus cleaned;                       // input order, dropped records omitted
  std::vector<FilteredRecord> records;  // one per filtered record, input order
  std::vector<RecordFailure> failures;  // only with OnBackendError::kSkip
  FilterStats stats;
};

// Filters records concurrently (at most options.parallelism at a time) and
// assembles results in input order. With kAbort the first backend failure (by
// record position) is rethrown as BackendError naming the record id; with
// kSkip the record is left out of both the cleaned corpus and `records` and is
// listed in `failures`. Data errors always propagate, naming the record id.
FilterCorpusResult FilterCorpus(const Corpus& corpus, const EntailmentBackend& backend,
                                const FilterOptions& options);

// Sentence-level statistics over a decision list: kept/discarded counts,
// population means and the 10-bin histogram. Record-level counts are left 0.
FilterStats CalibrationReport(const std::vector<FilterDecision>& decisions);

nlohmann::ordered_json FilteredRecordToJson(const FilteredRecord& record);
nlohmann::ordered_json FilterStatsToJson(const FilterStats& stats);

}  // namespace chartclean

#endif  // CHARTCLEAN_NLI_FILTER_H_
