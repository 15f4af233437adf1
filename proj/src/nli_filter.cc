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

#include "chartclean/nli_filter.h"

#include <algorithm>
#include <cmath>

#include "chartclean/errors.h"
#include "chartclean/linearize.h"
#include "chartclean/parallel.h"
#include "chartclean/segment.h"

namespace chartclean {

std::optional<EmptyPolicy> ParseEmptyPolicy(std::string_view name) {
  if (name == "drop") return EmptyPolicy::kDropRecord;
  if (name == "keep-best") return EmptyPolicy::kKeepBest;
  return std::nullopt;
}

std::string_view EmptyPolicyName(EmptyPolicy policy) {
  return policy == EmptyPolicy::kDropRecord ? "drop" : "keep-best";
}

std::string_view AppliedPolicyName(AppliedPolicy policy) {
  switch (policy) {
    case AppliedPolicy::kNone:
      return "none";
    case AppliedPolicy::kDropRecord:
      return "drop_record";
    case AppliedPolicy::kKeepBest:
      return "keep_best";
  }
  return "none";
}

FilteredRecord FilterRecord(const ChartRecord& record, const LinearizationSpec& spec,
                            const EntailmentBackend& backend, double threshold,
                            EmptyPolicy empty_policy) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw UsageError("threshold must lie in [0, 1]");
  }
  const SegmentedSummary segmented = Segment(record.summary);
  if (segmented.sentences.empty()) {
    throw DataError("record '" + record.id + "' has an empty summary");
  }
  const std::string premise = Linearize(record, spec).text;

  std::vector<ScoringRequest> requests;
  requests.reserve(segmented.sentences.size());
  for (const auto& sentence : segmented.sentences) requests.push_back({premise, sentence});
  const auto scores = backend.ScoreBatch(requests, 1);

  FilteredRecord result;
  result.id = record.id;
  SegmentedSummary kept;
  for (size_t i = 0; i < scores.size(); ++i) {
    FilterDecision decision;
    decision.sentence_index = i;
    decision.sentence = segmented.sentences[i];
    decision.score = scores[i];
    decision.kept = scores[i].value() > threshold;
    decision.threshold = threshold;
    if (decision.kept) kept.sentences.push_back(decision.sentence);
    result.decisions.push_back(std::move(decision));
  }

  if (kept.sentences.empty()) {
    if (empty_policy == EmptyPolicy::kDropRecord) {
      result.empty_policy_applied = AppliedPolicy::kDropRecord;
    } else {
      result.empty_policy_applied = AppliedPolicy::kKeepBest;
      // max_element returns the first maximum, i.e. the lowest index on ties.
      auto best = std::max_element(result.decisions.begin(), result.decisions.end(),
                                   [](const FilterDecision& a, const FilterDecision& b) {
                                     return a.score.value() < b.score.value();
                                   });
      kept.sentences.push_back(best->sentence);
    }
  }
  result.cleaned_summary = Reassemble(kept);
  return result;
}

FilterStats CalibrationReport(const std::vector<FilterDecision>& decisions) {
  FilterStats stats;
  double sum_kept = 0.0;
  double sum_discarded = 0.0;
  for (const auto& d : decisions) {
    ++stats.sentences_total;
    const double v = d.score.value();
    if (d.kept) {
      ++stats.sentences_kept;
      sum_kept += v;
    } else {
      ++stats.sentences_discarded;
      sum_discarded += v;
    }
    const size_t bin = std::min<size_t>(9, static_cast<size_t>(std::floor(v * 10.0)));
    ++stats.histogram.counts[bin];
  }
  if (stats.sentences_kept > 0) {
    stats.score_mean_kept = sum_kept / static_cast<double>(stats.sentences_kept);
  }
  if (stats.sentences_discarded > 0) {
    stats.score_mean_discarded = sum_discarded / static_cast<double>(stats.sentences_discarded);
  }
  return stats;
}

FilterCorpusResult FilterCorpus(const Corpus& corpus, const EntailmentBackend& backend,
                                const FilterOptions& options) {
  if (options.parallelism == 0) throw UsageError("parallelism must be at least 1");
  if (!(options.threshold >= 0.0 && options.threshold <= 1.0)) {
    throw UsageError("threshold must lie in [0, 1]");
  }

  const size_t n = corpus.records.size();
  std::vector<std::optional<FilteredRecord>> filtered(n);
  std::vector<std::optional<std::string>> backend_errors(n);

  auto failure = ParallelFor(n, options.parallelism, [&](size_t i) {
    const ChartRecord& record = corpus.records[i];
    try {
      filtered[i] = FilterRecord(record, options.spec, backend, options.threshold,
                                 options.empty_policy);
    } catch (const BackendError& e) {
      if (options.on_error == OnBackendError::kAbort) {
        throw BackendError("record '" + record.id + "': " + e.what(), e.request_id(),
                           e.retryable());
      }
      backend_errors[i] = e.what();
    } catch (const DataError& e) {
      const std::string what = e.what();
      if (what.find("'" + record.id + "'") != std::string::npos) throw;
      throw DataError("record '" + record.id + "': " + what);
    }
  });
  if (failure) std::rethrow_exception(failure->error);

  FilterCorpusResult result;
  result.cleaned.split_tag = corpus.split_tag;
  std::vector<FilterDecision> all_decisions;
  FilterStats record_counts;
  for (size_t i = 0; i < n; ++i) {
    if (backend_errors[i]) {
      result.failures.push_back({corpus.records[i].id, *backend_errors[i]});
      ++record_counts.records_failed;
      continue;
    }
    FilteredRecord& fr = *filtered[i];
    ++record_counts.records_total;
    const size_t kept = static_cast<size_t>(std::count_if(
        fr.decisions.begin(), fr.decisions.end(), [](const auto& d) { return d.kept; }));
    if (kept == fr.decisions.size()) {
      ++record_counts.records_unchanged;
    } else if (kept > 0) {
      ++record_counts.records_modified;
    } else {
      ++record_counts.records_emptied;
    }
    all_decisions.insert(all_decisions.end(), fr.decisions.begin(), fr.decisions.end());
    if (fr.retained()) {
      ChartRecord cleaned = corpus.records[i];
      cleaned.summary = fr.cleaned_summary;
      result.cleaned.records.push_back(std::move(cleaned));
    } else {
      ++record_counts.records_dropped;
    }
    result.records.push_back(std::move(fr));
  }

  result.stats = CalibrationReport(all_decisions);
  result.stats.records_total = record_counts.records_total;
  result.stats.records_unchanged = record_counts.records_unchanged;
  result.stats.records_modified = record_counts.records_modified;
  result.stats.records_emptied = record_counts.records_emptied;
  result.stats.records_dropped = record_counts.records_dropped;
  result.stats.records_failed = record_counts.records_failed;
  return result;
}

nlohmann::ordered_json FilteredRecordToJson(const FilteredRecord& record) {
  nlohmann::ordered_json out;
  out["id"] = record.id;
  auto decisions = nlohmann::ordered_json::array();
  for (const auto& d : record.decisions) {
    nlohmann::ordered_json entry;
    entry["sentence_index"] = d.sentence_index;
    entry["sentence"] = d.sentence;
    entry["score"] = d.score.value();
    entry["kept"] = d.kept;
    entry["threshold"] = d.threshold;
    decisions.push_back(std::move(entry));
  }
  out["decisions"] = std::move(decisions);
  out["cleaned_summary"] = record.cleaned_summary;
  out["empty_policy_applied"] = std::string(AppliedPolicyName(record.empty_policy_applied));
  return out;
}

nlohmann::ordered_json FilterStatsToJson(const FilterStats& stats) {
  auto optional_number = [](const std::optional<double>& v) -> nlohmann::ordered_json {
    if (v) return *v;
    return nullptr;
  };
  nlohmann::ordered_json out;
  out["records_total"] = stats.records_total;
  out["records_unchanged"] = stats.records_unchanged;
  out["records_modified"] = stats.records_modified;
  out["records_emptied"] = stats.records_emptied;
  out["records_dropped"] = stats.records_dropped;
  out["records_failed"] = stats.records_failed;
  out["sentences_total"] = stats.sentences_total;
  out["sentences_kept"] = stats.sentences_kept;
  out["sentences_discarded"] = stats.sentences_discarded;
  out["score_mean_kept"] = optional_number(stats.score_mean_kept);
  out["score_mean_discarded"] = optional_number(stats.score_mean_discarded);
  out["score_histogram"] = stats.histogram.counts;
  return out;
}

}  // namespace chartclean
