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

// Dataset-size bookkeeping for one or more corpus files.

#ifndef CHARTCLEAN_CORPUS_STATS_H_
#define CHARTCLEAN_CORPUS_STATS_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "chartclean/chart_model.h"
#include "json.hpp"

namespace chartclean {

// Split tag implied by a file name: a stem containing "train", "validation",
// "valid"/"val"/"dev" or "test" (as a '_', '-' or '.' separated word) maps to
// that split; anything else is unsplit.
SplitTag InferSplitTag(const std::filesystem::path& path);

struct CorpusStats {
  size_t records = 0;
  std::map<std::string, size_t> records_by_split;  // keyed by SplitTagName
  std::map<size_t, size_t> sentence_count_histogram;  // sentences -> records
  double mean_sentences = 0.0;  // per summary, segmenter-defined
  double mean_tokens = 0.0;     // whitespace tokens per summary
};

CorpusStats ComputeCorpusStats(const std::vector<Corpus>& corpora);
std::string FormatCorpusStats(const CorpusStats& stats);
nlohmann::ordered_json CorpusStatsToJson(const CorpusStats& stats);

}  // namespace chartclean

#endif  // CHARTCLEAN_CORPUS_STATS_H_
