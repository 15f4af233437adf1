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

// Corpus loading, saving and deterministic splitting.
//
// The canonical on-disk form is JSON Lines: one ChartRecord object per line
// (see docs/chart_record.schema.json). Upstream datasets that ship a data
// table per chart plus a metadata sidecar are converted with LoadTabular.

#ifndef CHARTCLEAN_INGEST_H_
#define CHARTCLEAN_INGEST_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "chartclean/chart_model.h"

namespace chartclean {

// Reads canonical JSONL. Records keep file order; blank lines are skipped.
// Throws DataError naming the line for malformed JSON, schema errors,
// duplicate ids, and records that fail Validate.
Corpus LoadCanonical(const std::filesystem::path& path);
Corpus ParseCanonical(std::istream& in);

void SaveCanonical(const Corpus& corpus, std::ostream& out);
void SaveCanonical(const Corpus& corpus, const std::filesystem::path& path);

// Parses one delimited table into a record with the given id. The delimiter
// is a tab if the header line contains one, otherwise a comma; fields may be
// double-quoted with "" as an escaped quote. The first header column becomes
// x_label, the remaining columns become y_labels and series names, and every
// data row contributes one point to each series.
ChartRecord ParseTable(std::string_view text, const std::string& id);

// `data_path` is a single table file or a directory of them (*.csv, *.tsv,
// *.txt, read in file-name order); a record's id is the file stem.
// `meta_path` is a JSON object keyed by id whose values may carry
// "title", "chart_type" and "summary". Throws DataError for a missing
// metadata entry, a ragged row (naming the line) or a table with no rows.
Corpus LoadTabular(const std::filesystem::path& data_path,
                   const std::filesystem::path& meta_path);

struct SplitRatios {
  double train = 0.70;
  double validation = 0.15;
  double test = 0.15;
};

// Throws UsageError unless each ratio lies in (0, 1) and they sum to 1
// within 1e-9.
void CheckRatios(const SplitRatios& ratios);

// Parses "0.70,0.15,0.15".
SplitRatios ParseRatios(std::string_view text);

struct SplitSizes {
  size_t train = 0;
  size_t validation = 0;
  size_t test = 0;
};

// train = floor(train_ratio * n), validation = floor(validation_ratio * n),
// test takes the remainder. The products are floored with a 1e-9 allowance
// so that e.g. 0.15 * 20 lands on 3 despite binary rounding.
SplitSizes ComputeSplitSizes(size_t n, const SplitRatios& ratios);

struct SplitResult {
  Corpus train;
  Corpus validation;
  Corpus test;
};

// Shuffles record order with SplitMix64(seed) (Fisher-Yates from the back)
// and cuts the shuffled list into train, validation and test in that order.
// Throws DataError for an empty corpus and UsageError for a corpus that
// already carries a split tag.
SplitResult SplitCorpus(const Corpus& corpus, const SplitRatios& ratios,
                        uint64_t seed);

}  // namespace chartclean

#endif  // CHARTCLEAN_INGEST_H_
