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

// Canonical in-memory model for charts and their reference summaries.
//
// Every cell value (x and y) is kept as the verbatim string from the source
// table. Values such as "53%" or "8.62" are never parsed into numbers, so the
// linearizers can reproduce them byte-for-byte.
//
// A chart with several series is the grouped-bar case: all series share the
// same x positions and have one y value per position. A single-series chart is
// the one-element case of the same layout.

#ifndef CHARTCLEAN_CHART_MODEL_H_
#define CHARTCLEAN_CHART_MODEL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace chartclean {

enum class ChartType { kBar, kLine, kPie, kTable, kUnknown };

// "bar", "line", "pie", "table", "unknown".
std::string_view ChartTypeName(ChartType type);
std::optional<ChartType> ParseChartType(std::string_view name);

struct Point {
  std::string x;
  std::string y;

  bool operator==(const Point&) const = default;
};

struct Series {
  std::string name;  // legend entry; often equal to the matching y label
  std::vector<Point> points;

  bool operator==(const Series&) const = default;
};

struct ChartRecord {
  std::string id;
  std::string title;  // may be empty
  ChartType chart_type = ChartType::kUnknown;
  std::string x_label;
  std::vector<std::string> y_labels;  // one per series
  std::vector<Series> series;
  std::string summary;  // empty for inference-only records

  // Number of x positions (rows of the data table). Zero when there are no
  // series.
  size_t num_rows() const {
    return series.empty() ? 0 : series.front().points.size();
  }

  bool operator==(const ChartRecord&) const = default;
};

enum class SplitTag { kTrain, kValidation, kTest, kUnsplit };

std::string_view SplitTagName(SplitTag tag);
std::optional<SplitTag> ParseSplitTag(std::string_view name);

struct Corpus {
  std::vector<ChartRecord> records;
  SplitTag split_tag = SplitTag::kUnsplit;

  bool operator==(const Corpus&) const = default;
};

enum class LinearFormat {
  kObeid,
  kObeidTitle,
  kKantharaj,
  kKantharajLabels,
  kProposed,
};

// CLI spelling: "obeid", "obeid-title", "kantharaj", "kantharaj-labels",
// "proposed".
std::string_view LinearFormatName(LinearFormat format);
std::optional<LinearFormat> ParseLinearFormat(std::string_view name);

// Template plus the marker and separator strings used by the proposed
// format. The separators are ignored by the baseline formats, which have
// fixed layouts.
struct LinearizationSpec {
  LinearFormat format = LinearFormat::kProposed;
  std::string label_marker = "x-y labels";
  std::string value_marker = "x-y values";
  std::string pair_separator = ", ";
  std::string cell_separator = " ";
  std::string multi_label_joiner = " - ";

  bool operator==(const LinearizationSpec&) const = default;
};

// Checks the ChartRecord invariants. Returns one description per violated
// rule; an empty list means the record is well formed. Never throws.
std::vector<std::string> Validate(const ChartRecord& record);

// Canonical JSON object for one record, with fields in the order
// id, title, chart_type, x_label, y_labels, series, summary.
nlohmann::ordered_json RecordToJson(const ChartRecord& record);

// Inverse of RecordToJson. Throws DataError naming the offending field when a
// field is missing or has the wrong type. `title`, `chart_type` and `summary`
// are optional; the rest are required. Does not run Validate.
ChartRecord RecordFromJson(const nlohmann::json& object);

nlohmann::ordered_json SpecToJson(const LinearizationSpec& spec);

}  // namespace chartclean

#endif  // CHARTCLEAN_CHART_MODEL_H_
