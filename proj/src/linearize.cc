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

#include "chartclean/linearize.h"

#include <vector>

#include "chartclean/errors.h"

namespace chartclean {
namespace {

std::string Join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string Obeid(const ChartRecord& record) {
  const std::string type = std::string(ChartTypeName(record.chart_type)) + " chart";
  std::vector<std::string> tuples;
  for (const Series& s : record.series) {
    tuples.push_back(record.x_label + " | " + s.name + " | 0 | " + type);
    for (size_t i = 0; i < s.points.size(); ++i) {
      tuples.push_back(s.points[i].x + " | " + s.points[i].y + " | " +
                       std::to_string(i + 1) + " | " + type);
    }
  }
  return Join(tuples, " ");
}

std::string Kantharaj(const ChartRecord& record, bool with_labels) {
  std::vector<std::string> cells;
  if (with_labels) {
    cells.push_back(record.x_label);
    cells.insert(cells.end(), record.y_labels.begin(), record.y_labels.end());
  }
  for (const Series& s : record.series) {
    for (const Point& p : s.points) cells.push_back(p.y);
  }
  for (const Point& p : record.series.front().points) cells.push_back(p.x);

  std::string out;
  if (!record.title.empty()) out = record.title + "  ";
  return out + Join(cells, " | ");
}

std::string Proposed(const ChartRecord& record, const LinearizationSpec& spec) {
  std::string out;
  if (!record.title.empty()) out = record.title + " ";
  out += spec.label_marker + " " + record.x_label;
  for (const std::string& label : record.y_labels) {
    out += spec.multi_label_joiner + label;
  }
  out += " " + spec.value_marker + " ";

  const size_t rows = record.num_rows();
  for (size_t i = 0; i < rows; ++i) {
    if (i) out += spec.pair_separator;
    out += record.series.front().points[i].x;
    for (const Series& s : record.series) {
      out += spec.cell_separator + s.points[i].y;
    }
  }
  return out;
}

}  // namespace

LinearizedInput Linearize(const ChartRecord& record, const LinearizationSpec& spec) {
  if (record.num_rows() == 0) {
    throw DataError("record '" + record.id + "' has no data points");
  }
  if (auto violations = Validate(record); !violations.empty()) {
    throw DataError("record '" + record.id + "': " + violations.front());
  }
  if (spec.format == LinearFormat::kProposed &&
      (spec.label_marker.empty() || spec.value_marker.empty())) {
    throw UsageError("proposed format needs non-empty label and value markers");
  }

  LinearizedInput result{{}, spec, record.id};
  switch (spec.format) {
    case LinearFormat::kObeid:
      result.text = Obeid(record);
      break;
    case LinearFormat::kObeidTitle:
      result.text = record.title.empty() ? Obeid(record) : record.title + " " + Obeid(record);
      break;
    case LinearFormat::kKantharaj:
      result.text = Kantharaj(record, false);
      break;
    case LinearFormat::kKantharajLabels:
      result.text = Kantharaj(record, true);
      break;
    case LinearFormat::kProposed:
      result.text = Proposed(record, spec);
      break;
  }
  return result;
}

}  // namespace chartclean
