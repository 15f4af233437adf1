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

#include "chartclean/chart_model.h"

#include <array>
#include <string>
#include <utility>

#include "chartclean/errors.h"

namespace chartclean {
namespace {

constexpr std::array<std::pair<ChartType, std::string_view>, 5> kChartTypes{{
    {ChartType::kBar, "bar"},
    {ChartType::kLine, "line"},
    {ChartType::kPie, "pie"},
    {ChartType::kTable, "table"},
    {ChartType::kUnknown, "unknown"},
}};

constexpr std::array<std::pair<SplitTag, std::string_view>, 4> kSplitTags{{
    {SplitTag::kTrain, "train"},
    {SplitTag::kValidation, "validation"},
    {SplitTag::kTest, "test"},
    {SplitTag::kUnsplit, "unsplit"},
}};

constexpr std::array<std::pair<LinearFormat, std::string_view>, 5> kFormats{{
    {LinearFormat::kObeid, "obeid"},
    {LinearFormat::kObeidTitle, "obeid-title"},
    {LinearFormat::kKantharaj, "kantharaj"},
    {LinearFormat::kKantharajLabels, "kantharaj-labels"},
    {LinearFormat::kProposed, "proposed"},
}};

template <typename Enum, size_t N>
std::string_view NameOf(const std::array<std::pair<Enum, std::string_view>, N>& table,
                        Enum value) {
  for (const auto& [e, name] : table) {
    if (e == value) return name;
  }
  return "?";
}

template <typename Enum, size_t N>
std::optional<Enum> Lookup(const std::array<std::pair<Enum, std::string_view>, N>& table,
                           std::string_view name) {
  for (const auto& [e, n] : table) {
    if (n == name) return e;
  }
  return std::nullopt;
}

const nlohmann::json& Field(const nlohmann::json& object, const char* name) {
  auto it = object.find(name);
  if (it == object.end()) {
    throw DataError(std::string("missing field '") + name + "'");
  }
  return *it;
}

std::string StringField(const nlohmann::json& object, const char* name,
                        bool required) {
  auto it = object.find(name);
  if (it == object.end()) {
    if (required) throw DataError(std::string("missing field '") + name + "'");
    return {};
  }
  if (!it->is_string()) {
    throw DataError(std::string("field '") + name + "' must be a string");
  }
  return it->get<std::string>();
}

}  // namespace

std::string_view ChartTypeName(ChartType type) { return NameOf(kChartTypes, type); }
std::optional<ChartType> ParseChartType(std::string_view name) {
  return Lookup(kChartTypes, name);
}

std::string_view SplitTagName(SplitTag tag) { return NameOf(kSplitTags, tag); }
std::optional<SplitTag> ParseSplitTag(std::string_view name) {
  return Lookup(kSplitTags, name);
}

std::string_view LinearFormatName(LinearFormat format) {
  return NameOf(kFormats, format);
}
std::optional<LinearFormat> ParseLinearFormat(std::string_view name) {
  return Lookup(kFormats, name);
}

std::vector<std::string> Validate(const ChartRecord& record) {
  std::vector<std::string> violations;
  if (record.id.empty()) violations.emplace_back("id empty");
  if (record.series.empty()) {
    violations.emplace_back("series empty");
  }
  if (record.y_labels.size() != record.series.size()) {
    violations.emplace_back("y_labels/series count mismatch");
  }
  bool lengths_equal = true;
  bool any_empty = false;
  for (const Series& s : record.series) {
    if (s.points.empty()) any_empty = true;
    if (s.points.size() != record.series.front().points.size()) {
      lengths_equal = false;
    }
  }
  if (any_empty) violations.emplace_back("series points empty");
  if (!lengths_equal) {
    violations.emplace_back("series length mismatch");
  } else if (record.series.size() > 1) {
    // Grouped layout: every series is indexed by the same x values.
    const auto& first = record.series.front().points;
    for (size_t s = 1; s < record.series.size(); ++s) {
      const auto& points = record.series[s].points;
      bool same = true;
      for (size_t i = 0; i < points.size(); ++i) {
        if (points[i].x != first[i].x) {
          same = false;
          break;
        }
      }
      if (!same) {
        violations.emplace_back("series x mismatch");
        break;
      }
    }
  }
  return violations;
}

nlohmann::ordered_json RecordToJson(const ChartRecord& record) {
  nlohmann::ordered_json out;
  out["id"] = record.id;
  out["title"] = record.title;
  out["chart_type"] = std::string(ChartTypeName(record.chart_type));
  out["x_label"] = record.x_label;
  out["y_labels"] = record.y_labels;
  auto series = nlohmann::ordered_json::array();
  for (const Series& s : record.series) {
    nlohmann::ordered_json entry;
    entry["name"] = s.name;
    auto points = nlohmann::ordered_json::array();
    for (const Point& p : s.points) {
      points.push_back(nlohmann::ordered_json::array({p.x, p.y}));
    }
    entry["points"] = std::move(points);
    series.push_back(std::move(entry));
  }
  out["series"] = std::move(series);
  out["summary"] = record.summary;
  return out;
}

ChartRecord RecordFromJson(const nlohmann::json& object) {
  if (!object.is_object()) throw DataError("record must be a JSON object");
  ChartRecord record;
  record.id = StringField(object, "id", true);
  record.title = StringField(object, "title", false);
  if (object.contains("chart_type")) {
    const std::string name = StringField(object, "chart_type", true);
    auto type = ParseChartType(name);
    if (!type) throw DataError("field 'chart_type' has unknown value '" + name + "'");
    record.chart_type = *type;
  }
  record.x_label = StringField(object, "x_label", true);

  const auto& y_labels = Field(object, "y_labels");
  if (!y_labels.is_array()) throw DataError("field 'y_labels' must be an array");
  for (const auto& label : y_labels) {
    if (!label.is_string()) throw DataError("field 'y_labels' must hold strings");
    record.y_labels.push_back(label.get<std::string>());
  }

  const auto& series = Field(object, "series");
  if (!series.is_array()) throw DataError("field 'series' must be an array");
  for (const auto& entry : series) {
    if (!entry.is_object()) throw DataError("field 'series' must hold objects");
    Series s;
    s.name = StringField(entry, "name", true);
    const auto& points = Field(entry, "points");
    if (!points.is_array()) throw DataError("field 'series.points' must be an array");
    for (const auto& point : points) {
      if (!point.is_array() || point.size() != 2 || !point[0].is_string() ||
          !point[1].is_string()) {
        throw DataError("field 'series.points' must hold [x, y] string pairs");
      }
      s.points.push_back({point[0].get<std::string>(), point[1].get<std::string>()});
    }
    record.series.push_back(std::move(s));
  }
  record.summary = StringField(object, "summary", false);
  return record;
}

nlohmann::ordered_json SpecToJson(const LinearizationSpec& spec) {
  nlohmann::ordered_json out;
  out["format"] = std::string(LinearFormatName(spec.format));
  out["label_marker"] = spec.label_marker;
  out["value_marker"] = spec.value_marker;
  out["pair_separator"] = spec.pair_separator;
  out["cell_separator"] = spec.cell_separator;
  out["multi_label_joiner"] = spec.multi_label_joiner;
  return out;
}

}  // namespace chartclean
