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

#include "chartclean/errors.h"
#include "doctest.h"
#include "json.hpp"
#include "test_support.h"

namespace chartclean {
namespace {

bool Has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

TEST_CASE("names round-trip for every enum value") {
  for (auto t : {ChartType::kBar, ChartType::kLine, ChartType::kPie, ChartType::kTable,
                 ChartType::kUnknown}) {
    CHECK(ParseChartType(ChartTypeName(t)) == t);
  }
  for (auto t : {SplitTag::kTrain, SplitTag::kValidation, SplitTag::kTest, SplitTag::kUnsplit}) {
    CHECK(ParseSplitTag(SplitTagName(t)) == t);
  }
  for (auto f : {LinearFormat::kObeid, LinearFormat::kObeidTitle, LinearFormat::kKantharaj,
                 LinearFormat::kKantharajLabels, LinearFormat::kProposed}) {
    CHECK(ParseLinearFormat(LinearFormatName(f)) == f);
  }
  CHECK_FALSE(ParseChartType("scatter").has_value());
  CHECK_FALSE(ParseLinearFormat("PROPOSED").has_value());
}

TEST_CASE("valid fixtures have no violations") {
  CHECK(Validate(testing::RoadRage()).empty());
  CHECK(Validate(testing::BeerSales()).empty());
  CHECK(Validate(testing::SocialPlatforms()).empty());
  CHECK(testing::BeerSales().num_rows() == 8);
}

TEST_CASE("validate reports each broken invariant") {
  ChartRecord r = testing::BeerSales();
  r.id.clear();
  CHECK(Has(Validate(r), "id empty"));

  r = testing::BeerSales();
  r.y_labels.pop_back();
  CHECK(Has(Validate(r), "y_labels/series count mismatch"));

  r = testing::BeerSales();
  r.series[1].points.pop_back();
  CHECK(Has(Validate(r), "series length mismatch"));

  r = testing::BeerSales();
  r.series[1].points[3].x = "1999";
  CHECK(Has(Validate(r), "series x mismatch"));

  r = testing::BeerSales();
  r.series.clear();
  r.y_labels.clear();
  CHECK(Has(Validate(r), "series empty"));

  r = testing::RoadRage();
  r.series[0].points.clear();
  CHECK(Has(Validate(r), "series points empty"));
}

TEST_CASE("JSON round trip preserves records") {
  for (const ChartRecord& r : {testing::RoadRage(), testing::BeerSales(), testing::ForeignBorn()}) {
    const auto json = RecordToJson(r);
    const ChartRecord back = RecordFromJson(nlohmann::json::parse(json.dump()));
    CHECK(back == r);
  }
}

TEST_CASE("JSON field order is fixed") {
  const std::string dumped = RecordToJson(testing::RoadRage()).dump();
  CHECK(dumped.rfind("{\"id\":\"road-rage\",\"title\":", 0) == 0);
  CHECK(dumped.find("\"chart_type\":\"bar\",\"x_label\"") != std::string::npos);
  CHECK(dumped.find("\"points\":[[\"On the receiving end") != std::string::npos);
}

TEST_CASE("optional fields default and required fields are named") {
  auto j = nlohmann::json::parse(
      R"({"id":"a","x_label":"x","y_labels":["y"],"series":[{"name":"y","points":[["1","2"]]}]})");
  const ChartRecord r = RecordFromJson(j);
  CHECK(r.title.empty());
  CHECK(r.summary.empty());
  CHECK(r.chart_type == ChartType::kUnknown);

  j.erase("x_label");
  CHECK_THROWS_WITH_AS(RecordFromJson(j), "missing field 'x_label'", DataError);
  j["x_label"] = 3;
  CHECK_THROWS_WITH_AS(RecordFromJson(j), "field 'x_label' must be a string", DataError);
}

TEST_CASE("spec defaults echo into JSON") {
  const auto j = SpecToJson(LinearizationSpec{});
  CHECK(j["format"] == "proposed");
  CHECK(j["label_marker"] == "x-y labels");
  CHECK(j["value_marker"] == "x-y values");
  CHECK(j["pair_separator"] == ", ");
  CHECK(j["multi_label_joiner"] == " - ");
}

}  // namespace
}  // namespace chartclean
