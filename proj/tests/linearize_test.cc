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

#include "chartclean/errors.h"
#include "doctest.h"
#include "test_support.h"

namespace chartclean {
namespace {

LinearizationSpec Spec(LinearFormat format) {
  LinearizationSpec spec;
  spec.format = format;
  return spec;
}

TEST_CASE("road rage chart under default markers") {
  CHECK(Linearize(testing::RoadRage(), Spec(LinearFormat::kProposed)).text ==
        testing::kRoadRageProposed);
}

TEST_CASE("beer sales chart with short markers and spaced commas") {
  LinearizationSpec spec = Spec(LinearFormat::kProposed);
  spec.label_marker = "labels";
  spec.value_marker = "values";
  spec.pair_separator = " , ";
  CHECK(Linearize(testing::BeerSales(), spec).text == testing::kBeerSalesProposed);
}

TEST_CASE("foreign-born chart as title plus y values then x values") {
  CHECK(Linearize(testing::ForeignBorn(), Spec(LinearFormat::kKantharaj)).text ==
        testing::kForeignBornKantharaj);
}

TEST_CASE("social platform chart as tuples per series") {
  const std::string text = Linearize(testing::SocialPlatforms(), Spec(LinearFormat::kObeid)).text;
  CHECK(text == testing::kSocialObeid);
  CHECK(text.rfind("Platform | Facebook | 0 | bar chart 18-24 | 36 | 1 | bar chart", 0) == 0);
}

TEST_CASE("title variants wrap the base formats") {
  const ChartRecord r = testing::SocialPlatforms();
  const std::string plain = Linearize(r, Spec(LinearFormat::kObeid)).text;
  CHECK(Linearize(r, Spec(LinearFormat::kObeidTitle)).text == r.title + " " + plain);

  const ChartRecord fb = testing::ForeignBorn();
  CHECK(Linearize(fb, Spec(LinearFormat::kKantharajLabels)).text ==
        "Foreign-born population in the United States, 1900-2013  Year | "
        "Population in millions | 10.3 | 13.5 | 13.9 | 14.2 | 11.6 | 10.3 | 9.7 | 9.6 | 14.1 | "
        "19.8 | 31.1 | 39.9 | 41.3 | 1900 | 1910 | 1920 | 1930 | 1940 | 1950 | 1960 | 1970 | "
        "1980 | 1990 | 2000 | 2010 | 2013");
}

TEST_CASE("single point has no trailing separator") {
  const ChartRecord r = testing::MakeRecord("one", "T", ChartType::kPie, "xl", {"yl"}, {"a"},
                                            {{"1"}});
  CHECK(Linearize(r, Spec(LinearFormat::kProposed)).text == "T x-y labels xl - yl x-y values a 1");
  CHECK(Linearize(r, Spec(LinearFormat::kObeid)).text ==
        "xl | yl | 0 | pie chart a | 1 | 1 | pie chart");
}

TEST_CASE("empty title drops the leading space") {
  ChartRecord r = testing::MakeRecord("one", "", ChartType::kUnknown, "xl", {"yl"}, {"a", "b"},
                                      {{"1", "2"}});
  CHECK(Linearize(r, Spec(LinearFormat::kProposed)).text ==
        "x-y labels xl - yl x-y values a 1, b 2");
  CHECK(Linearize(r, Spec(LinearFormat::kKantharaj)).text == "1 | 2 | a | b");
  CHECK(Linearize(r, Spec(LinearFormat::kObeidTitle)).text ==
        Linearize(r, Spec(LinearFormat::kObeid)).text);
}

TEST_CASE("errors") {
  ChartRecord r = testing::RoadRage();
  r.series[0].points.clear();
  CHECK_THROWS_AS(Linearize(r, Spec(LinearFormat::kProposed)), DataError);
  LinearizationSpec spec = Spec(LinearFormat::kProposed);
  spec.value_marker.clear();
  CHECK_THROWS_AS(Linearize(testing::RoadRage(), spec), UsageError);
  spec.format = LinearFormat::kObeid;
  CHECK_NOTHROW(Linearize(testing::RoadRage(), spec));
}

TEST_CASE("result carries its spec and source") {
  const LinearizedInput in = Linearize(testing::BeerSales(), Spec(LinearFormat::kKantharaj));
  CHECK(in.source_id == "beer-pei");
  CHECK(in.spec.format == LinearFormat::kKantharaj);
}

// Splitting the value part on the pair separator gives one segment per row,
// and that segment holds the x value followed by every y of the row.
TEST_CASE("proposed keeps each y next to its x") {
  SplitMix64 rng(11);
  const LinearizationSpec spec = Spec(LinearFormat::kProposed);
  for (int i = 0; i < 200; ++i) {
    const ChartRecord r = testing::RandomChart(rng, "c" + std::to_string(i));
    const std::string text = Linearize(r, spec).text;
    const size_t marker = text.find(" " + spec.value_marker + " ");
    REQUIRE(marker != std::string::npos);
    std::string values = text.substr(marker + spec.value_marker.size() + 2);
    std::vector<std::string> segments;
    for (size_t pos = 0;;) {
      const size_t next = values.find(spec.pair_separator, pos);
      segments.push_back(values.substr(pos, next - pos));
      if (next == std::string::npos) break;
      pos = next + spec.pair_separator.size();
    }
    REQUIRE(segments.size() == r.num_rows());
    for (size_t row = 0; row < r.num_rows(); ++row) {
      std::string expected = r.series[0].points[row].x;
      for (const auto& s : r.series) expected += " " + s.points[row].y;
      CHECK(segments[row] == expected);
    }
  }
}

TEST_CASE("kantharaj puts every y before every x") {
  SplitMix64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const ChartRecord r = testing::RandomChart(rng, "c" + std::to_string(i));
    const std::string text = Linearize(r, Spec(LinearFormat::kKantharaj)).text;
    const std::string list = r.title.empty() ? text : text.substr(r.title.size() + 2);
    std::vector<std::string> items;
    for (size_t pos = 0;;) {
      const size_t next = list.find(" | ", pos);
      items.push_back(list.substr(pos, next - pos));
      if (next == std::string::npos) break;
      pos = next + 3;
    }
    const size_t ys = r.series.size() * r.num_rows();
    REQUIRE(items.size() == ys + r.num_rows());
    size_t k = 0;
    for (const auto& s : r.series) {
      for (const auto& p : s.points) CHECK(items[k++] == p.y);
    }
    for (const auto& p : r.series[0].points) CHECK(items[k++] == p.x);
  }
}

TEST_CASE("linearization is deterministic") {
  SplitMix64 rng(13);
  for (int i = 0; i < 50; ++i) {
    const ChartRecord r = testing::RandomChart(rng, "c");
    for (auto f : {LinearFormat::kObeid, LinearFormat::kObeidTitle, LinearFormat::kKantharaj,
                   LinearFormat::kKantharajLabels, LinearFormat::kProposed}) {
      CHECK(Linearize(r, Spec(f)).text == Linearize(r, Spec(f)).text);
    }
  }
}

}  // namespace
}  // namespace chartclean
