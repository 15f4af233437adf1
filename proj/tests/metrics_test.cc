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


#include "chartclean/metrics.h"

#include "chartclean/errors.h"
#include "doctest.h"
#include "test_support.h"

namespace chartclean {
namespace {

using Tokens = std::vector<std::string>;

std::string Join(const Tokens& t) {
  std::string out;
  for (const auto& s : t) out += (out.empty() ? "" : " ") + s;
  return out;
}

std::vector<EvalPair> Pairs(const std::vector<std::pair<std::string, std::string>>& raw) {
  std::vector<EvalPair> out;
  for (size_t i = 0; i < raw.size(); ++i) {
    out.push_back({"p" + std::to_string(i), raw[i].first, raw[i].second});
  }
  return out;
}

// Expected strings below were produced by sacrebleu 2.6.0's 13a tokenizer.
TEST_CASE("13a tokenization") {
  CHECK(Join(Tokenize13a(
            "This statistic shows the road rage behavior of drivers in the U.S. as of 2015.")) ==
        "This statistic shows the road rage behavior of drivers in the U . S . as of 2015 .");
  CHECK(Join(Tokenize13a(
            "Sales were 8.62 million liters (in 2019), i.e. 53% more than \"expected\"!")) ==
        "Sales were 8.62 million liters ( in 2019 ) , i . e . 53 % more than \" expected \" !");
  CHECK(Join(Tokenize13a("A&amp;B &lt;tag&gt; costs $5,000.50 -- really?")) ==
        "A & B < tag > costs $ 5,000.50 -- really ?");
  CHECK(Join(Tokenize13a("Prices: 1,234; 5.6% - down.")) == "Prices : 1,234 ; 5.6 % - down .");
  CHECK(Tokenize13a("   ").empty());
}

TEST_CASE("unicode punctuation is folded to ASCII before tokenizing") {
  CHECK(NormalizeUnicodePunctuation("\xE2\x80\x9Cit\xE2\x80\x99s\xE2\x80\x9D \xE2\x80\x93 ok") ==
        "\"it's\" - ok");
  CHECK(Join(Tokenize13a("\xE2\x80\x9CUp\xE2\x80\x9D")) == "\" Up \"");
}

// Values from sacrebleu.corpus_bleu on the same strings.
TEST_CASE("BLEU matches sacrebleu") {
  const auto pairs = Pairs(
      {{"This statistic shows the road rage behavior of drivers in the United States as of 2015.",
        "This statistic shows the road rage behavior of drivers in the United States as of 2015. "
        "Four percent of the drivers said they have been on the receiving end of a rude "
        "gesture."},
       {"Four percent of drivers said they had been on the receiving end of a rude gesture.",
        "Four percent of the drivers said they have been on the receiving end of a rude "
        "gesture."},
       {"Beer sales in P.E.I. fell to 8.62 million liters in 2019.",
        "In 2019, packaged beer sales in Prince Edward Island amounted to 8.62 million liters."}});
  CHECK(Bleu4(pairs) == doctest::Approx(45.359927381414685).epsilon(1e-12));
  CHECK(Bleu4({pairs[0]}) == doctest::Approx(34.68636452568926).epsilon(1e-12));
  CHECK(Bleu4({pairs[1]}) == doctest::Approx(66.99564302243967).epsilon(1e-12));
  CHECK(Bleu4({pairs[2]}) == doctest::Approx(18.295654224495205).epsilon(1e-12));
  CHECK(Bleu4(Pairs({{"the the the the the the the", "the cat is on the mat"}})) ==
        doctest::Approx(7.809849842300637).epsilon(1e-12));
  CHECK(Bleu4(Pairs({{"a b c d e", "a b c x y"}})) ==
        doctest::Approx(39.76353643835252).epsilon(1e-12));
}

TEST_CASE("clipped unigram precision is 2/7") {
  const BleuStats s =
      ComputeBleuStats(Tokenize13a("the the the the the the the"),
                       Tokenize13a("the cat is on the mat"));
  CHECK(s.matched[0] == 2);
  CHECK(s.total[0] == 7);
  CHECK(static_cast<double>(s.matched[0]) / s.total[0] == 2.0 / 7.0);
}

TEST_CASE("disjoint vocabularies") {
  const BleuStats s = ComputeBleuStats(Tokenize13a("x y z w"), Tokenize13a("a b c d"));
  for (size_t n = 0; n < 4; ++n) CHECK(s.matched[n] == 0);
  const double bleu = Bleu4(Pairs({{"x y z w", "a b c d"}}));
  CHECK(bleu < 1.0);
  CHECK(bleu == 0.0);
}

TEST_CASE("identity scores") {
  const auto pairs = Pairs({{"Sales rose in 2019.", "Sales rose in 2019."},
                            {"The U.S. led.", "The U.S. led."},
                            {"a b c d e f", "a b c d e f"}});
  CHECK(Bleu4(pairs) == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(Rouge2(pairs) == 1.0);
  const EvalReport report = Evaluate(pairs);
  CHECK(report.pair_count == 3);
  CHECK(report.bleu4 == doctest::Approx(100.0));
  CHECK(report.rouge2_f1 == 1.0);
}

TEST_CASE("ROUGE-2 hand examples") {
  CHECK(Rouge2F1(Tokens{"a", "b", "c"}, Tokens{"b", "c", "d"}) == 0.5);
  CHECK(Rouge2F1(Tokens{"a"}, Tokens{"a", "b"}) == 0.0);
  CHECK(Rouge2F1(Tokens{"a", "b"}, Tokens{"a"}) == 0.0);
  CHECK(Rouge2F1(Tokens{"a", "b", "a", "b"}, Tokens{"a", "b"}) == doctest::Approx(0.5));
  CHECK(Rouge2(Pairs({{"a b c", "b c d"}, {"x", "x y"}})) == 0.25);
}

TEST_CASE("empty inputs are errors") {
  CHECK_THROWS_AS(Bleu4({}), DataError);
  CHECK_THROWS_AS(Rouge2({}), DataError);
  CHECK_THROWS_AS(Evaluate({}), DataError);
}

TEST_CASE("agreement with the brute-force oracle") {
  SplitMix64 rng(2718);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::pair<std::string, std::string>> raw;
    const size_t n = 1 + rng.Below(20);
    for (size_t i = 0; i < n; ++i) raw.push_back(testing::RandomTextPair(rng));
    const auto pairs = Pairs(raw);
    CHECK(std::abs(Bleu4(pairs) - testing::oracle::Bleu(raw)) <= 1e-9);
    CHECK(std::abs(Rouge2(pairs) - testing::oracle::Rouge2(raw)) <= 1e-9);
  }
}

TEST_CASE("pair order does not matter and scores stay in range") {
  SplitMix64 rng(31);
  std::vector<std::pair<std::string, std::string>> raw;
  for (int i = 0; i < 25; ++i) raw.push_back(testing::RandomTextPair(rng));
  auto pairs = Pairs(raw);
  const double bleu = Bleu4(pairs);
  const double rouge = Rouge2(pairs);
  CHECK(bleu >= 0.0);
  CHECK(bleu <= 100.0);
  CHECK(rouge >= 0.0);
  CHECK(rouge <= 1.0);
  for (int k = 0; k < 5; ++k) {
    Shuffle(pairs, rng);
    CHECK(Bleu4(pairs) == doctest::Approx(bleu).epsilon(1e-12));
    CHECK(Rouge2(pairs) == doctest::Approx(rouge).epsilon(1e-12));
  }
}

TEST_CASE("file alignment") {
  testing::TempDir dir;
  testing::WriteFile(dir / "hyp.jsonl",
                     "{\"id\":\"b\",\"text\":\"x y\"}\n{\"id\":\"a\",\"text\":\"a b c\"}\n");
  testing::WriteFile(dir / "ref.jsonl",
                     "{\"id\":\"a\",\"summary\":\"b c d\"}\n\n{\"id\":\"b\",\"text\":\"x y\"}\n");
  const auto pairs = AlignPairs(dir / "hyp.jsonl", dir / "ref.jsonl");
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].id == "a");
  CHECK(pairs[0].reference == "b c d");
  CHECK(pairs[1].hypothesis == "x y");
  const auto report = Evaluate(pairs);
  CHECK(report.per_pair_rouge2[0].rouge2_f1 == 0.5);
  CHECK(report.per_pair_rouge2[1].rouge2_f1 == 1.0);
  const auto j = EvalReportToJson(report);
  CHECK(j["perplexity"].is_null());
  CHECK(j["pair_count"] == 2);

  testing::WriteFile(dir / "ref2.jsonl", "{\"id\":\"a\",\"text\":\"b\"}\n{\"id\":\"c\",\"text\":\"q\"}\n");
  CHECK_THROWS_WITH_AS(AlignPairs(dir / "hyp.jsonl", dir / "ref2.jsonl"),
                       doctest::Contains("'c'"), DataError);
  CHECK_THROWS_WITH_AS(AlignPairs(dir / "hyp.jsonl", dir / "ref2.jsonl"),
                       doctest::Contains("'b'"), DataError);
  testing::WriteFile(dir / "empty.jsonl", "");
  CHECK_THROWS_AS(AlignPairs(dir / "empty.jsonl", dir / "ref.jsonl"), DataError);
  testing::WriteFile(dir / "dup.jsonl", "{\"id\":\"a\",\"text\":\"b\"}\n{\"id\":\"a\",\"text\":\"b\"}\n");
  CHECK_THROWS_AS(AlignPairs(dir / "dup.jsonl", dir / "ref.jsonl"), DataError);
}

}  // namespace
}  // namespace chartclean
