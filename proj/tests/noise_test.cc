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


#include "chartclean/noise.h"

#include "chartclean/errors.h"
#include "chartclean/segment.h"
#include "doctest.h"
#include "fake_service.h"
#include "test_support.h"

namespace chartclean {
namespace {

bool IsSubsequence(const std::vector<std::string>& small, const std::vector<std::string>& big) {
  size_t j = 0;
  for (const auto& s : big) {
    if (j < small.size() && s == small[j]) ++j;
  }
  return j == small.size();
}

ChartRecord WithSummary(std::string id, std::string summary) {
  ChartRecord r = testing::RoadRage();
  r.id = std::move(id);
  r.summary = std::move(summary);
  return r;
}

TEST_CASE("three sentences become four") {
  const StubGenerator noise("NOISE.");
  const ChartRecord r = testing::RoadRage();
  const auto [noised, event] = InjectNoise(r, noise, 42);
  const auto before = Segment(r.summary).sentences;
  const auto after = Segment(noised.summary).sentences;
  REQUIRE(after.size() == 4);
  CHECK(after[event.insert_index] == "NOISE.");
  CHECK(std::count(after.begin(), after.end(), "NOISE.") == 1);
  CHECK(IsSubsequence(before, after));
  CHECK(event.generated == "NOISE.");
  CHECK(event.seed == 42);
  CHECK(event.prompt_index < 3);
  CHECK(event.insert_index <= 3);

  const auto [again, event2] = InjectNoise(r, noise, 42);
  CHECK(again == noised);
  CHECK(event2 == event);
}

// With one sentence the prompt draw is Below(1), which consumes one output,
// and the insertion draw is Below(2), which accepts any output (2^64 mod 2 is
// 0). So insert_index is the parity of the second SplitMix64 output.
TEST_CASE("one sentence: insertion position follows the second draw") {
  const StubGenerator noise("NOISE.");
  for (uint64_t seed : {0ULL, 1ULL, 7ULL, 12345ULL, 0xdeadbeefULL}) {
    const ChartRecord r = WithSummary("single", "Sales rose.");
    const auto [noised, event] = InjectNoise(r, noise, seed);
    SplitMix64 replay(seed ^ Fnv1a64("single"));
    replay.Next();
    const size_t expected = replay.Next() % 2;
    CHECK(event.prompt_index == 0);
    CHECK(event.insert_index == expected);
    CHECK(noised.summary == (expected == 0 ? "NOISE. Sales rose." : "Sales rose. NOISE."));
  }
}

TEST_CASE("stub template uses the prompt's first word") {
  const StubGenerator stub;
  CHECK(stub.Generate("\"Sales\" rose.") ==
        "Observers also noted that sales figures were widely discussed in the media.");
  CHECK(StubGenerator("{prompt} and {prompt}.").Generate("Up") == "up and up.");
}

TEST_CASE("generator output must be one sentence") {
  const ChartRecord r = testing::RoadRage();
  CHECK_THROWS_AS(InjectNoise(r, StubGenerator("One. Two."), 1), DataError);
  CHECK_THROWS_AS(InjectNoise(r, StubGenerator(""), 1), DataError);
  CHECK_THROWS_AS(InjectNoise(WithSummary("e", " "), StubGenerator("Xyz."), 1), DataError);
}

TEST_CASE("fraction selects ceil(fraction * N) records") {
  Corpus corpus;
  SplitMix64 rng(4);
  for (int i = 0; i < 10; ++i) {
    corpus.records.push_back(
        WithSummary("r" + std::to_string(i), testing::RandomSummary(rng, 1 + rng.Below(4))));
  }
  const StubGenerator stub;
  CHECK(InjectCorpus(corpus, stub, 3, 0.5).events.size() == 5);
  CHECK(InjectCorpus(corpus, stub, 3, 1.0).events.size() == 10);
  CHECK(InjectCorpus(corpus, stub, 3, 0.7).events.size() == 7);
  CHECK(InjectCorpus(corpus, stub, 3, 0.01).events.size() == 1);
  CHECK_THROWS_AS(InjectCorpus(corpus, stub, 3, 0.0), UsageError);
  CHECK_THROWS_AS(InjectCorpus(corpus, stub, 3, 1.1), UsageError);
  CHECK_THROWS_AS(InjectCorpus(Corpus{}, stub, 3, 1.0), DataError);

  const InjectResult half = InjectCorpus(corpus, stub, 3, 0.5, 4);
  size_t changed = 0;
  for (size_t i = 0; i < 10; ++i) {
    changed += half.corpus.records[i].summary != corpus.records[i].summary ? 1 : 0;
  }
  CHECK(changed == 5);
  for (size_t i = 1; i < half.events.size(); ++i) {
    CHECK(half.events[i - 1].record_id < half.events[i].record_id);
  }
}

TEST_CASE("random records: count, order and rerun stability") {
  Corpus corpus;
  SplitMix64 rng(8);
  for (int i = 0; i < 100; ++i) {
    corpus.records.push_back(
        WithSummary("n" + std::to_string(i), testing::RandomSummary(rng, 1 + rng.Below(5))));
  }
  const StubGenerator stub;
  const InjectResult a = InjectCorpus(corpus, stub, 99, 1.0, 1);
  const InjectResult b = InjectCorpus(corpus, stub, 99, 1.0, 6);
  CHECK(a.corpus == b.corpus);
  CHECK(a.events == b.events);
  for (size_t i = 0; i < corpus.records.size(); ++i) {
    const auto before = Segment(corpus.records[i].summary).sentences;
    const auto after = Segment(a.corpus.records[i].summary).sentences;
    CHECK(after.size() == before.size() + 1);
    CHECK(IsSubsequence(before, after));
  }
  CHECK(InjectCorpus(corpus, stub, 100, 1.0).events != a.events);
}

TEST_CASE("unterminated neighbour is rejected") {
  const StubGenerator noise("NOISE.");
  bool rejected = false;
  for (uint64_t seed = 0; seed < 16 && !rejected; ++seed) {
    try {
      InjectNoise(WithSummary("u", "Sales rose"), noise, seed);
    } catch (const DataError&) {
      rejected = true;
    }
  }
  CHECK(rejected);
}

TEST_CASE("remote generator: /v1/generate") {
  testing::FakeService service([](const std::string&, const std::string&) { return 0.5; });
  RemoteOptions options;
  options.base_url = service.url();
  options.retries = 1;
  options.backoff_seconds = 0;
  const RemoteGenerator remote(options);
  CHECK(remote.Generate("Sales rose.") == "Experts also expected further growth.");
  const auto [noised, event] = InjectNoise(testing::RoadRage(), remote, 5);
  CHECK(event.generated == "Experts also expected further growth.");

  service.SetGenerated("Two. Sentences.");
  CHECK_THROWS_AS(InjectNoise(testing::RoadRage(), remote, 5), DataError);

  options.base_url = testing::DeadUrl();
  CHECK_THROWS_WITH_AS(InjectNoise(testing::RoadRage(), RemoteGenerator(options), 5),
                       doctest::Contains("record 'road-rage'"), BackendError);
}

TEST_CASE("event JSON") {
  const auto [noised, event] = InjectNoise(testing::RoadRage(), StubGenerator("Xyz."), 1);
  const auto j = NoiseEventToJson(event);
  CHECK(j["record_id"] == "road-rage");
  CHECK(j["generated"] == "Xyz.");
  CHECK(j["seed"] == 1);
}

}  // namespace
}  // namespace chartclean
