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


// Reader for tests/fixtures/segment_corpus.txt: one sentence per line,
// summaries separated by blank lines.

#ifndef CHARTCLEAN_TESTS_FIXTURE_CORPUS_H_
#define CHARTCLEAN_TESTS_FIXTURE_CORPUS_H_

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace chartclean::testing {

inline std::vector<std::vector<std::string>> LoadSegmentFixture() {
  const std::string path = std::string(CHARTCLEAN_FIXTURE_DIR) + "/segment_corpus.txt";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::vector<std::string>> summaries(1);
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) {
      if (!summaries.back().empty()) summaries.emplace_back();
    } else {
      summaries.back().push_back(line);
    }
  }
  if (summaries.back().empty()) summaries.pop_back();
  return summaries;
}

}  // namespace chartclean::testing

#endif  // CHARTCLEAN_TESTS_FIXTURE_CORPUS_H_
