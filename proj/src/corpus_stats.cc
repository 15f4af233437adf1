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

#include "chartclean/corpus_stats.h"

#include <cctype>
#include <cstdio>
#include <sstream>

#include "chartclean/segment.h"

namespace chartclean {

SplitTag InferSplitTag(const std::filesystem::path& path) {
  const std::string stem = path.stem().string();
  std::vector<std::string> words;
  std::string word;
  for (char c : stem) {
    if (c == '_' || c == '-' || c == '.') {
      if (!word.empty()) words.push_back(word);
      word.clear();
    } else {
      word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  if (!word.empty()) words.push_back(word);
  for (const auto& w : words) {
    if (w == "train") return SplitTag::kTrain;
    if (w == "validation" || w == "valid" || w == "val" || w == "dev") {
      return SplitTag::kValidation;
    }
    if (w == "test") return SplitTag::kTest;
  }
  return SplitTag::kUnsplit;
}

CorpusStats ComputeCorpusStats(const std::vector<Corpus>& corpora) {
  CorpusStats stats;
  size_t sentences = 0;
  size_t tokens = 0;
  for (const Corpus& corpus : corpora) {
    stats.records_by_split[std::string(SplitTagName(corpus.split_tag))] +=
        corpus.records.size();
    for (const ChartRecord& record : corpus.records) {
      ++stats.records;
      const size_t count = Segment(record.summary).sentences.size();
      ++stats.sentence_count_histogram[count];
      sentences += count;
      std::istringstream in(record.summary);
      std::string token;
      while (in >> token) ++tokens;
    }
  }
  if (stats.records > 0) {
    stats.mean_sentences = static_cast<double>(sentences) / static_cast<double>(stats.records);
    stats.mean_tokens = static_cast<double>(tokens) / static_cast<double>(stats.records);
  }
  return stats;
}

std::string FormatCorpusStats(const CorpusStats& stats) {
  std::ostringstream out;
  out << "records\t" << stats.records << '\n';
  for (const auto& [split, count] : stats.records_by_split) {
    out << "split." << split << '\t' << count << '\n';
  }
  for (const auto& [sentences, count] : stats.sentence_count_histogram) {
    out << "summaries_with_" << sentences << "_sentences\t" << count << '\n';
  }
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.4f", stats.mean_sentences);
  out << "mean_sentences\t" << buffer << '\n';
  std::snprintf(buffer, sizeof buffer, "%.4f", stats.mean_tokens);
  out << "mean_tokens\t" << buffer << '\n';
  return out.str();
}

nlohmann::ordered_json CorpusStatsToJson(const CorpusStats& stats) {
  nlohmann::ordered_json out;
  out["records"] = stats.records;
  out["records_by_split"] = stats.records_by_split;
  nlohmann::ordered_json histogram = nlohmann::ordered_json::object();
  for (const auto& [sentences, count] : stats.sentence_count_histogram) {
    histogram[std::to_string(sentences)] = count;
  }
  out["sentence_count_histogram"] = std::move(histogram);
  out["mean_sentences"] = stats.mean_sentences;
  out["mean_tokens"] = stats.mean_tokens;
  return out;
}

}  // namespace chartclean
