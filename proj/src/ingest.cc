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

#include "chartclean/ingest.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "chartclean/errors.h"
#include "chartclean/random.h"

namespace chartclean {
namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

// Splits one delimited line. Quoted fields may contain the delimiter; a doubled
// quote inside a quoted field is a literal quote. Quoted newlines are not
// supported (chart tables are one row per line).
std::vector<std::string> SplitFields(std::string_view line, char delimiter,
                                     size_t line_number) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"' && field.empty() && !was_quoted) {
      quoted = was_quoted = true;
    } else if (c == delimiter) {
      fields.push_back(std::move(field));
      field.clear();
      was_quoted = false;
    } else {
      field.push_back(c);
    }
  }
  if (quoted) {
    throw DataError("line " + std::to_string(line_number) + ": unterminated quote");
  }
  fields.push_back(std::move(field));
  return fields;
}

std::string Trim(std::string_view s) {
  const size_t begin = s.find_first_not_of(" \t");
  if (begin == std::string_view::npos) return {};
  const size_t end = s.find_last_not_of(" \t");
  return std::string(s.substr(begin, end - begin + 1));
}

}  // namespace

Corpus ParseCanonical(std::istream& in) {
  Corpus corpus;
  std::unordered_set<std::string> seen;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsBlank(line)) continue;
    const std::string where = "line " + std::to_string(line_number);
    nlohmann::json object;
    try {
      object = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw DataError(where + ": malformed JSON: " + e.what());
    }
    ChartRecord record;
    try {
      record = RecordFromJson(object);
    } catch (const DataError& e) {
      throw DataError(where + ": " + e.what());
    }
    if (!seen.insert(record.id).second) {
      throw DataError("duplicate id, " + where + " (id '" + record.id + "')");
    }
    auto violations = Validate(record);
    if (!violations.empty()) {
      throw DataError("record '" + record.id + "' (" + where + "): " + violations.front());
    }
    corpus.records.push_back(std::move(record));
  }
  return corpus;
}

Corpus LoadCanonical(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  try {
    return ParseCanonical(in);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void SaveCanonical(const Corpus& corpus, std::ostream& out) {
  for (const ChartRecord& record : corpus.records) {
    out << RecordToJson(record).dump() << '\n';
  }
}

void SaveCanonical(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  SaveCanonical(corpus, out);
  if (!out) throw DataError("write failed: " + path.string());
}

ChartRecord ParseTable(std::string_view text, const std::string& id) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<std::pair<size_t, std::string>> lines;
  size_t line_number = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (line.ends_with('\r')) line.remove_suffix(1);
    ++line_number;
    if (!IsBlank(line)) lines.emplace_back(line_number, std::string(line));
    start = end + 1;
  }
  if (lines.empty()) throw DataError(id + ": empty table");

  const char delimiter =
      lines.front().second.find('\t') != std::string::npos ? '\t' : ',';
  std::vector<std::string> header =
      SplitFields(lines.front().second, delimiter, lines.front().first);
  for (auto& h : header) h = Trim(h);
  if (header.size() < 2) {
    throw DataError(id + ": header needs an x column and at least one y column");
  }
  if (lines.size() == 1) throw DataError(id + ": no data rows");

  ChartRecord record;
  record.id = id;
  record.x_label = header.front();
  for (size_t c = 1; c < header.size(); ++c) {
    record.y_labels.push_back(header[c]);
    record.series.push_back(Series{header[c], {}});
  }
  for (size_t r = 1; r < lines.size(); ++r) {
    const auto& [number, line] = lines[r];
    auto fields = SplitFields(line, delimiter, number);
    if (fields.size() != header.size()) {
      throw DataError(id + ": row at line " + std::to_string(number) + " has " +
                      std::to_string(fields.size()) + " columns, expected " +
                      std::to_string(header.size()));
    }
    const std::string x = Trim(fields.front());
    for (size_t c = 1; c < fields.size(); ++c) {
      record.series[c - 1].points.push_back({x, Trim(fields[c])});
    }
  }
  return record;
}

Corpus LoadTabular(const std::filesystem::path& data_path,
                   const std::filesystem::path& meta_path) {
  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(ReadFile(meta_path));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(meta_path.string() + ": malformed JSON: " + e.what());
  }
  if (!meta.is_object()) {
    throw DataError(meta_path.string() + ": metadata must be an object keyed by id");
  }

  std::vector<std::filesystem::path> tables;
  if (std::filesystem::is_directory(data_path)) {
    for (const auto& entry : std::filesystem::directory_iterator(data_path)) {
      if (!entry.is_regular_file()) continue;
      const auto ext = entry.path().extension();
      if (ext == ".csv" || ext == ".tsv" || ext == ".txt") tables.push_back(entry.path());
    }
    std::sort(tables.begin(), tables.end());
  } else {
    tables.push_back(data_path);
  }

  Corpus corpus;
  std::unordered_set<std::string> seen;
  for (const auto& table : tables) {
    const std::string id = table.stem().string();
    if (!seen.insert(id).second) throw DataError("duplicate id '" + id + "'");
    auto it = meta.find(id);
    if (it == meta.end()) throw DataError("missing metadata for id '" + id + "'");
    if (!it->is_object()) throw DataError("metadata for id '" + id + "' must be an object");

    ChartRecord record = ParseTable(ReadFile(table), id);
    auto text_field = [&](const char* name) -> std::string {
      auto f = it->find(name);
      if (f == it->end()) return {};
      if (!f->is_string()) {
        throw DataError("metadata for id '" + id + "': '" + name + "' must be a string");
      }
      return f->get<std::string>();
    };
    record.title = text_field("title");
    record.summary = text_field("summary");
    const std::string type = text_field("chart_type");
    if (!type.empty()) {
      auto parsed = ParseChartType(type);
      if (!parsed) {
        throw DataError("metadata for id '" + id + "': unknown chart_type '" + type + "'");
      }
      record.chart_type = *parsed;
    }
    auto violations = Validate(record);
    if (!violations.empty()) {
      throw DataError("record '" + id + "': " + violations.front());
    }
    corpus.records.push_back(std::move(record));
  }
  return corpus;
}

void CheckRatios(const SplitRatios& ratios) {
  for (double r : {ratios.train, ratios.validation, ratios.test}) {
    if (!(r > 0.0 && r < 1.0)) throw UsageError("split ratios must lie in (0, 1)");
  }
  const double sum = ratios.train + ratios.validation + ratios.test;
  if (std::abs(sum - 1.0) > 1e-9) throw UsageError("split ratios must sum to 1");
}

SplitRatios ParseRatios(std::string_view text) {
  std::vector<double> values;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string piece(text.substr(start, end - start));
    try {
      size_t used = 0;
      values.push_back(std::stod(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw UsageError("bad ratio '" + piece + "'");
    }
    start = end + 1;
  }
  if (values.size() != 3) throw UsageError("expected three ratios, e.g. 0.70,0.15,0.15");
  SplitRatios ratios{values[0], values[1], values[2]};
  CheckRatios(ratios);
  return ratios;
}

SplitSizes ComputeSplitSizes(size_t n, const SplitRatios& ratios) {
  CheckRatios(ratios);
  auto floor_of = [n](double ratio) {
    return static_cast<size_t>(std::floor(ratio * static_cast<double>(n) + 1e-9));
  };
  SplitSizes sizes;
  sizes.train = std::min(n, floor_of(ratios.train));
  sizes.validation = std::min(n - sizes.train, floor_of(ratios.validation));
  sizes.test = n - sizes.train - sizes.validation;
  return sizes;
}

SplitResult SplitCorpus(const Corpus& corpus, const SplitRatios& ratios,
                        uint64_t seed) {
  if (corpus.records.empty()) throw DataError("cannot split an empty corpus");
  if (corpus.split_tag != SplitTag::kUnsplit) {
    throw UsageError("corpus is already tagged '" +
                     std::string(SplitTagName(corpus.split_tag)) + "'");
  }
  const SplitSizes sizes = ComputeSplitSizes(corpus.records.size(), ratios);

  std::vector<size_t> order(corpus.records.size());
  std::iota(order.begin(), order.end(), size_t{0});
  SplitMix64 rng(seed);
  Shuffle(order, rng);

  SplitResult result;
  result.train.split_tag = SplitTag::kTrain;
  result.validation.split_tag = SplitTag::kValidation;
  result.test.split_tag = SplitTag::kTest;
  for (size_t i = 0; i < order.size(); ++i) {
    Corpus& target = i < sizes.train                       ? result.train
                     : i < sizes.train + sizes.validation ? result.validation
                                                           : result.test;
    target.records.push_back(corpus.records[order[i]]);
  }
  return result;
}

}  // namespace chartclean
