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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "chartclean/errors.h"

namespace chartclean {
namespace {

void ReplaceAll(std::string& s, std::string_view from, std::string_view to) {
  for (size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

// Character class [\{-\~\[-\` -\&\(-\+\:-\@\/] of the 13a tokenizer: ASCII
// punctuation except ' , - . plus the space character.
bool IsSplitSymbol(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (u >= 0x7B && u <= 0x7E) || (u >= 0x5B && u <= 0x60) || (u >= 0x20 && u <= 0x26) ||
         (u >= 0x28 && u <= 0x2B) || (u >= 0x3A && u <= 0x40) || u == 0x2F;
}

bool IsPeriodOrComma(char c) { return c == '.' || c == ','; }

// Each pass reproduces re.sub on a two-character pattern: matches are found
// left to right and never overlap.
std::string SeparatePeriodAfterNonDigit(const std::string& s) {
  std::string out;
  out.reserve(s.size() * 2);
  size_t i = 0;
  while (i < s.size()) {
    if (i + 1 < s.size() && !IsDigit(s[i]) && IsPeriodOrComma(s[i + 1])) {
      out.push_back(s[i]);
      out.push_back(' ');
      out.push_back(s[i + 1]);
      out.push_back(' ');
      i += 2;
    } else {
      out.push_back(s[i++]);
    }
  }
  return out;
}

std::string SeparatePeriodBeforeNonDigit(const std::string& s) {
  std::string out;
  out.reserve(s.size() * 2);
  size_t i = 0;
  while (i < s.size()) {
    if (i + 1 < s.size() && IsPeriodOrComma(s[i]) && !IsDigit(s[i + 1])) {
      out.push_back(' ');
      out.push_back(s[i]);
      out.push_back(' ');
      out.push_back(s[i + 1]);
      i += 2;
    } else {
      out.push_back(s[i++]);
    }
  }
  return out;
}

std::string SeparateDashAfterDigit(const std::string& s) {
  std::string out;
  out.reserve(s.size() * 2);
  size_t i = 0;
  while (i < s.size()) {
    if (i + 1 < s.size() && IsDigit(s[i]) && s[i + 1] == '-') {
      out.push_back(s[i]);
      out.push_back(' ');
      out.push_back('-');
      out.push_back(' ');
      i += 2;
    } else {
      out.push_back(s[i++]);
    }
  }
  return out;
}

using NgramCounts = std::unordered_map<std::string, size_t>;

NgramCounts CountNgrams(const std::vector<std::string>& tokens, size_t order) {
  NgramCounts counts;
  if (tokens.size() < order) return counts;
  for (size_t i = 0; i + order <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (size_t k = 1; k < order; ++k) {
      key.push_back('\x1f');
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

size_t ClippedMatches(const NgramCounts& hypothesis, const NgramCounts& reference) {
  size_t matched = 0;
  for (const auto& [gram, count] : hypothesis) {
    auto it = reference.find(gram);
    if (it != reference.end()) matched += std::min(count, it->second);
  }
  return matched;
}

struct TextLine {
  std::string id;
  std::string text;
};

std::vector<TextLine> ReadTextLines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::vector<TextLine> lines;
  std::unordered_set<std::string> seen;
  std::string line;
  size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = path.string() + ": line " + std::to_string(number);
    nlohmann::json object;
    try {
      object = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw DataError(where + ": malformed JSON: " + e.what());
    }
    if (!object.is_object() || !object.contains("id") || !object["id"].is_string()) {
      throw DataError(where + ": missing string field 'id'");
    }
    const char* field = object.contains("text") ? "text" : "summary";
    if (!object.contains(field) || !object[field].is_string()) {
      throw DataError(where + ": missing string field 'text'");
    }
    TextLine entry{object["id"].get<std::string>(), object[field].get<std::string>()};
    if (!seen.insert(entry.id).second) {
      throw DataError(where + ": duplicate id '" + entry.id + "'");
    }
    lines.push_back(std::move(entry));
  }
  if (lines.empty()) throw DataError(path.string() + ": no records");
  return lines;
}

}  // namespace

std::string NormalizeUnicodePunctuation(std::string_view text) {
  std::string out(text);
  ReplaceAll(out, "\xE2\x80\x9C", "\"");  // left double quote
  ReplaceAll(out, "\xE2\x80\x9D", "\"");  // right double quote
  ReplaceAll(out, "\xE2\x80\x9E", "\"");  // low double quote
  ReplaceAll(out, "\xE2\x80\x98", "'");   // left single quote
  ReplaceAll(out, "\xE2\x80\x99", "'");   // right single quote
  ReplaceAll(out, "\xE2\x80\x9A", "'");   // low single quote
  ReplaceAll(out, "\xE2\x80\x93", "-");   // en dash
  ReplaceAll(out, "\xE2\x80\x94", "-");   // em dash
  ReplaceAll(out, "\xE2\x80\xA6", "...");
  ReplaceAll(out, "\xC2\xA0", " ");  // no-break space
  return out;
}

std::vector<std::string> Tokenize13a(std::string_view text) {
  std::string line = NormalizeUnicodePunctuation(text);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
  ReplaceAll(line, "<skipped>", "");
  ReplaceAll(line, "-\n", "");
  ReplaceAll(line, "\n", " ");
  if (line.find('&') != std::string::npos) {
    ReplaceAll(line, "&quot;", "\"");
    ReplaceAll(line, "&amp;", "&");
    ReplaceAll(line, "&lt;", "<");
    ReplaceAll(line, "&gt;", ">");
  }

  std::string spaced = " ";
  for (char c : line) {
    if (IsSplitSymbol(c)) {
      spaced.push_back(' ');
      spaced.push_back(c);
      spaced.push_back(' ');
    } else {
      spaced.push_back(c);
    }
  }
  spaced.push_back(' ');
  spaced = SeparateDashAfterDigit(
      SeparatePeriodBeforeNonDigit(SeparatePeriodAfterNonDigit(spaced)));

  std::vector<std::string> tokens;
  std::string current;
  for (char c : spaced) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

BleuStats& BleuStats::operator+=(const BleuStats& other) {
  for (size_t n = 0; n < 4; ++n) {
    matched[n] += other.matched[n];
    total[n] += other.total[n];
  }
  hypothesis_length += other.hypothesis_length;
  reference_length += other.reference_length;
  return *this;
}

BleuStats ComputeBleuStats(const std::vector<std::string>& hypothesis,
                           const std::vector<std::string>& reference) {
  BleuStats stats;
  stats.hypothesis_length = hypothesis.size();
  stats.reference_length = reference.size();
  for (size_t order = 1; order <= 4; ++order) {
    const NgramCounts hyp = CountNgrams(hypothesis, order);
    stats.matched[order - 1] = ClippedMatches(hyp, CountNgrams(reference, order));
    stats.total[order - 1] = hypothesis.size() >= order ? hypothesis.size() - order + 1 : 0;
  }
  return stats;
}

double BleuFromStats(const BleuStats& stats) {
  const double c = static_cast<double>(stats.hypothesis_length);
  const double r = static_cast<double>(stats.reference_length);
  double brevity = 1.0;
  if (c < r) brevity = c > 0 ? std::exp(1.0 - r / c) : 0.0;

  bool any_match = false;
  for (size_t m : stats.matched) any_match = any_match || m > 0;
  if (!any_match) return 0.0;

  double smoothing = 1.0;
  double log_sum = 0.0;
  for (size_t n = 0; n < 4; ++n) {
    if (stats.total[n] == 0) return 0.0;
    double precision;
    if (stats.matched[n] == 0) {
      smoothing *= 2.0;
      precision = 100.0 / (smoothing * static_cast<double>(stats.total[n]));
    } else {
      precision = 100.0 * static_cast<double>(stats.matched[n]) /
                  static_cast<double>(stats.total[n]);
    }
    log_sum += std::log(precision);
  }
  return brevity * std::exp(log_sum / 4.0);
}

double Bleu4(const std::vector<EvalPair>& pairs) {
  if (pairs.empty()) throw DataError("BLEU needs at least one pair");
  BleuStats total;
  for (const EvalPair& pair : pairs) {
    total += ComputeBleuStats(Tokenize13a(pair.hypothesis), Tokenize13a(pair.reference));
  }
  return BleuFromStats(total);
}

double Rouge2F1(const std::vector<std::string>& hypothesis,
                const std::vector<std::string>& reference) {
  if (hypothesis.size() < 2 || reference.size() < 2) return 0.0;
  const double matched = static_cast<double>(
      ClippedMatches(CountNgrams(hypothesis, 2), CountNgrams(reference, 2)));
  if (matched == 0.0) return 0.0;
  const double precision = matched / static_cast<double>(hypothesis.size() - 1);
  const double recall = matched / static_cast<double>(reference.size() - 1);
  return 2.0 * precision * recall / (precision + recall);
}

double Rouge2(const std::vector<EvalPair>& pairs) {
  return Evaluate(pairs).rouge2_f1;
}

EvalReport Evaluate(const std::vector<EvalPair>& pairs) {
  if (pairs.empty()) throw DataError("evaluation needs at least one pair");
  EvalReport report;
  report.pair_count = pairs.size();
  BleuStats bleu;
  double rouge_sum = 0.0;
  for (const EvalPair& pair : pairs) {
    const auto hyp = Tokenize13a(pair.hypothesis);
    const auto ref = Tokenize13a(pair.reference);
    bleu += ComputeBleuStats(hyp, ref);
    const double f1 = Rouge2F1(hyp, ref);
    rouge_sum += f1;
    report.per_pair_rouge2.push_back({pair.id, f1});
  }
  report.bleu4 = BleuFromStats(bleu);
  report.rouge2_f1 = rouge_sum / static_cast<double>(pairs.size());
  return report;
}

std::vector<EvalPair> AlignPairs(const std::filesystem::path& hypothesis_path,
                                 const std::filesystem::path& reference_path) {
  const auto hypotheses = ReadTextLines(hypothesis_path);
  const auto references = ReadTextLines(reference_path);
  std::unordered_map<std::string, const std::string*> by_id;
  for (const auto& h : hypotheses) by_id[h.id] = &h.text;

  std::vector<EvalPair> pairs;
  std::vector<std::string> missing_hyp;
  std::unordered_set<std::string> reference_ids;
  for (const auto& ref : references) {
    reference_ids.insert(ref.id);
    auto it = by_id.find(ref.id);
    if (it == by_id.end()) {
      missing_hyp.push_back(ref.id);
      continue;
    }
    pairs.push_back({ref.id, *it->second, ref.text});
  }
  std::vector<std::string> missing_ref;
  for (const auto& h : hypotheses) {
    if (!reference_ids.contains(h.id)) missing_ref.push_back(h.id);
  }
  if (!missing_hyp.empty() || !missing_ref.empty()) {
    std::string message = "hypothesis and reference ids do not match;";
    auto list = [&](const char* label, const std::vector<std::string>& ids) {
      if (ids.empty()) return;
      message += std::string(" ") + label + ":";
      for (const auto& id : ids) message += " '" + id + "'";
    };
    list("no hypothesis for", missing_hyp);
    list("no reference for", missing_ref);
    throw DataError(message);
  }
  return pairs;
}

nlohmann::ordered_json EvalReportToJson(const EvalReport& report) {
  nlohmann::ordered_json out;
  out["bleu4"] = report.bleu4;
  out["rouge2_f1"] = report.rouge2_f1;
  out["pair_count"] = report.pair_count;
  auto per_pair = nlohmann::ordered_json::array();
  for (const auto& p : report.per_pair_rouge2) {
    per_pair.push_back({{"id", p.id}, {"rouge2_f1", p.rouge2_f1}});
  }
  out["per_pair_rouge2"] = std::move(per_pair);
  out["perplexity"] = report.perplexity ? nlohmann::ordered_json(*report.perplexity) : nullptr;
  out["nubia"] = report.nubia ? nlohmann::ordered_json(*report.nubia) : nullptr;
  return out;
}

}  // namespace chartclean
