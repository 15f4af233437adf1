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

#include "chartclean/segment.h"

#include <fstream>
#include <sstream>

#include "chartclean/errors.h"

namespace chartclean {
namespace embedded {
extern const std::string_view kAbbreviations;
}  // namespace embedded

namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' || c == '\r';
}

// Strips closing punctuation that may follow a terminator: ) ] } " ' and the
// UTF-8 right quotes U+2019, U+201D.
std::string_view StripClosers(std::string_view token) {
  for (;;) {
    if (token.empty()) return token;
    const char last = token.back();
    if (last == ')' || last == ']' || last == '}' || last == '"' || last == '\'') {
      token.remove_suffix(1);
    } else if (token.ends_with("\xE2\x80\x99") || token.ends_with("\xE2\x80\x9D")) {
      token.remove_suffix(3);
    } else {
      return token;
    }
  }
}

// Strips opening punctuation: ( [ { " ' and the UTF-8 left quotes U+2018,
// U+201C.
std::string_view StripOpeners(std::string_view token) {
  for (;;) {
    if (token.empty()) return token;
    const char first = token.front();
    if (first == '(' || first == '[' || first == '{' || first == '"' || first == '\'') {
      token.remove_prefix(1);
    } else if (token.starts_with("\xE2\x80\x98") || token.starts_with("\xE2\x80\x9C")) {
      token.remove_prefix(3);
    } else {
      return token;
    }
  }
}

bool IsUpperOrDigit(char c) { return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'); }

}  // namespace

std::string NormalizeWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

Segmenter::Segmenter(std::unordered_set<std::string> abbreviations)
    : abbreviations_(std::move(abbreviations)) {}

Segmenter Segmenter::FromList(std::string_view list_text) {
  std::unordered_set<std::string> entries;
  std::istringstream in{std::string(list_text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string entry = NormalizeWhitespace(line);
    if (!entry.empty()) entries.insert(std::move(entry));
  }
  return Segmenter(std::move(entries));
}

Segmenter Segmenter::FromFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open abbreviation list " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return FromList(buffer.str());
}

const Segmenter& Segmenter::Default() {
  static const Segmenter segmenter = FromList(embedded::kAbbreviations);
  return segmenter;
}

bool Segmenter::EndsSentence(std::string_view token, std::string_view next) const {
  const std::string_view core = StripClosers(token);
  if (core.empty()) return false;
  const char terminator = core.back();
  if (terminator != '.' && terminator != '!' && terminator != '?') return false;

  const std::string_view following = StripOpeners(next);
  if (following.empty() || !IsUpperOrDigit(following.front())) return false;

  if (terminator == '.') {
    const std::string_view word = StripOpeners(core);
    if (IsAbbreviation(word)) return false;
    if (word.size() == 2 && word[0] >= 'A' && word[0] <= 'Z') return false;
  }
  return true;
}

SegmentedSummary Segmenter::Segment(std::string_view text) const {
  const std::string normalized = NormalizeWhitespace(text);
  SegmentedSummary result;
  if (normalized.empty()) return result;

  std::vector<std::string_view> tokens;
  std::string_view rest = normalized;
  while (!rest.empty()) {
    const size_t space = rest.find(' ');
    tokens.push_back(rest.substr(0, space));
    if (space == std::string_view::npos) break;
    rest.remove_prefix(space + 1);
  }

  std::string sentence;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (!sentence.empty()) sentence.push_back(' ');
    sentence.append(tokens[i]);
    if (i + 1 == tokens.size() || EndsSentence(tokens[i], tokens[i + 1])) {
      result.sentences.push_back(std::move(sentence));
      sentence.clear();
    }
  }
  return result;
}

SegmentedSummary Segment(std::string_view text) {
  return Segmenter::Default().Segment(text);
}

std::string Reassemble(const SegmentedSummary& segmented) {
  std::string out;
  for (size_t i = 0; i < segmented.sentences.size(); ++i) {
    if (i) out += segmented.joiner;
    out += segmented.sentences[i];
  }
  return out;
}

}  // namespace chartclean
