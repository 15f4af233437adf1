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

// Rule-based English sentence segmentation.
//
// Input is first whitespace-normalized: every run of ASCII whitespace
// (space, \t, \n, \v, \f, \r) becomes one space and the ends are trimmed.
// The normalized text is then cut between two tokens when
//
//   * the left token, ignoring trailing closing quotes and brackets, ends in
//     '.', '!' or '?', and
//   * the right token, ignoring leading opening quotes and brackets, starts
//     with an ASCII uppercase letter or a digit, and
//   * for '.', the left token is not a listed abbreviation ("U.S.", "Dr.",
//     "Fig.", ...) and not a single capital initial ("J.").
//
// A full stop inside a token ("8.62", "P.E.I") is never a boundary. Because
// cuts happen only at single spaces of the normalized text, joining the
// sentences with one space reproduces the normalized text exactly.

#ifndef CHARTCLEAN_SEGMENT_H_
#define CHARTCLEAN_SEGMENT_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace chartclean {

struct SegmentedSummary {
  std::vector<std::string> sentences;
  std::string joiner = " ";

  bool operator==(const SegmentedSummary&) const = default;
};

std::string NormalizeWhitespace(std::string_view text);

class Segmenter {
 public:
  explicit Segmenter(std::unordered_set<std::string> abbreviations);

  // Parses the abbreviation list format: one entry per line, '#' starts a
  // comment, surrounding whitespace ignored.
  static Segmenter FromList(std::string_view list_text);
  static Segmenter FromFile(const std::filesystem::path& path);

  // Segmenter over data/abbreviations.txt as compiled into the library.
  static const Segmenter& Default();

  SegmentedSummary Segment(std::string_view text) const;

  bool IsAbbreviation(std::string_view token) const {
    return abbreviations_.contains(std::string(token));
  }
  size_t abbreviation_count() const { return abbreviations_.size(); }

 private:
  bool EndsSentence(std::string_view token, std::string_view next) const;

  std::unordered_set<std::string> abbreviations_;
};

// Segment with Segmenter::Default().
SegmentedSummary Segment(std::string_view text);

// Sentences joined by the joiner. For every text t,
// Reassemble(Segment(t)) == NormalizeWhitespace(t).
std::string Reassemble(const SegmentedSummary& segmented);

}  // namespace chartclean

#endif  // CHARTCLEAN_SEGMENT_H_
