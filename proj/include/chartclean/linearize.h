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

// Chart-to-string linearizations.
//
// Five layouts are supported. Given x label X, series names S1..Sk with
// y labels L1..Lk, and rows (x_i, y_i1..y_ik):
//
//   obeid             For each series j, the tuple "X | Sj | 0 | <type> chart"
//                     followed by "x_i | y_ij | i | <type> chart" for
//                     i = 1..n. Tuples are space-joined. No title.
//   obeid-title       "<title> " + obeid.
//   kantharaj         "<title>  " + all y values (series by series) +
//                     all x values, everything joined by " | ". Each y sits
//                     far from its x.
//   kantharaj-labels  kantharaj with X, L1..Lk prepended to the " | " list.
//   proposed          "<title> <label_marker> X - L1 - .. - Lk <value_marker> "
//                     + rows, each row "x_i y_i1 .. y_ik", rows joined by
//                     pair_separator. Each y value is adjacent to its x.
//
// The separators shown for proposed are the LinearizationSpec defaults. An
// empty title drops the title and the space(s) that follow it.

#ifndef CHARTCLEAN_LINEARIZE_H_
#define CHARTCLEAN_LINEARIZE_H_

#include <string>

#include "chartclean/chart_model.h"

namespace chartclean {

struct LinearizedInput {
  std::string text;
  LinearizationSpec spec;
  std::string source_id;
};

// Throws DataError if the record fails Validate or has no data points, and
// UsageError if a proposed-format spec has an empty marker.
LinearizedInput Linearize(const ChartRecord& record, const LinearizationSpec& spec);

}  // namespace chartclean

#endif  // CHARTCLEAN_LINEARIZE_H_
