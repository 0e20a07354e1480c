/*
 * Copyright 2026 The WKNN Shapley Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// CSV surfaces of the command-line tool.
//
// Labeled data: a header row "f0,f1,...,f{d-1},label" followed by one row
// per point; the 0-based data row number becomes the point's orig_index.
// Scores: "orig_index,value" or "orig_index,value,lower,upper,eps", values
// printed with 17 significant digits.

#ifndef WKNN_CSV_IO_H_
#define WKNN_CSV_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "wknn/dataset.h"
#include "wknn/scores.h"

namespace wknn {

// Throws DataError on unreadable files, bad headers or malformed rows.
std::vector<LabeledPoint> ReadLabeledCsv(const std::string& path);
std::vector<LabeledPoint> ParseLabeledCsv(std::istream& in,
                                          const std::string& source);
void WriteLabeledCsv(std::ostream& out, const std::vector<LabeledPoint>& points);

void WriteScoresCsv(std::ostream& out, const ShapleyScores& scores);
ShapleyScores ReadScoresCsv(const std::string& path);

}  // namespace wknn

#endif  // WKNN_CSV_IO_H_
