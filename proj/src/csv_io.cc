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

#include "wknn/csv_io.h"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "wknn/errors.h"

namespace wknn {
namespace {

std::vector<std::string> SplitRow(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream stream(line);
  while (std::getline(stream, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
    cells.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double ParseDouble(const std::string& cell, const std::string& where) {
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(cell.c_str(), &end);
  if (cell.empty() || end != cell.c_str() + cell.size() || errno == ERANGE) {
    throw DataError(where + ": not a number: '" + cell + "'");
  }
  return value;
}

long long ParseInteger(const std::string& cell, const std::string& where) {
  errno = 0;
  char* end = nullptr;
  const long long value = std::strtoll(cell.c_str(), &end, 10);
  if (cell.empty() || end != cell.c_str() + cell.size() || errno == ERANGE) {
    throw DataError(where + ": not an integer: '" + cell + "'");
  }
  return value;
}

std::string FormatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::vector<LabeledPoint> ParseLabeledCsv(std::istream& in,
                                          const std::string& source) {
  std::string line;
  if (!std::getline(in, line)) throw DataError(source + ": empty file");
  const auto header = SplitRow(line);
  if (header.size() < 2 || header.back() != "label") {
    throw DataError(source + ": header must be f0,...,f{d-1},label");
  }
  const std::size_t dims = header.size() - 1;
  for (std::size_t d = 0; d < dims; ++d) {
    if (header[d] != "f" + std::to_string(d)) {
      throw DataError(source + ": expected column f" + std::to_string(d) +
                      ", found '" + header[d] + "'");
    }
  }
  std::vector<LabeledPoint> points;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const std::string where = source + ":" + std::to_string(line_no);
    const auto cells = SplitRow(line);
    if (cells.size() != header.size()) {
      throw DataError(where + ": expected " + std::to_string(header.size()) +
                      " columns, found " + std::to_string(cells.size()));
    }
    LabeledPoint p;
    p.features.resize(dims);
    for (std::size_t d = 0; d < dims; ++d) {
      p.features[d] = ParseDouble(cells[d], where);
      if (!std::isfinite(p.features[d])) throw DataError(where + ": non-finite feature");
    }
    const long long label = ParseInteger(cells.back(), where);
    if (label < 0 || label > 1'000'000) throw DataError(where + ": label out of range");
    p.label = static_cast<int>(label);
    p.orig_index = points.size();
    points.push_back(std::move(p));
  }
  return points;
}

std::vector<LabeledPoint> ReadLabeledCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path);
  return ParseLabeledCsv(in, path);
}

void WriteLabeledCsv(std::ostream& out, const std::vector<LabeledPoint>& points) {
  const std::size_t dims = points.empty() ? 0 : points.front().features.size();
  for (std::size_t d = 0; d < dims; ++d) out << 'f' << d << ',';
  out << "label\n";
  for (const auto& p : points) {
    for (double f : p.features) out << FormatDouble(f) << ',';
    out << p.label << '\n';
  }
}

void WriteScoresCsv(std::ostream& out, const ShapleyScores& scores) {
  const bool with_intervals = scores.intervals.has_value();
  out << (with_intervals ? "orig_index,value,lower,upper,eps\n"
                         : "orig_index,value\n");
  for (std::size_t k = 0; k < scores.size(); ++k) {
    out << k << ',' << FormatDouble(scores.values[k]);
    if (with_intervals) {
      const Interval& iv = (*scores.intervals)[k];
      out << ',' << FormatDouble(iv.lower) << ',' << FormatDouble(iv.upper)
          << ',' << FormatDouble(scores.eps.value_or(0.0));
    }
    out << '\n';
  }
}

ShapleyScores ReadScoresCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path);
  std::string line;
  if (!std::getline(in, line)) throw DataError(path + ": empty file");
  const auto header = SplitRow(line);
  const bool with_intervals = header.size() == 5;
  if (header.size() != 2 && !with_intervals) {
    throw DataError(path + ": unexpected score header");
  }
  ShapleyScores scores;
  if (with_intervals) scores.intervals.emplace();
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = path + ":" + std::to_string(line_no);
    const auto cells = SplitRow(line);
    if (cells.size() != header.size()) throw DataError(where + ": column count");
    if (ParseInteger(cells[0], where) != static_cast<long long>(scores.size())) {
      throw DataError(where + ": orig_index out of sequence");
    }
    scores.values.push_back(ParseDouble(cells[1], where));
    if (with_intervals) {
      scores.intervals->push_back(
          {ParseDouble(cells[2], where), ParseDouble(cells[3], where)});
      scores.eps = ParseDouble(cells[4], where);
    }
  }
  return scores;
}

}  // namespace wknn
