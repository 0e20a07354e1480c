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

#include "wknn/scores.h"

#include "wknn/errors.h"

namespace wknn {

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kExact:
      return "exact";
    case Method::kApprox:
      return "approx";
    case Method::kMonteCarlo:
      return "mc";
    case Method::kOracle:
      return "oracle";
    case Method::kUnweightedSoft:
      return "unweighted_soft";
    case Method::kUnweightedHard:
      return "unweighted_hard";
  }
  return "unknown";
}

std::optional<Method> ParseMethod(std::string_view name) {
  for (Method m : {Method::kExact, Method::kApprox, Method::kMonteCarlo,
                   Method::kOracle, Method::kUnweightedSoft,
                   Method::kUnweightedHard}) {
    if (MethodName(m) == name) return m;
  }
  return std::nullopt;
}

ShapleyScores ScatterToOriginal(const SortedDataset& ds,
                                std::span<const double> by_position,
                                Method method) {
  if (by_position.size() != ds.size()) {
    throw DataError("one value per sorted position required");
  }
  ShapleyScores out;
  out.method = method;
  out.values.assign(ds.source_size(), 0.0);
  for (std::size_t pos = 0; pos < ds.size(); ++pos) {
    out.values[ds.orig_index(pos)] = by_position[pos];
  }
  return out;
}

ShapleyScores AggregateOverValidation(std::span<const ShapleyScores> per_query) {
  if (per_query.empty()) throw DataError("no per-query scores to aggregate");
  ShapleyScores total;
  total.method = per_query.front().method;
  total.values.assign(per_query.front().size(), 0.0);
  const bool with_intervals = per_query.front().intervals.has_value();
  if (with_intervals) {
    total.intervals.emplace(total.values.size());
    total.eps = 0.0;
  }
  for (const auto& q : per_query) {
    if (q.size() != total.size()) {
      throw DataError("per-query scores cover different index sets");
    }
    if (q.intervals.has_value() != with_intervals) {
      throw DataError("cannot mix scores with and without intervals");
    }
    for (std::size_t k = 0; k < q.size(); ++k) total.values[k] += q.values[k];
    if (with_intervals) {
      if (q.intervals->size() != q.size()) {
        throw DataError("interval count does not match value count");
      }
      for (std::size_t k = 0; k < q.size(); ++k) {
        (*total.intervals)[k].lower += (*q.intervals)[k].lower;
        (*total.intervals)[k].upper += (*q.intervals)[k].upper;
      }
      *total.eps += q.eps.value_or(0.0);
    }
  }
  return total;
}

}  // namespace wknn
