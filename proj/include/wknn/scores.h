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

#ifndef WKNN_SCORES_H_
#define WKNN_SCORES_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wknn/dataset.h"

namespace wknn {

enum class Method {
  kExact,
  kApprox,
  kMonteCarlo,
  kOracle,
  kUnweightedSoft,
  kUnweightedHard,
};

std::string_view MethodName(Method method);
std::optional<Method> ParseMethod(std::string_view name);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

// Per-point data values indexed by orig_index.
struct ShapleyScores {
  Method method = Method::kExact;
  std::vector<double> values;
  // Present for the deterministic approximation: the certified range that
  // contains the exact value, and the bound it was derived from.
  std::optional<std::vector<Interval>> intervals;
  std::optional<double> eps;

  std::size_t size() const { return values.size(); }
};

// Moves values computed in sorted-position order to orig_index order. The
// result has ds.source_size() entries; slots not covered by ds stay zero.
ShapleyScores ScatterToOriginal(const SortedDataset& ds,
                                std::span<const double> by_position,
                                Method method);

// Element-wise sum of per-query scores. The Shapley value is linear in the
// utility, so the result is the value for the summed validation utility.
// Intervals and error bounds add up the same way. Throws DataError when the
// inputs cover different index sets or mix methods with/without intervals.
ShapleyScores AggregateOverValidation(std::span<const ShapleyScores> per_query);

}  // namespace wknn

#endif  // WKNN_SCORES_H_
