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

// Closed-form value for unweighted soft-label KNN, whose utility is the
// fraction of the min(K, |S|) nearest members that share the query label,
// with v(empty) = 1/C. Used as a comparison baseline.

#ifndef WKNN_UNWEIGHTED_H_
#define WKNN_UNWEIGHTED_H_

#include <cstddef>
#include <span>
#include <vector>

#include "wknn/dataset.h"
#include "wknn/scores.h"
#include "wknn/utility_oracle.h"

namespace wknn {

struct UnweightedScores {
  std::vector<double> values;  // by orig_index
  int num_classes = 2;

  ShapleyScores ToScores() const;
};

// O(N) recursion from the farthest point inward (plus the sort that built
// `ds`). Throws ConfigError for K < 1 or C < 2.
UnweightedScores UnweightedKnnShapley(const SortedDataset& ds, int k,
                                      int num_classes);

double UtilitySoftUnweighted(std::span<const std::size_t> members,
                             const SortedDataset& ds, int k, int num_classes);
double UtilitySoftUnweighted(SubsetMask mask, const SortedDataset& ds, int k,
                             int num_classes);

}  // namespace wknn

#endif  // WKNN_UNWEIGHTED_H_
