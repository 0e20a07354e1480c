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

// Multi-class valuation through the pairwise utility
//
//   v~(S) = 1/(C-1) * sum_{c != y_val} v_c(S_c),
//
// where S_c keeps the members of S labelled y_val or c and v_c is the binary
// weighted KNN correctness computed on S_c's own K nearest members. By
// linearity the value splits into C-1 binary problems, each solved on the
// restriction of the training set to labels {y_val, c}; points outside a
// restriction are null players for that term.

#ifndef WKNN_MULTICLASS_H_
#define WKNN_MULTICLASS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "wknn/approx.h"
#include "wknn/dataset.h"
#include "wknn/exact.h"
#include "wknn/scores.h"
#include "wknn/utility_oracle.h"

namespace wknn {

struct ClassPairSubset {
  int c = 0;
  SortedDataset data;        // labels in {y_val, c}, original relative order
  DiscreteWeights weights;   // carried over unchanged
  std::vector<std::size_t> source_position;  // position in the full dataset
};

// Throws ConfigError when c equals the query label or is out of range.
ClassPairSubset BuildClassPair(const SortedDataset& ds, const DiscreteWeights& w,
                               int c);

struct MulticlassMethod {
  bool approx = false;
  ApproxConfig approx_config;

  static MulticlassMethod Exact() { return {}; }
  static MulticlassMethod Approx(ApproxConfig cfg) { return {true, cfg}; }
};

// Averages the per-pair binary values over the C-1 classes other than the
// query label (C = ds.num_classes()). For C = 2 this is the binary engine's
// output unchanged. Approximate runs average the per-pair intervals and
// error bounds the same way.
ShapleyScores MulticlassShapley(const SortedDataset& ds, const DiscreteWeights& w,
                                int k, const MulticlassMethod& method,
                                const EngineOptions& options = {});

// The pairwise utility v~ on an explicit subset of sorted positions.
double UtilityVtilde(std::span<const std::size_t> members,
                     const SortedDataset& ds, const DiscreteWeights& w, int k);
double UtilityVtilde(SubsetMask mask, const SortedDataset& ds,
                     const DiscreteWeights& w, int k);

}  // namespace wknn

#endif  // WKNN_MULTICLASS_H_
