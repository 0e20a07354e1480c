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

// End-to-end valuation of a training set against a set of validation
// queries: sort per query, weight, discretize, run the chosen method, and
// sum the per-query scores.

#ifndef WKNN_VALUATION_H_
#define WKNN_VALUATION_H_

#include <cstdint>
#include <vector>

#include "wknn/approx.h"
#include "wknn/dataset.h"
#include "wknn/scores.h"

namespace wknn {

struct RunConfig {
  Method method = Method::kExact;
  int k = 5;
  int bits = 3;
  ApproxConfig approx = ApproxConfig::SqrtN();
  Kernel kernel = Kernel::kRbf;
  std::uint64_t seed = 0;
  int workers = 1;
  double mc_epsilon = 0.1;
  double mc_delta = 0.1;
};

struct ValuationLog {
  std::vector<double> seconds_per_query;
  // Queries for which the norm-dist kernel degenerated to uniform weights.
  int kernel_fallbacks = 0;
};

// Number of classes implied by the labels of both sides (at least 2).
int InferNumClasses(const std::vector<LabeledPoint>& train,
                    const std::vector<ValQuery>& queries);

// Scores for one query. Multi-class data goes through the pairwise
// reduction for exact/approx and through the pairwise utility for the
// oracle and Monte Carlo baselines, so every method values the same game.
ShapleyScores ValueForQuery(const std::vector<LabeledPoint>& train,
                            const ValQuery& query, int num_classes,
                            const RunConfig& cfg, ValuationLog* log = nullptr,
                            std::uint64_t query_seed = 0);

// Sum of ValueForQuery over all queries, in query order.
ShapleyScores ValueDataset(const std::vector<LabeledPoint>& train,
                           const std::vector<ValQuery>& queries,
                           const RunConfig& cfg, ValuationLog* log = nullptr);

}  // namespace wknn

#endif  // WKNN_VALUATION_H_
