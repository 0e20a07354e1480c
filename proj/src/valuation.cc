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

#include "wknn/valuation.h"

#include <algorithm>
#include <chrono>

#include "wknn/errors.h"
#include "wknn/exact.h"
#include "wknn/multiclass.h"
#include "wknn/unweighted.h"
#include "wknn/utility_oracle.h"

namespace wknn {

int InferNumClasses(const std::vector<LabeledPoint>& train,
                    const std::vector<ValQuery>& queries) {
  int top = 1;
  for (const auto& p : train) top = std::max(top, p.label);
  for (const auto& q : queries) top = std::max(top, q.label);
  return top + 1;
}

ShapleyScores ValueForQuery(const std::vector<LabeledPoint>& train,
                            const ValQuery& query, int num_classes,
                            const RunConfig& cfg, ValuationLog* log,
                            std::uint64_t query_seed) {
  const auto start = std::chrono::steady_clock::now();
  const SortedDataset ds =
      SortByDistance(train, query, Metric::kEuclidean, num_classes);
  const EngineOptions options{cfg.workers};

  ShapleyScores scores;
  if (cfg.method == Method::kUnweightedSoft) {
    scores = UnweightedKnnShapley(ds, cfg.k, num_classes).ToScores();
  } else {
    const Kernel kernel =
        cfg.method == Method::kUnweightedHard ? Kernel::kUniform : cfg.kernel;
    const WeightAssignment raw = AssignWeights(ds, kernel);
    if (raw.fell_back_to_uniform && log != nullptr) ++log->kernel_fallbacks;
    const DiscreteWeights w = Discretize(raw.weights, cfg.bits);
    const bool binary = num_classes == 2;
    switch (cfg.method) {
      case Method::kExact:
      case Method::kUnweightedHard:
        scores = MulticlassShapley(ds, w, cfg.k, MulticlassMethod::Exact(), options);
        scores.method = cfg.method;
        break;
      case Method::kApprox:
        scores = MulticlassShapley(ds, w, cfg.k,
                                   MulticlassMethod::Approx(cfg.approx), options);
        break;
      case Method::kOracle:
        if (binary) {
          scores = BruteForceShapley(ds, w, {cfg.k, num_classes});
        } else {
          scores = ScatterToOriginal(
              ds,
              EnumerateShapley(ds.size(),
                               [&](SubsetMask mask) {
                                 return UtilityVtilde(mask, ds, w, cfg.k);
                               }),
              Method::kOracle);
        }
        break;
      case Method::kMonteCarlo:
        if (binary) {
          scores = MonteCarloShapley(ds, w, {cfg.k, num_classes}, cfg.mc_epsilon,
                                     cfg.mc_delta, query_seed);
        } else {
          const auto permutations =
              MonteCarloPermutations(ds.size(), cfg.mc_epsilon, cfg.mc_delta);
          scores = ScatterToOriginal(
              ds,
              PermutationSampleShapley(
                  ds.size(), permutations, query_seed,
                  [&](const std::vector<bool>& member) {
                    std::vector<std::size_t> members;
                    for (std::size_t pos = 0; pos < member.size(); ++pos) {
                      if (member[pos]) members.push_back(pos);
                    }
                    return UtilityVtilde(members, ds, w, cfg.k);
                  }),
              Method::kMonteCarlo);
        }
        break;
      case Method::kUnweightedSoft:
        break;
    }
  }
  if (log != nullptr) {
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    log->seconds_per_query.push_back(elapsed.count());
  }
  return scores;
}

ShapleyScores ValueDataset(const std::vector<LabeledPoint>& train,
                           const std::vector<ValQuery>& queries,
                           const RunConfig& cfg, ValuationLog* log) {
  if (queries.empty()) throw DataError("no validation queries");
  const int classes = InferNumClasses(train, queries);
  std::vector<ShapleyScores> per_query;
  per_query.reserve(queries.size());
  for (std::size_t q = 0; q < queries.size(); ++q) {
    per_query.push_back(ValueForQuery(train, queries[q], classes, cfg, log,
                                      cfg.seed + q));
  }
  return AggregateOverValidation(per_query);
}

}  // namespace wknn
