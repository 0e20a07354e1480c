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

// Deterministic approximation of WKNN-Shapley by truncating every count at
// the M* nearest points, with a certified error bound.
//
// The truncated value shares the sign of the exact value, never exceeds it in
// magnitude and is within eps(M*) of it, so the exact value is guaranteed to
// lie in [phi^, phi^ + eps] for points labelled like the query and in
// [phi^ - eps, phi^] otherwise.

#ifndef WKNN_APPROX_H_
#define WKNN_APPROX_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "wknn/dataset.h"
#include "wknn/exact.h"
#include "wknn/scores.h"

namespace wknn {

struct ApproxConfig {
  enum class Policy { kFixed, kSqrtN, kAdaptive };

  Policy policy = Policy::kSqrtN;
  std::size_t mstar = 0;        // kFixed only
  double adaptive_ratio = 0.1;  // kAdaptive only

  static ApproxConfig Fixed(std::size_t mstar) {
    return {Policy::kFixed, mstar, 0.1};
  }
  static ApproxConfig SqrtN() { return {Policy::kSqrtN, 0, 0.1}; }
  static ApproxConfig Adaptive(double ratio = 0.1) {
    return {Policy::kAdaptive, 0, ratio};
  }
};

// Smallest admissible M*: K+1, or N when N <= K (no truncation possible).
std::size_t MinMstar(std::size_t n, int k);

// M* for kFixed / kSqrtN. kSqrtN gives max(K+1, ceil(sqrt(N))) capped at N.
// Throws ConfigError for kAdaptive or a fixed M* outside [MinMstar, N].
std::size_t ResolveMstar(const ApproxConfig& cfg, std::size_t n, int k);

// Moves M* past any points tied in distance with the M*-th nearest, so a
// truncation never separates points the query cannot tell apart. Without
// this, two duplicates straddling the cut would receive different values.
std::size_t TieAwareMstar(const SortedDataset& ds, std::size_t mstar);

// eps(M*) = sum_{m=M*+1}^{N} (1/(m-K) - 1/m)
//         + sum_{l=1}^{K-1} (C(N,l) - C(M*,l)) / (N C(N-1,l)).
// Zero at M* = N and strictly decreasing in M*.
double ErrorBound(std::size_t n, int k, std::size_t mstar);

struct ApproxScores {
  std::vector<double> values;  // by orig_index
  double eps = 0.0;
  std::vector<Interval> intervals;  // by orig_index
  std::size_t mstar_used = 0;
  // Adaptive mode only: false when the stopping rule never fired and the
  // result is the exact value at M* = N.
  bool stop_rule_fired = true;

  ShapleyScores ToScores() const;
};

// Truncated values at a fixed M* (after TieAwareMstar), by sorted position.
std::vector<double> ApproxShapleyByPosition(const SortedDataset& ds,
                                            const DiscreteWeights& w, int k,
                                            std::size_t mstar,
                                            const EngineOptions& options = {});

// Binary classification only. kAdaptive delegates to AdaptiveMstar().
ApproxScores ApproxShapley(const SortedDataset& ds, const DiscreteWeights& w,
                           int k, const ApproxConfig& cfg,
                           const EngineOptions& options = {});

// Called after every completed M* with the running values (by orig_index).
using MstarObserver =
    std::function<void(std::size_t mstar, std::span<const double> values)>;

// Grows M* from K+1 one tie group at a time, updating every running value
// incrementally, and stops at the first M* with
// eps(M*) < ratio * median(|phi^_i| over phi^_i != 0).
ApproxScores AdaptiveMstar(const SortedDataset& ds, const DiscreteWeights& w,
                           int k, double ratio,
                           const EngineOptions& options = {},
                           const MstarObserver& observer = {});

}  // namespace wknn

#endif  // WKNN_APPROX_H_
