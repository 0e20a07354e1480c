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

// Ground-truth valuation by direct evaluation of the KNN utility.
//
// These routines evaluate v(S) on explicit subsets and derive Shapley values
// either by enumerating every subset (exact, exponential) or by averaging
// marginal contributions over random permutations. They exist to check the
// polynomial-time engines and as baselines; none of them is used on the fast
// paths.
//
// Subsets are given as positions into a SortedDataset. Because positions are
// ordered by distance, the K nearest members of a subset are simply its K
// smallest positions.

#ifndef WKNN_UTILITY_ORACLE_H_
#define WKNN_UTILITY_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "wknn/dataset.h"
#include "wknn/scores.h"

namespace wknn {

struct OracleConfig {
  int k = 5;
  int num_classes = 2;
};

// Bit p set <=> sorted position p is in the subset.
using SubsetMask = std::uint32_t;

inline constexpr std::size_t kMaxOracleSize = 20;

// Weighted hard-label KNN correctness on the query: 1 iff the query label
// attains the largest summed quantized weight among the min(K, |S|) nearest
// members of S. Ties count as correct, so v(empty) = 1.
int UtilityMulticlass(std::span<const std::size_t> members,
                      const SortedDataset& ds, const DiscreteWeights& w,
                      const OracleConfig& cfg);

// Binary form: 1 iff the signed weights of the min(K, |S|) nearest members
// sum to >= 0. Throws ConfigError when cfg.num_classes > 2.
int UtilityBinary(std::span<const std::size_t> members, const SortedDataset& ds,
                  const DiscreteWeights& w, const OracleConfig& cfg);

int UtilityMulticlass(SubsetMask mask, const SortedDataset& ds,
                      const DiscreteWeights& w, const OracleConfig& cfg);

// Shapley values of an arbitrary game on n <= kMaxOracleSize players by full
// enumeration. Marginal contributions are accumulated per coalition size with
// compensated summation, then weighted by 1 / (n * C(n-1, k)).
std::vector<double> EnumerateShapley(
    std::size_t n, const std::function<double(SubsetMask)>& utility);

// Enumeration oracle for the hard-label utility (UtilityMulticlass, which
// coincides with the binary form when C = 2). Values indexed by orig_index.
ShapleyScores BruteForceShapley(const SortedDataset& ds,
                                const DiscreteWeights& w,
                                const OracleConfig& cfg);

// T = ceil(2 / eps^2 * ln(2n / delta)): Hoeffding for marginal contributions
// bounded in [-1, 1], union-bounded over n points.
std::size_t MonteCarloPermutations(std::size_t n, double epsilon, double delta);

// Permutation-sampling estimate of the Shapley values of an arbitrary game
// whose utility reads a membership vector over sorted positions.
std::vector<double> PermutationSampleShapley(
    std::size_t n, std::size_t permutations, std::uint64_t seed,
    const std::function<double(const std::vector<bool>&)>& utility);

// Monte Carlo baseline for the hard-label utility. Reproducible by seed.
ShapleyScores MonteCarloShapley(const SortedDataset& ds,
                                const DiscreteWeights& w,
                                const OracleConfig& cfg, double epsilon,
                                double delta, std::uint64_t seed);

}  // namespace wknn

#endif  // WKNN_UTILITY_ORACLE_H_
