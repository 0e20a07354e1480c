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

// Subset-count tables behind the quadratic-time WKNN-Shapley engine.
//
// For a target position i, F_i[m, l, s] counts the size-l subsets S of the
// training set without i whose l-th nearest member is position m and whose
// signed weights sum to s. Only l <= K-1 is ever needed: subsets of size >= K
// enter the value through the R_{i,m} stream, which reads the l = K-1 layer.
//
// All sums are kept on an integer grid in units of 1/(2^b - 1) so interval
// membership is decided exactly. Counts are stored as doubles: they are exact
// integers up to 2^53 and keep full relative precision beyond, where 64-bit
// integers would overflow (C(N-1, K-1) exceeds 2^64 for N = 1e5, K = 10).
//
// Positions are 0-based throughout; "m" in comments is a position.

#ifndef WKNN_COUNT_TABLE_H_
#define WKNN_COUNT_TABLE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "wknn/dataset.h"

namespace wknn {

// Integer grid for signed partial sums of up to K-1 weights:
// levels in [-(K-1)(W-1), (K-1)(W-1)], value(level) = level / (W-1).
class SignedGrid {
 public:
  SignedGrid(int k, int bits);

  int k() const { return k_; }
  int bits() const { return bits_; }
  int lo() const { return -span_; }
  int hi() const { return span_; }
  std::size_t size() const { return static_cast<std::size_t>(2 * span_ + 1); }
  double resolution() const { return 1.0 / ((1 << bits_) - 1); }

  bool contains(int level) const { return level >= -span_ && level <= span_; }
  std::size_t index(int level) const {
    return static_cast<std::size_t>(level + span_);
  }
  int level(std::size_t index) const { return static_cast<int>(index) - span_; }
  double value(std::size_t index) const { return level(index) * resolution(); }

 private:
  int k_;
  int bits_;
  int span_;
};

// Half-open level interval [lo, hi); empty when lo >= hi.
struct LevelInterval {
  int lo = 0;
  int hi = 0;
  bool empty() const { return lo >= hi; }
  bool contains(int level) const { return level >= lo && level < hi; }
};

// Interval of prefix sums for which adding the target flips the utility,
// for subsets smaller than K: [-w~_i, 0) when the target's label matches the
// query, [0, -w~_i) otherwise.
LevelInterval SmallSubsetInterval(int target_signed_level, bool target_matches);

// Same for subsets of size >= K whose K-th nearest member (the one displaced
// by the target) has signed level `displaced`: [-w~_i, -w~_m) when the target
// matches the query, [-w~_m, -w~_i) otherwise.
LevelInterval DisplacementInterval(int target_signed_level, int displaced,
                                   bool target_matches);

// Materialized F_i[m, l, s] for all positions m and l = 1..K-1.
class CountTable {
 public:
  CountTable(std::size_t target, std::size_t n, SignedGrid grid);

  std::size_t target() const { return target_; }
  std::size_t n() const { return n_; }
  int k() const { return grid_.k(); }
  const SignedGrid& grid() const { return grid_; }

  // F_i[m, l, level]; zero for levels off the grid. Requires 1 <= l <= K-1.
  double at(std::size_t m, int l, int level) const;
  std::span<const double> row(std::size_t m, int l) const;
  std::span<double> mutable_row(std::size_t m, int l);

 private:
  std::size_t offset(std::size_t m, int l) const;

  std::size_t target_;
  std::size_t n_;
  SignedGrid grid_;
  std::vector<double> entries_;
};

// Builds F_i for l = 1..K-1 layer by layer: the layer-l row of m is the
// running prefix sum of layer l-1 over positions < m, shifted by w~_m.
// Throws ConfigError for K < 2.
CountTable BuildCountTable(std::size_t target, const SortedDataset& ds,
                           const DiscreteWeights& w, int k);

// G_{i,l} for l = 0..K-1: the number of size-l subsets whose utility is
// flipped by adding the target. G_{i,0} = 1 iff the target carries a nonzero
// weight and disagrees with the query label.
std::vector<double> ComputeG(const CountTable& table, const SortedDataset& ds,
                             const DiscreteWeights& w);

// First position m of the R stream: max(i + 1, K) in 0-based positions.
std::size_t RStreamStart(std::size_t target, int k);

// R_{i,m} for m = RStreamStart(i, K) .. N-1, maintained with a running prefix
// over the l = K-1 layer so each term costs O(grid).
std::vector<double> ComputeRStream(const CountTable& table,
                                   const SortedDataset& ds,
                                   const DiscreteWeights& w);

}  // namespace wknn

#endif  // WKNN_COUNT_TABLE_H_
