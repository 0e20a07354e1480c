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

// Exact WKNN-Shapley for binary classification in O(W K^2 N^2).
//
// For a target position i the value is
//
//   phi_i = sigma_i * [ (1/N) sum_{l<K} G_{i,l} / C(N-1, l)
//                     + sum_{m >= max(i+1, K)} R_{i,m} / ((m+1) C(m, K)) ]
//
// (positions 0-based), where sigma_i is 0 for a zero-weight point and +1/-1
// by whether its label matches the query. TargetSweep evaluates the bracket
// one position at a time, holding only running prefix sums of the count
// table, so memory per target is O(K * grid) and the bracket after processing
// positions 0..M-1 is exactly the M-truncated approximation.

#ifndef WKNN_EXACT_H_
#define WKNN_EXACT_H_

#include <cstddef>
#include <span>
#include <vector>

#include "wknn/count_table.h"
#include "wknn/dataset.h"
#include "wknn/scores.h"

namespace wknn {

struct EngineOptions {
  int workers = 1;
};

// Combinatorial weights shared by every target of one (N, K) problem.
class ShapleyCoefficients {
 public:
  ShapleyCoefficients(std::size_t n, int k);

  std::size_t n() const { return n_; }
  int k() const { return k_; }
  // 1 / (N * C(N-1, l)); zero when no size-l subset exists.
  double subset_weight(int l) const { return subset_weight_[static_cast<std::size_t>(l)]; }
  // 1 / ((m+1) * C(m, K)) for 0-based position m >= K.
  double displacement_weight(std::size_t m) const { return displacement_weight_[m]; }

 private:
  std::size_t n_;
  int k_;
  std::vector<double> subset_weight_;
  std::vector<double> displacement_weight_;
};

class TargetSweep {
 public:
  TargetSweep(std::size_t target, std::span<const int> signed_levels,
              bool target_matches, const SignedGrid& grid,
              const ShapleyCoefficients& coef);

  std::size_t target() const { return target_; }
  // Positions consumed so far; the next Advance() handles position processed().
  std::size_t processed() const { return processed_; }
  bool done() const { return processed_ >= signed_levels_.size(); }

  // +1, -1 or 0 (zero-weight target).
  double sign() const { return sign_; }

  // Consumes the next position and returns the growth of the unsigned
  // bracket. Every increment is non-negative.
  double Advance();

  // Unsigned bracket accumulated so far; value() = sign() * bracket().
  double bracket() const { return bracket_; }
  double value() const { return sign_ * bracket_; }

  // G_{i,l} restricted to subsets inside the processed prefix.
  std::span<const double> partial_g() const { return g_; }

 private:
  std::size_t target_;
  std::span<const int> signed_levels_;
  bool matches_;
  const SignedGrid* grid_;
  const ShapleyCoefficients* coef_;
  double sign_;
  LevelInterval small_interval_;
  std::size_t r_start_;
  std::size_t processed_ = 0;
  double bracket_ = 0.0;
  std::vector<double> g_;
  // prefix_[l-1][s] = sum over processed t != target of F_i[t, l, s].
  std::vector<std::vector<double>> prefix_;
};

// Throws ConfigError unless the labels present (query included) number at
// most two.
void RequireBinary(const SortedDataset& ds);

// Exact values by sorted position.
std::vector<double> ExactShapleyByPosition(const SortedDataset& ds,
                                           const DiscreteWeights& w, int k,
                                           const EngineOptions& options = {});

// Exact values indexed by orig_index. Throws ConfigError for K < 1 or for
// multi-class input (see multiclass.h).
ShapleyScores ExactShapley(const SortedDataset& ds, const DiscreteWeights& w,
                           int k, const EngineOptions& options = {});

}  // namespace wknn

#endif  // WKNN_EXACT_H_
