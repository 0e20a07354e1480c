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

#include "wknn/exact.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "test_support.h"
#include "wknn/errors.h"
#include "wknn/utility_oracle.h"

namespace wknn {
namespace {

using testing::RandomInstance;

TEST(ExactShapleyTest, SingleMatchingPoint) {
  std::vector<LabeledPoint> points = {{{1.0}, 1, 0}};
  const auto ds = SortByDistance(points, {{0.0}, 1});
  const auto w = Discretize(std::vector<double>{1.0}, 3);
  EXPECT_EQ(ExactShapley(ds, w, 3).values[0], 0.0);
}

TEST(ExactShapleyTest, TwoPointsOneNeighbour) {
  std::vector<LabeledPoint> points = {{{1.0}, 1, 0}, {{2.0}, 0, 1}};
  const auto ds = SortByDistance(points, {{0.0}, 1});
  const auto w = Discretize(std::vector<double>{1.0, 1.0}, 3);
  const auto scores = ExactShapley(ds, w, 1);
  EXPECT_DOUBLE_EQ(scores.values[0], 0.5);
  EXPECT_DOUBLE_EQ(scores.values[1], -0.5);
}

TEST(ExactShapleyTest, MatchesOracle) {
  std::mt19937_64 rng(41);
  double worst = 0.0;
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 4 + rng() % 8;
    const int k = 1 + static_cast<int>(rng() % 5);
    const auto inst = RandomInstance(rng, n, 1 + static_cast<int>(rng() % 3));
    const auto exact = ExactShapley(inst.ds, inst.w, k);
    const auto oracle = BruteForceShapley(inst.ds, inst.w, {k, 2});
    for (std::size_t j = 0; j < n; ++j) {
      worst = std::max(worst, std::fabs(exact.values[j] - oracle.values[j]));
    }
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(ExactShapleyTest, SignEfficiencyAndNullPlayer) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 3 + rng() % 10;
    const int k = 1 + static_cast<int>(rng() % 5);
    const auto inst = RandomInstance(rng, n, 1 + static_cast<int>(rng() % 3));
    const auto phi = ExactShapleyByPosition(inst.ds, inst.w, k);
    double total = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      total += phi[p];
      if (inst.w.level(p) == 0) {
        EXPECT_EQ(phi[p], 0.0);
      }
      if (inst.ds.matches_query(p)) {
        EXPECT_GE(phi[p], 0.0);
      } else {
        EXPECT_LE(phi[p], 0.0);
      }
    }
    const SubsetMask all = (1u << n) - 1;
    const double gain = UtilityMulticlass(all, inst.ds, inst.w, {k, 2}) - 1.0;
    EXPECT_NEAR(total, gain, 1e-9);
  }
}

TEST(ExactShapleyTest, WithinLabelMonotonicity) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 5 + rng() % 40;
    const int k = 1 + static_cast<int>(rng() % 5);
    const auto inst = RandomInstance(rng, n, 1 + static_cast<int>(rng() % 4));
    const auto phi = ExactShapleyByPosition(inst.ds, inst.w, k);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (inst.ds.label(i) != inst.ds.label(j)) continue;
        if (inst.ds.matches_query(i)) {
          EXPECT_GE(phi[i], phi[j] - 1e-12);
        } else {
          EXPECT_LE(phi[i], phi[j] + 1e-12);
        }
      }
    }
  }
}

TEST(ExactShapleyTest, SymmetricDuplicates) {
  std::vector<LabeledPoint> points = {{{1.0}, 1, 0}, {{-2.0}, 0, 1},
                                      {{2.0}, 0, 2}, {{3.0}, 1, 3},
                                      {{-3.0}, 1, 4}, {{4.0}, 0, 5}};
  const auto ds = SortByDistance(points, {{0.0}, 1});
  const auto w = Discretize(std::vector<double>{1.0, 0.7, 0.7, 0.4, 0.4, 0.2}, 3);
  for (int k = 1; k <= 5; ++k) {
    const auto phi = ExactShapley(ds, w, k).values;
    EXPECT_NEAR(phi[1], phi[2], 1e-12);
    EXPECT_NEAR(phi[3], phi[4], 1e-12);
  }
}

TEST(ExactShapleyTest, UniformKernelIndependentOfBits) {
  std::mt19937_64 rng(44);
  const auto inst = RandomInstance(rng, 30, 3);
  const auto raw = AssignWeights(inst.ds, Kernel::kUniform).weights;
  const auto ref = ExactShapley(inst.ds, Discretize(raw, 1), 4).values;
  for (int bits = 2; bits <= 6; ++bits) {
    EXPECT_EQ(ExactShapley(inst.ds, Discretize(raw, bits), 4).values, ref);
  }
}

TEST(ExactShapleyTest, WorkerCountDoesNotChangeResult) {
  std::mt19937_64 rng(45);
  const auto inst = RandomInstance(rng, 80, 3);
  const auto one = ExactShapley(inst.ds, inst.w, 5, {1});
  const auto four = ExactShapley(inst.ds, inst.w, 5, {4});
  EXPECT_EQ(one.values, four.values);
}

TEST(ExactShapleyTest, RejectsMulticlassAndBadK) {
  std::mt19937_64 rng(46);
  const auto multi = RandomInstance(rng, 12, 2, 3);
  EXPECT_THROW(ExactShapley(multi.ds, multi.w, 3), ConfigError);
  const auto inst = RandomInstance(rng, 5, 2);
  EXPECT_THROW(ExactShapley(inst.ds, inst.w, 0), ConfigError);
}

TEST(AggregateTest, LinearInQueries) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::vector<LabeledPoint> points;
  for (std::size_t j = 0; j < 8; ++j) {
    points.push_back({{coord(rng), coord(rng)}, static_cast<int>(rng() % 2), j});
  }
  const int k = 3;
  std::vector<ShapleyScores> per_query;
  std::vector<SortedDataset> sorted;
  std::vector<DiscreteWeights> weights;
  for (int q = 0; q < 5; ++q) {
    const ValQuery query{{coord(rng), coord(rng)}, static_cast<int>(rng() % 2)};
    sorted.push_back(SortByDistance(points, query));
    weights.push_back(Discretize(AssignWeights(sorted.back(), Kernel::kRbf).weights, 3));
    per_query.push_back(ExactShapley(sorted.back(), weights.back(), k));
  }
  const auto total = AggregateOverValidation(per_query);

  // Oracle on the summed utility, with players indexed by orig_index.
  const auto oracle = EnumerateShapley(8, [&](SubsetMask by_orig) {
    double v = 0.0;
    for (std::size_t q = 0; q < sorted.size(); ++q) {
      SubsetMask by_pos = 0;
      for (std::size_t p = 0; p < 8; ++p) {
        if (by_orig & (1u << sorted[q].orig_index(p))) by_pos |= 1u << p;
      }
      v += UtilityMulticlass(by_pos, sorted[q], weights[q], {k, 2});
    }
    return v;
  });
  for (std::size_t j = 0; j < 8; ++j) EXPECT_NEAR(total.values[j], oracle[j], 1e-9);

  const std::vector<ShapleyScores> twice = {per_query[0], per_query[0]};
  const auto doubled = AggregateOverValidation(twice);
  for (std::size_t j = 0; j < 8; ++j) {
    EXPECT_EQ(doubled.values[j], 2.0 * per_query[0].values[j]);
  }
  EXPECT_EQ(AggregateOverValidation(std::span(per_query).first(1)).values,
            per_query[0].values);
}

TEST(AggregateTest, RejectsMismatchedSizes) {
  ShapleyScores a, b;
  a.values = {1.0, 2.0};
  b.values = {1.0};
  const std::vector<ShapleyScores> both = {a, b};
  EXPECT_THROW(AggregateOverValidation(both), DataError);
}

}  // namespace
}  // namespace wknn
