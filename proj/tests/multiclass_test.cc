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

#include "wknn/multiclass.h"

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

TEST(BuildClassPairTest, BinaryPairIsWholeDataset) {
  std::mt19937_64 rng(61);
  const auto inst = RandomInstance(rng, 10, 2);
  const int other = 1 - inst.ds.query().label;
  const auto pair = BuildClassPair(inst.ds, inst.w, other);
  ASSERT_EQ(pair.data.size(), 10u);
  for (std::size_t p = 0; p < 10; ++p) {
    EXPECT_EQ(pair.source_position[p], p);
    EXPECT_EQ(pair.weights.level(p), inst.w.level(p));
  }
}

TEST(BuildClassPairTest, Errors) {
  std::mt19937_64 rng(62);
  const auto inst = RandomInstance(rng, 6, 2, 3);
  EXPECT_THROW(BuildClassPair(inst.ds, inst.w, inst.ds.query().label), ConfigError);
  EXPECT_THROW(BuildClassPair(inst.ds, inst.w, 3), ConfigError);
}

TEST(BuildClassPairTest, MissingClassLeavesQueryLabel) {
  std::vector<LabeledPoint> points = {{{1.0}, 0, 0}, {{2.0}, 1, 1}, {{3.0}, 0, 2}};
  const auto ds = SortByDistance(points, {{0.0}, 0}, Metric::kEuclidean, 3);
  const auto w = Discretize(std::vector<double>{1.0, 0.8, 0.5}, 2);
  const auto pair = BuildClassPair(ds, w, 2);
  ASSERT_EQ(pair.data.size(), 2u);
  EXPECT_EQ(pair.data.label(0), 0);
  EXPECT_EQ(pair.data.label(1), 0);
}

TEST(BuildClassPairTest, CoverageCounts) {
  std::mt19937_64 rng(63);
  for (int t = 0; t < 10; ++t) {
    const auto inst = RandomInstance(rng, 9, 2, 3);
    std::vector<int> seen(9, 0);
    for (int c = 0; c < 3; ++c) {
      if (c == inst.ds.query().label) continue;
      const auto pair = BuildClassPair(inst.ds, inst.w, c);
      for (std::size_t p = 1; p < pair.data.size(); ++p) {
        EXPECT_LT(pair.source_position[p - 1], pair.source_position[p]);
      }
      for (std::size_t pos : pair.source_position) ++seen[pos];
    }
    for (std::size_t p = 0; p < 9; ++p) {
      EXPECT_EQ(seen[p], inst.ds.matches_query(p) ? 2 : 1);
    }
  }
}

TEST(MulticlassShapleyTest, BinaryIsBitIdentical) {
  std::mt19937_64 rng(64);
  for (int t = 0; t < 10; ++t) {
    const auto inst = RandomInstance(rng, 15, 3);
    EXPECT_EQ(MulticlassShapley(inst.ds, inst.w, 3, MulticlassMethod::Exact()).values,
              ExactShapley(inst.ds, inst.w, 3).values);
    const auto cfg = ApproxConfig::Fixed(6);
    const auto a = MulticlassShapley(inst.ds, inst.w, 3, MulticlassMethod::Approx(cfg));
    const auto b = ApproxShapley(inst.ds, inst.w, 3, cfg);
    EXPECT_EQ(a.values, b.values);
    EXPECT_EQ(*a.eps, b.eps);
  }
}

TEST(MulticlassShapleyTest, MatchesPairwiseOracle) {
  std::mt19937_64 rng(65);
  double worst = 0.0;
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 3 + rng() % 7;
    const int k = 1 + static_cast<int>(rng() % 4);
    const auto inst = RandomInstance(rng, n, 1 + static_cast<int>(rng() % 3), 3);
    const auto scores = MulticlassShapley(inst.ds, inst.w, k, MulticlassMethod::Exact());
    const auto oracle = EnumerateShapley(
        n, [&](SubsetMask m) { return UtilityVtilde(m, inst.ds, inst.w, k); });
    for (std::size_t p = 0; p < n; ++p) {
      worst = std::max(worst,
                       std::fabs(scores.values[inst.ds.orig_index(p)] - oracle[p]));
    }
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(MulticlassShapleyTest, ApproxIntervalsContainExact) {
  std::mt19937_64 rng(66);
  for (int t = 0; t < 10; ++t) {
    const auto inst = RandomInstance(rng, 12, 2, 3);
    const auto exact = MulticlassShapley(inst.ds, inst.w, 2, MulticlassMethod::Exact());
    const auto approx = MulticlassShapley(inst.ds, inst.w, 2,
                                          MulticlassMethod::Approx(ApproxConfig::Fixed(4)));
    ASSERT_TRUE(approx.intervals.has_value());
    for (std::size_t j = 0; j < 12; ++j) {
      EXPECT_GE(exact.values[j], (*approx.intervals)[j].lower - 1e-12);
      EXPECT_LE(exact.values[j], (*approx.intervals)[j].upper + 1e-12);
    }
  }
}

TEST(MulticlassShapleyTest, SinglePairPointIsScaled) {
  std::mt19937_64 rng(67);
  const auto inst = RandomInstance(rng, 9, 2, 3);
  const auto scores = MulticlassShapley(inst.ds, inst.w, 2, MulticlassMethod::Exact());
  for (int c = 0; c < 3; ++c) {
    if (c == inst.ds.query().label) continue;
    const auto pair = BuildClassPair(inst.ds, inst.w, c);
    const auto binary = ExactShapley(pair.data, pair.weights, 2);
    for (std::size_t p = 0; p < pair.data.size(); ++p) {
      if (pair.data.label(p) != c) continue;
      const std::size_t j = pair.data.orig_index(p);
      EXPECT_DOUBLE_EQ(scores.values[j], 0.5 * binary.values[j]);
    }
  }
}

TEST(UtilityVtildeTest, ReducesToBinary) {
  std::mt19937_64 rng(68);
  const auto inst = RandomInstance(rng, 8, 2);
  for (SubsetMask m = 0; m < (1u << 8); ++m) {
    EXPECT_EQ(UtilityVtilde(m, inst.ds, inst.w, 3),
              UtilityMulticlass(m, inst.ds, inst.w, {3, 2}));
  }
}

TEST(UtilityVtildeTest, HandEvaluation) {
  // Query label 0, K = 2. Members by distance: 1, 2, 1, 0, 2 with weights
  // 1, 6/7, 5/7, 4/7, 3/7.
  std::vector<LabeledPoint> points = {{{1.0}, 1, 0}, {{2.0}, 2, 1}, {{3.0}, 1, 2},
                                      {{4.0}, 0, 3}, {{5.0}, 2, 4}};
  const auto ds = SortByDistance(points, {{0.0}, 0}, Metric::kEuclidean, 3);
  const auto w = Discretize(std::vector<double>{1.0, 6.0 / 7, 5.0 / 7, 4.0 / 7, 3.0 / 7}, 3);
  const std::vector<std::size_t> all = {0, 1, 2, 3, 4};
  // Pair {0,1}: the two nearest are both labelled 1, wrong. Pair {0,2}: the
  // two nearest carry 6/7 for label 2 and 4/7 for label 0, wrong.
  EXPECT_EQ(UtilityVtilde(all, ds, w, 2), 0.0);
  const std::vector<std::size_t> some = {1, 3, 4};
  // Pair {0,1} keeps only the label-0 point, right. Pair {0,2} is wrong as
  // above.
  EXPECT_EQ(UtilityVtilde(some, ds, w, 2), 0.5);
  EXPECT_EQ(UtilityVtilde(std::span<const std::size_t>{}, ds, w, 2), 1.0);
}

}  // namespace
}  // namespace wknn
