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

#include "wknn/utility_oracle.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "test_support.h"
#include "wknn/errors.h"

namespace wknn {
namespace {

using testing::RandomInstance;

// Two points on a line: the nearer labelled `near_label`, the farther
// `far_label`, both with weight 1. Query label 1.
testing::Instance Pair(int near_label, int far_label) {
  std::vector<LabeledPoint> points = {{{1.0}, near_label, 0},
                                      {{2.0}, far_label, 1}};
  return {SortByDistance(points, {{0.0}, 1}),
          Discretize(std::vector<double>{1.0, 1.0}, 3)};
}

TEST(UtilityTest, EmptySetIsCorrect) {
  const auto inst = Pair(1, 0);
  EXPECT_EQ(UtilityMulticlass(std::span<const std::size_t>{}, inst.ds, inst.w,
                              {3, 2}),
            1);
  EXPECT_EQ(UtilityBinary({}, inst.ds, inst.w, {3, 2}), 1);
}

TEST(UtilityTest, SinglePoints) {
  const auto inst = Pair(1, 0);
  const std::vector<std::size_t> match = {0};
  const std::vector<std::size_t> other = {1};
  EXPECT_EQ(UtilityMulticlass(match, inst.ds, inst.w, {3, 2}), 1);
  EXPECT_EQ(UtilityBinary(other, inst.ds, inst.w, {3, 2}), 0);
}

TEST(UtilityTest, TwoDogsOneCat) {
  // Query is a cat (0); the three nearest are dog, dog, cat.
  std::vector<LabeledPoint> points = {
      {{1.0}, 1, 0}, {{2.0}, 1, 1}, {{3.0}, 0, 2}, {{4.0}, 0, 3}};
  const auto ds = SortByDistance(points, {{0.0}, 0});
  const auto w = Discretize(std::vector<double>(4, 1.0), 2);
  const std::vector<std::size_t> s = {0, 1, 2};
  EXPECT_EQ(UtilityMulticlass(s, ds, w, {3, 2}), 0);
  EXPECT_EQ(UtilityBinary(s, ds, w, {3, 2}), 0);
}

TEST(UtilityTest, BinaryRejectsMulticlass) {
  const auto inst = Pair(1, 0);
  EXPECT_THROW(UtilityBinary({}, inst.ds, inst.w, {3, 3}), ConfigError);
}

TEST(UtilityTest, BinaryAgreesWithMulticlassExhaustively) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 9;
    const int k = 1 + static_cast<int>(rng() % 5);
    const auto inst = RandomInstance(rng, n, 1 + static_cast<int>(rng() % 3));
    for (SubsetMask mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::size_t> members;
      for (std::size_t p = 0; p < n; ++p) {
        if (mask & (1u << p)) members.push_back(p);
      }
      ASSERT_EQ(UtilityBinary(members, inst.ds, inst.w, {k, 2}),
                UtilityMulticlass(members, inst.ds, inst.w, {k, 2}));
      ASSERT_EQ(UtilityMulticlass(mask, inst.ds, inst.w, {k, 2}),
                UtilityMulticlass(members, inst.ds, inst.w, {k, 2}));
    }
  }
}

TEST(UtilityTest, MonotoneInAddedLabel) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 3 + rng() % 7;
    const int k = 1 + static_cast<int>(rng() % 4);
    const auto inst = RandomInstance(rng, n, 2);
    for (SubsetMask mask = 0; mask < (1u << n); ++mask) {
      const int base = UtilityMulticlass(mask, inst.ds, inst.w, {k, 2});
      for (std::size_t p = 0; p < n; ++p) {
        if (mask & (1u << p)) continue;
        const int with = UtilityMulticlass(mask | (1u << p), inst.ds, inst.w, {k, 2});
        if (inst.ds.matches_query(p)) {
          EXPECT_GE(with, base);
        } else {
          EXPECT_LE(with, base);
        }
      }
    }
  }
}

TEST(BruteForceTest, SinglePoint) {
  std::vector<LabeledPoint> points = {{{1.0}, 1, 0}};
  const auto w = Discretize(std::vector<double>{1.0}, 2);
  const auto same = SortByDistance(points, {{0.0}, 1});
  EXPECT_EQ(BruteForceShapley(same, w, {1, 2}).values[0], 0.0);
  const auto other = SortByDistance(points, {{0.0}, 0});
  EXPECT_EQ(BruteForceShapley(other, w, {1, 2}).values[0], -1.0);
}

TEST(BruteForceTest, TwoPointsOneNeighbour) {
  const auto inst = Pair(1, 0);
  const auto scores = BruteForceShapley(inst.ds, inst.w, {1, 2});
  EXPECT_DOUBLE_EQ(scores.values[0], 0.5);
  EXPECT_DOUBLE_EQ(scores.values[1], -0.5);
}

TEST(BruteForceTest, SizeGuard) {
  EXPECT_THROW(EnumerateShapley(21, [](SubsetMask) { return 0.0; }),
               ConfigError);
}

TEST(EnumerateShapleyTest, Axioms) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const std::size_t n = 6;
  std::vector<double> u1(1u << n), u2(1u << n);
  for (auto& x : u1) x = unit(rng);
  for (auto& x : u2) x = unit(rng);
  // Player 5 is null in both games; players 0 and 1 are symmetric in u1.
  for (SubsetMask m = 0; m < (1u << n); ++m) {
    if (m & (1u << 5)) {
      u1[m] = u1[m & ~(1u << 5)];
      u2[m] = u2[m & ~(1u << 5)];
    }
  }
  for (SubsetMask m = 0; m < (1u << n); ++m) {
    const bool a = m & 1u, b = m & 2u;
    if (a && !b) u1[m] = u1[(m & ~1u) | 2u];
  }
  const auto phi1 = EnumerateShapley(n, [&](SubsetMask m) { return u1[m]; });
  const auto phi2 = EnumerateShapley(n, [&](SubsetMask m) { return u2[m]; });
  const auto phi12 = EnumerateShapley(
      n, [&](SubsetMask m) { return 2.0 * u1[m] - 3.0 * u2[m]; });
  double total = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    total += phi1[p];
    EXPECT_NEAR(phi12[p], 2.0 * phi1[p] - 3.0 * phi2[p], 1e-12);
  }
  EXPECT_NEAR(total, u1[(1u << n) - 1] - u1[0], 1e-12);
  EXPECT_NEAR(phi1[5], 0.0, 1e-15);
  EXPECT_NEAR(phi2[5], 0.0, 1e-15);
  EXPECT_NEAR(phi1[0], phi1[1], 1e-12);
}

TEST(MonteCarloTest, PermutationCount) {
  EXPECT_EQ(MonteCarloPermutations(1, 2.0, 0.5), 1u);
  EXPECT_EQ(MonteCarloPermutations(8, 0.1, 0.1),
            static_cast<std::size_t>(std::ceil(200.0 * std::log(160.0))));
}

TEST(MonteCarloTest, SinglePermutationGivesMarginal) {
  std::vector<LabeledPoint> points = {{{1.0}, 0, 0}};
  const auto ds = SortByDistance(points, {{0.0}, 1});
  const auto w = Discretize(std::vector<double>{1.0}, 2);
  const auto mc = MonteCarloShapley(ds, w, {1, 2}, 2.0, 0.5, 4);
  EXPECT_EQ(mc.values[0], -1.0);
}

TEST(MonteCarloTest, DeterministicBySeed) {
  std::mt19937_64 rng(24);
  const auto inst = RandomInstance(rng, 8, 3);
  const auto a = MonteCarloShapley(inst.ds, inst.w, {3, 2}, 0.2, 0.1, 77);
  const auto b = MonteCarloShapley(inst.ds, inst.w, {3, 2}, 0.2, 0.1, 77);
  EXPECT_EQ(a.values, b.values);
}

TEST(MonteCarloTest, CloseToOracle) {
  std::mt19937_64 rng(25);
  const auto inst = RandomInstance(rng, 8, 3);
  const auto oracle = BruteForceShapley(inst.ds, inst.w, {3, 2});
  const auto mc = MonteCarloShapley(inst.ds, inst.w, {3, 2}, 0.1, 0.1, 3);
  for (std::size_t j = 0; j < 8; ++j) {
    EXPECT_NEAR(mc.values[j], oracle.values[j], 0.1);
  }
}

}  // namespace
}  // namespace wknn
