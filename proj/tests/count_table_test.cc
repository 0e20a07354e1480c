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

#include "wknn/count_table.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "test_support.h"
#include "wknn/errors.h"
#include "wknn/numeric.h"
#include "wknn/utility_oracle.h"

namespace wknn {
namespace {

using testing::CountSubsets;
using testing::RandomInstance;

TEST(SignedGridTest, Layout) {
  const SignedGrid grid(4, 3);
  EXPECT_EQ(grid.lo(), -21);
  EXPECT_EQ(grid.hi(), 21);
  EXPECT_EQ(grid.size(), 43u);
  EXPECT_DOUBLE_EQ(grid.resolution(), 1.0 / 7.0);
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    EXPECT_EQ(grid.index(grid.level(idx)), idx);
  }
  EXPECT_DOUBLE_EQ(grid.value(0), -3.0);
  EXPECT_DOUBLE_EQ(grid.value(grid.size() - 1), 3.0);
}

TEST(IntervalTest, SmallSubset) {
  const auto match = SmallSubsetInterval(5, true);
  EXPECT_EQ(match.lo, -5);
  EXPECT_EQ(match.hi, 0);
  const auto other = SmallSubsetInterval(-5, false);
  EXPECT_EQ(other.lo, 0);
  EXPECT_EQ(other.hi, 5);
  EXPECT_TRUE(SmallSubsetInterval(0, true).empty());
  EXPECT_TRUE(SmallSubsetInterval(0, false).empty());
}

TEST(IntervalTest, DisplacementEmptyWhenEqual) {
  EXPECT_TRUE(DisplacementInterval(3, 3, true).empty());
  EXPECT_TRUE(DisplacementInterval(-3, -3, false).empty());
  const auto r = DisplacementInterval(4, -2, true);
  EXPECT_EQ(r.lo, -4);
  EXPECT_EQ(r.hi, 2);
}

TEST(CountTableTest, TwoPoints) {
  std::vector<LabeledPoint> points = {{{1.0}, 1, 0}, {{2.0}, 0, 1}};
  const auto ds = SortByDistance(points, {{0.0}, 1});
  const auto w = Discretize(std::vector<double>{1.0, 0.5}, 2);
  const auto table = BuildCountTable(0, ds, w, 2);
  const int w1 = w.SignedLevels(ds)[1];
  for (int s = table.grid().lo(); s <= table.grid().hi(); ++s) {
    EXPECT_EQ(table.at(1, 1, s), s == w1 ? 1.0 : 0.0);
    EXPECT_EQ(table.at(0, 1, s), 0.0);
  }
}

TEST(CountTableTest, RequiresTwoNeighbours) {
  std::mt19937_64 rng(1);
  const auto inst = RandomInstance(rng, 4, 2);
  EXPECT_THROW(BuildCountTable(0, inst.ds, inst.w, 1), ConfigError);
}

TEST(CountTableTest, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    const auto inst = RandomInstance(rng, 6, 1 + t % 3);
    const auto levels = inst.w.SignedLevels(inst.ds);
    for (std::size_t i = 0; i < 6; ++i) {
      const auto table = BuildCountTable(i, inst.ds, inst.w, 4);
      for (std::size_t m = 0; m < 6; ++m) {
        for (int l = 1; l <= 3; ++l) {
          double row_sum = 0.0;
          for (int s = table.grid().lo(); s <= table.grid().hi(); ++s) {
            ASSERT_EQ(table.at(m, l, s), CountSubsets(levels, i, m, l, s))
                << "i=" << i << " m=" << m << " l=" << l << " s=" << s;
            row_sum += table.at(m, l, s);
          }
          const std::int64_t below = static_cast<std::int64_t>(m) - (i < m ? 1 : 0);
          EXPECT_EQ(row_sum, m == i ? 0.0 : Binomial(below, l - 1));
        }
      }
    }
  }
}

TEST(ComputeGTest, ZeroWeightTarget) {
  std::vector<LabeledPoint> points = {{{1.0}, 1, 0}, {{2.0}, 0, 1}, {{3.0}, 1, 2}};
  const auto ds = SortByDistance(points, {{0.0}, 1});
  const auto w = Discretize(std::vector<double>{1.0, 0.6, 0.0}, 2);
  const auto g = ComputeG(BuildCountTable(2, ds, w, 3), ds, w);
  for (double x : g) EXPECT_EQ(x, 0.0);
}

TEST(ComputeGTest, OppositeLabelSingleton) {
  std::vector<LabeledPoint> points = {{{1.0}, 0, 0}, {{2.0}, 1, 1}};
  const auto ds = SortByDistance(points, {{0.0}, 1});
  const auto w = Discretize(std::vector<double>{1.0, 1.0}, 2);
  EXPECT_EQ(ComputeG(BuildCountTable(0, ds, w, 2), ds, w)[0], 1.0);
}

TEST(ComputeGTest, MatchesFlipCount) {
  std::mt19937_64 rng(32);
  const int k = 3;
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 6;
    const auto inst = RandomInstance(rng, n, 1 + t % 3);
    for (std::size_t i = 0; i < n; ++i) {
      const auto g = ComputeG(BuildCountTable(i, inst.ds, inst.w, k), inst.ds, inst.w);
      ASSERT_EQ(g.size(), static_cast<std::size_t>(k));
      std::vector<double> flips(k, 0.0);
      for (SubsetMask mask = 0; mask < (1u << n); ++mask) {
        if (mask & (1u << i)) continue;
        const int size = std::popcount(mask);
        if (size >= k) continue;
        const int before = UtilityMulticlass(mask, inst.ds, inst.w, {k, 2});
        const int after = UtilityMulticlass(mask | (1u << i), inst.ds, inst.w, {k, 2});
        if (before != after) flips[size] += 1.0;
      }
      for (int l = 0; l < k; ++l) EXPECT_EQ(g[l], flips[l]) << "i=" << i << " l=" << l;
    }
  }
}

TEST(ComputeRStreamTest, MatchesNaiveSummation) {
  std::mt19937_64 rng(33);
  const int k = 3;
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 7;
    const auto inst = RandomInstance(rng, n, 1 + t % 3);
    const auto levels = inst.w.SignedLevels(inst.ds);
    for (std::size_t i = 0; i < n; ++i) {
      const auto table = BuildCountTable(i, inst.ds, inst.w, k);
      const auto r = ComputeRStream(table, inst.ds, inst.w);
      const std::size_t start = RStreamStart(i, k);
      ASSERT_EQ(r.size(), start < n ? n - start : 0u);
      for (std::size_t m = start; m < n; ++m) {
        const auto interval =
            DisplacementInterval(levels[i], levels[m], inst.ds.matches_query(i));
        double naive = 0.0;
        for (std::size_t tpos = 0; tpos < m; ++tpos) {
          for (int s = interval.lo; s < interval.hi; ++s) {
            naive += table.at(tpos, k - 1, s);
          }
        }
        EXPECT_EQ(r[m - start], naive);
        EXPECT_GE(r[m - start], 0.0);
        EXPECT_LE(r[m - start], Binomial(static_cast<std::int64_t>(m) - 1, k - 1));
        if (levels[i] == levels[m]) {
          EXPECT_EQ(r[m - start], 0.0);
        }
      }
    }
  }
}

TEST(ComputeRStreamTest, LastTargetHasEmptyStream) {
  std::mt19937_64 rng(34);
  const auto inst = RandomInstance(rng, 5, 2);
  EXPECT_TRUE(ComputeRStream(BuildCountTable(4, inst.ds, inst.w, 3), inst.ds,
                             inst.w)
                  .empty());
}

}  // namespace
}  // namespace wknn
