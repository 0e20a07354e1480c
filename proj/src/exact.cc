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

#include <algorithm>
#include <set>

#include "wknn/errors.h"
#include "wknn/numeric.h"
#include "wknn/parallel.h"

namespace wknn {

ShapleyCoefficients::ShapleyCoefficients(std::size_t n, int k) : n_(n), k_(k) {
  if (k < 1) throw ConfigError("K must be at least 1");
  const auto big_n = static_cast<std::int64_t>(n);
  subset_weight_.assign(static_cast<std::size_t>(k), 0.0);
  for (int l = 0; l < k; ++l) {
    if (l <= big_n - 1) {
      subset_weight_[static_cast<std::size_t>(l)] =
          1.0 / (static_cast<double>(n) * Binomial(big_n - 1, l));
    }
  }
  displacement_weight_.assign(n, 0.0);
  for (std::size_t m = static_cast<std::size_t>(k); m < n; ++m) {
    const auto mm = static_cast<std::int64_t>(m);
    displacement_weight_[m] =
        1.0 / (static_cast<double>(m + 1) * Binomial(mm, k));
  }
}

TargetSweep::TargetSweep(std::size_t target, std::span<const int> signed_levels,
                         bool target_matches, const SignedGrid& grid,
                         const ShapleyCoefficients& coef)
    : target_(target),
      signed_levels_(signed_levels),
      matches_(target_matches),
      grid_(&grid),
      coef_(&coef),
      r_start_(RStreamStart(target, grid.k())),
      g_(static_cast<std::size_t>(grid.k()), 0.0) {
  const int level = signed_levels_[target_];
  sign_ = level == 0 ? 0.0 : (matches_ ? 1.0 : -1.0);
  small_interval_ = SmallSubsetInterval(level, matches_);
  if (sign_ == 0.0) return;
  if (!matches_) {
    g_[0] = 1.0;
    bracket_ = coef_->subset_weight(0);
  }
  prefix_.assign(static_cast<std::size_t>(grid.k() - 1),
                 std::vector<double>(grid.size(), 0.0));
}

double TargetSweep::Advance() {
  const std::size_t m = processed_++;
  // A zero-weight target never changes the utility.
  if (sign_ == 0.0) return 0.0;

  const SignedGrid& grid = *grid_;
  const int k = grid.k();
  const int step = (1 << grid.bits()) - 1;
  const int level_m = signed_levels_[m];
  double increment = 0.0;

  if (m >= r_start_) {
    const LevelInterval interval =
        DisplacementInterval(signed_levels_[target_], level_m, matches_);
    double r = 0.0;
    if (k == 1) {
      // The only size-0 prefix is the empty set, whose sum is 0.
      r = interval.contains(0) ? 1.0 : 0.0;
    } else {
      const auto& top = prefix_[static_cast<std::size_t>(k - 2)];
      const int lo = std::max(interval.lo, grid.lo());
      const int hi = std::min(interval.hi, grid.hi() + 1);
      for (int s = lo; s < hi; ++s) r += top[grid.index(s)];
    }
    increment += r * coef_->displacement_weight(m);
  }

  if (m != target_ && k >= 2) {
    // Layer l row of m is layer l-1's prefix shifted by w~_m. Walk l downward
    // so each layer still reads the prefix over positions < m.
    for (int l = k - 1; l >= 2; --l) {
      const auto& src = prefix_[static_cast<std::size_t>(l - 2)];
      auto& dst = prefix_[static_cast<std::size_t>(l - 1)];
      const int support = (l - 1) * step;

      const int lo = std::max(small_interval_.lo - level_m, -support);
      const int hi = std::min(small_interval_.hi - level_m, support + 1);
      double g = 0.0;
      for (int u = lo; u < hi; ++u) g += src[grid.index(u)];
      g_[static_cast<std::size_t>(l)] += g;
      increment += g * coef_->subset_weight(l);

      const double* from = src.data() + grid.index(-support);
      double* to = dst.data() + grid.index(-support + level_m);
      const int count = 2 * support + 1;
      for (int u = 0; u < count; ++u) to[u] += from[u];
    }
    if (small_interval_.contains(level_m)) {
      g_[1] += 1.0;
      increment += coef_->subset_weight(1);
    }
    prefix_[0][grid.index(level_m)] += 1.0;
  }

  bracket_ += increment;
  return increment;
}

void RequireBinary(const SortedDataset& ds) {
  std::set<int> labels{ds.query().label};
  for (const auto& p : ds.points()) labels.insert(p.label);
  if (labels.size() > 2) {
    throw ConfigError(
        "binary engine received more than two labels; use the multi-class "
        "reduction");
  }
}

std::vector<double> ExactShapleyByPosition(const SortedDataset& ds,
                                           const DiscreteWeights& w, int k,
                                           const EngineOptions& options) {
  if (k < 1) throw ConfigError("K must be at least 1");
  RequireBinary(ds);
  const std::size_t n = ds.size();
  const auto signed_levels = w.SignedLevels(ds);
  const SignedGrid grid(k, w.bits());
  const ShapleyCoefficients coef(n, k);
  std::vector<double> values(n, 0.0);
  ParallelFor(n, options.workers, [&](std::size_t i) {
    TargetSweep sweep(i, signed_levels, ds.matches_query(i), grid, coef);
    if (sweep.sign() == 0.0) return;
    while (!sweep.done()) sweep.Advance();
    values[i] = sweep.value();
  });
  return values;
}

ShapleyScores ExactShapley(const SortedDataset& ds, const DiscreteWeights& w,
                           int k, const EngineOptions& options) {
  return ScatterToOriginal(ds, ExactShapleyByPosition(ds, w, k, options),
                           Method::kExact);
}

}  // namespace wknn
