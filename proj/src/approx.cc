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

#include "wknn/approx.h"

#include <algorithm>
#include <cmath>

#include "wknn/errors.h"
#include "wknn/numeric.h"
#include "wknn/parallel.h"

namespace wknn {
namespace {

ApproxScores Package(const SortedDataset& ds, std::span<const double> by_position,
                     double eps, std::size_t mstar) {
  ApproxScores out;
  out.values = ScatterToOriginal(ds, by_position, Method::kApprox).values;
  out.eps = eps;
  out.mstar_used = mstar;
  out.intervals.assign(out.values.size(), Interval{});
  for (std::size_t pos = 0; pos < ds.size(); ++pos) {
    const double v = by_position[pos];
    out.intervals[ds.orig_index(pos)] =
        ds.matches_query(pos) ? Interval{v, v + eps} : Interval{v - eps, v};
  }
  return out;
}

double MedianNonzeroMagnitude(std::span<const TargetSweep> sweeps) {
  std::vector<double> magnitudes;
  magnitudes.reserve(sweeps.size());
  for (const auto& s : sweeps) {
    const double v = std::fabs(s.value());
    if (v > 0.0) magnitudes.push_back(v);
  }
  if (magnitudes.empty()) return 0.0;
  const std::size_t mid = magnitudes.size() / 2;
  std::nth_element(magnitudes.begin(), magnitudes.begin() + static_cast<std::ptrdiff_t>(mid),
                   magnitudes.end());
  if (magnitudes.size() % 2 == 1) return magnitudes[mid];
  const double upper = magnitudes[mid];
  const double lower =
      *std::max_element(magnitudes.begin(), magnitudes.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

}  // namespace

std::size_t MinMstar(std::size_t n, int k) {
  return std::min(n, static_cast<std::size_t>(k) + 1);
}

std::size_t ResolveMstar(const ApproxConfig& cfg, std::size_t n, int k) {
  switch (cfg.policy) {
    case ApproxConfig::Policy::kFixed:
      if (cfg.mstar < MinMstar(n, k) || cfg.mstar > n) {
        throw ConfigError("M* must lie in [K+1, N]");
      }
      return cfg.mstar;
    case ApproxConfig::Policy::kSqrtN: {
      const auto root =
          static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
      return std::min(n, std::max(static_cast<std::size_t>(k) + 1, root));
    }
    case ApproxConfig::Policy::kAdaptive:
      break;
  }
  throw ConfigError("adaptive M* has no static resolution");
}

double ErrorBound(std::size_t n, int k, std::size_t mstar) {
  if (k < 1) throw ConfigError("K must be at least 1");
  if (mstar < MinMstar(n, k) || mstar > n) {
    throw ConfigError("M* must lie in [K+1, N]");
  }
  if (mstar == n) return 0.0;
  const double big_k = static_cast<double>(k);
  CompensatedSum eps;
  for (std::size_t m = mstar + 1; m <= n; ++m) {
    const double dm = static_cast<double>(m);
    eps.Add(1.0 / (dm - big_k) - 1.0 / dm);
  }
  // C(N, l) / (N C(N-1, l)) = 1 / (N - l); the M* part goes through logs.
  const auto big_n = static_cast<std::int64_t>(n);
  const auto big_m = static_cast<std::int64_t>(mstar);
  for (std::int64_t l = 1; l <= k - 1; ++l) {
    const double kept = std::exp(LogBinomial(big_m, l) - std::log(static_cast<double>(n)) -
                                 LogBinomial(big_n - 1, l));
    eps.Add(1.0 / static_cast<double>(big_n - l) - kept);
  }
  return eps.Value();
}

std::size_t TieAwareMstar(const SortedDataset& ds, std::size_t mstar) {
  while (mstar > 0 && mstar < ds.size() &&
         ds.distance(mstar) == ds.distance(mstar - 1)) {
    ++mstar;
  }
  return mstar;
}

ShapleyScores ApproxScores::ToScores() const {
  ShapleyScores s;
  s.method = Method::kApprox;
  s.values = values;
  s.intervals = intervals;
  s.eps = eps;
  return s;
}

std::vector<double> ApproxShapleyByPosition(const SortedDataset& ds,
                                            const DiscreteWeights& w, int k,
                                            std::size_t mstar,
                                            const EngineOptions& options) {
  if (k < 1) throw ConfigError("K must be at least 1");
  RequireBinary(ds);
  const std::size_t n = ds.size();
  if (mstar < MinMstar(n, k) || mstar > n) {
    throw ConfigError("M* must lie in [K+1, N]");
  }
  mstar = TieAwareMstar(ds, mstar);
  const auto signed_levels = w.SignedLevels(ds);
  const SignedGrid grid(k, w.bits());
  const ShapleyCoefficients coef(n, k);
  std::vector<double> values(n, 0.0);
  ParallelFor(n, options.workers, [&](std::size_t i) {
    TargetSweep sweep(i, signed_levels, ds.matches_query(i), grid, coef);
    if (sweep.sign() == 0.0) return;
    while (sweep.processed() < mstar) sweep.Advance();
    values[i] = sweep.value();
  });
  return values;
}

ApproxScores ApproxShapley(const SortedDataset& ds, const DiscreteWeights& w,
                           int k, const ApproxConfig& cfg,
                           const EngineOptions& options) {
  if (cfg.policy == ApproxConfig::Policy::kAdaptive) {
    return AdaptiveMstar(ds, w, k, cfg.adaptive_ratio, options);
  }
  const std::size_t mstar = TieAwareMstar(ds, ResolveMstar(cfg, ds.size(), k));
  const auto values = ApproxShapleyByPosition(ds, w, k, mstar, options);
  return Package(ds, values, ErrorBound(ds.size(), k, mstar), mstar);
}

ApproxScores AdaptiveMstar(const SortedDataset& ds, const DiscreteWeights& w,
                           int k, double ratio, const EngineOptions& options,
                           const MstarObserver& observer) {
  if (k < 1) throw ConfigError("K must be at least 1");
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw ConfigError("adaptive ratio must be in (0, 1)");
  }
  RequireBinary(ds);
  const std::size_t n = ds.size();
  const auto signed_levels = w.SignedLevels(ds);
  const SignedGrid grid(k, w.bits());
  const ShapleyCoefficients coef(n, k);

  std::vector<TargetSweep> sweeps;
  sweeps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    sweeps.emplace_back(i, signed_levels, ds.matches_query(i), grid, coef);
  }
  std::vector<double> values(n, 0.0);
  auto advance_to = [&](std::size_t mstar) {
    ParallelFor(n, options.workers, [&](std::size_t i) {
      auto& sweep = sweeps[i];
      while (sweep.processed() < mstar) sweep.Advance();
      values[i] = sweep.value();
    });
  };

  std::size_t mstar = TieAwareMstar(ds, MinMstar(n, k));
  advance_to(mstar);
  while (true) {
    if (observer) {
      observer(mstar, ScatterToOriginal(ds, values, Method::kApprox).values);
    }
    const double eps = ErrorBound(n, k, mstar);
    const double median = MedianNonzeroMagnitude(sweeps);
    if (median > 0.0 && eps < ratio * median) {
      return Package(ds, values, eps, mstar);
    }
    if (mstar >= n) break;
    mstar = TieAwareMstar(ds, mstar + 1);
    advance_to(mstar);
  }
  ApproxScores exhausted = Package(ds, values, 0.0, n);
  exhausted.stop_rule_fired = false;
  return exhausted;
}

}  // namespace wknn
