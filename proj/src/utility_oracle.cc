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

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "wknn/errors.h"
#include "wknn/numeric.h"

namespace wknn {
namespace {

void CheckConfig(const OracleConfig& cfg) {
  if (cfg.k < 1) throw ConfigError("K must be at least 1");
  if (cfg.num_classes < 2) throw ConfigError("need at least 2 classes");
}

// Visits the min(K, |S|) nearest members in order; `next` yields positions
// in ascending order and returns false when exhausted.
template <typename NextMember>
int HardUtility(NextMember next, const SortedDataset& ds,
                const DiscreteWeights& w, const OracleConfig& cfg) {
  CheckConfig(cfg);
  std::vector<long long> class_sum(static_cast<std::size_t>(cfg.num_classes), 0);
  std::size_t pos = 0;
  for (int taken = 0; taken < cfg.k && next(pos); ++taken) {
    const int label = ds.label(pos);
    if (label >= cfg.num_classes) throw DataError("label exceeds class count");
    class_sum[static_cast<std::size_t>(label)] += w.level(pos);
  }
  const long long best = *std::max_element(class_sum.begin(), class_sum.end());
  return class_sum[static_cast<std::size_t>(ds.query().label)] == best ? 1 : 0;
}

std::vector<std::size_t> SortedMembers(std::span<const std::size_t> members,
                                       std::size_t n) {
  std::vector<std::size_t> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DataError("subset members must be distinct");
  }
  if (!sorted.empty() && sorted.back() >= n) {
    throw DataError("subset member out of range");
  }
  return sorted;
}

}  // namespace

int UtilityMulticlass(std::span<const std::size_t> members,
                      const SortedDataset& ds, const DiscreteWeights& w,
                      const OracleConfig& cfg) {
  const auto sorted = SortedMembers(members, ds.size());
  std::size_t k = 0;
  return HardUtility(
      [&](std::size_t& pos) {
        if (k >= sorted.size()) return false;
        pos = sorted[k++];
        return true;
      },
      ds, w, cfg);
}

int UtilityMulticlass(SubsetMask mask, const SortedDataset& ds,
                      const DiscreteWeights& w, const OracleConfig& cfg) {
  return HardUtility(
      [&](std::size_t& pos) {
        if (mask == 0) return false;
        pos = static_cast<std::size_t>(std::countr_zero(mask));
        mask &= mask - 1;
        return true;
      },
      ds, w, cfg);
}

int UtilityBinary(std::span<const std::size_t> members, const SortedDataset& ds,
                  const DiscreteWeights& w, const OracleConfig& cfg) {
  CheckConfig(cfg);
  if (cfg.num_classes > 2) {
    throw ConfigError("binary utility called with more than two classes");
  }
  const auto sorted = SortedMembers(members, ds.size());
  const std::size_t take =
      std::min(sorted.size(), static_cast<std::size_t>(cfg.k));
  long long signed_sum = 0;
  for (std::size_t j = 0; j < take; ++j) {
    const std::size_t pos = sorted[j];
    signed_sum += ds.matches_query(pos) ? w.level(pos) : -w.level(pos);
  }
  return signed_sum >= 0 ? 1 : 0;
}

std::vector<double> EnumerateShapley(
    std::size_t n, const std::function<double(SubsetMask)>& utility) {
  if (n > kMaxOracleSize) {
    throw ConfigError("enumeration oracle limited to " +
                      std::to_string(kMaxOracleSize) + " points, got " +
                      std::to_string(n));
  }
  const SubsetMask full = n == 0 ? 0 : (SubsetMask{1} << n) - 1;
  std::vector<double> v(static_cast<std::size_t>(full) + 1);
  for (SubsetMask mask = 0;; ++mask) {
    v[mask] = utility(mask);
    if (mask == full) break;
  }

  std::vector<double> phi(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const SubsetMask bit = SubsetMask{1} << i;
    std::vector<CompensatedSum> by_size(n);
    for (SubsetMask mask = 0;; ++mask) {
      if ((mask & bit) == 0) {
        by_size[static_cast<std::size_t>(std::popcount(mask))].Add(
            v[mask | bit] - v[mask]);
      }
      if (mask == full) break;
    }
    CompensatedSum total;
    for (std::size_t k = 0; k < n; ++k) {
      total.Add(by_size[k].Value() /
                (static_cast<double>(n) *
                 Binomial(static_cast<std::int64_t>(n) - 1,
                          static_cast<std::int64_t>(k))));
    }
    phi[i] = total.Value();
  }
  return phi;
}

ShapleyScores BruteForceShapley(const SortedDataset& ds,
                                const DiscreteWeights& w,
                                const OracleConfig& cfg) {
  CheckConfig(cfg);
  const auto phi = EnumerateShapley(ds.size(), [&](SubsetMask mask) {
    return static_cast<double>(UtilityMulticlass(mask, ds, w, cfg));
  });
  return ScatterToOriginal(ds, phi, Method::kOracle);
}

std::size_t MonteCarloPermutations(std::size_t n, double epsilon, double delta) {
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must be in (0, 1)");
  if (n == 0) return 0;
  const double t = 2.0 / (epsilon * epsilon) *
                   std::log(2.0 * static_cast<double>(n) / delta);
  return static_cast<std::size_t>(std::max(1.0, std::ceil(t)));
}

std::vector<double> PermutationSampleShapley(
    std::size_t n, std::size_t permutations, std::uint64_t seed,
    const std::function<double(const std::vector<bool>&)>& utility) {
  std::vector<double> phi(n, 0.0);
  if (n == 0 || permutations == 0) return phi;
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(n);
  std::vector<CompensatedSum> sums(n);
  std::vector<bool> member(n);
  const double empty_value = utility(member);
  for (std::size_t t = 0; t < permutations; ++t) {
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t k = n - 1; k > 0; --k) {
      std::uniform_int_distribution<std::size_t> pick(0, k);
      std::swap(order[k], order[pick(rng)]);
    }
    std::fill(member.begin(), member.end(), false);
    double previous = empty_value;
    for (std::size_t pos : order) {
      member[pos] = true;
      const double current = utility(member);
      sums[pos].Add(current - previous);
      previous = current;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    phi[k] = sums[k].Value() / static_cast<double>(permutations);
  }
  return phi;
}

ShapleyScores MonteCarloShapley(const SortedDataset& ds,
                                const DiscreteWeights& w,
                                const OracleConfig& cfg, double epsilon,
                                double delta, std::uint64_t seed) {
  CheckConfig(cfg);
  const std::size_t n = ds.size();
  const std::size_t permutations = MonteCarloPermutations(n, epsilon, delta);
  const auto phi = PermutationSampleShapley(
      n, permutations, seed, [&](const std::vector<bool>& member) {
        std::size_t cursor = 0;
        return static_cast<double>(HardUtility(
            [&](std::size_t& pos) {
              while (cursor < member.size() && !member[cursor]) ++cursor;
              if (cursor >= member.size()) return false;
              pos = cursor++;
              return true;
            },
            ds, w, cfg));
      });
  return ScatterToOriginal(ds, phi, Method::kMonteCarlo);
}

}  // namespace wknn
