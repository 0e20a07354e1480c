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

#include "wknn/unweighted.h"

#include <algorithm>
#include <bit>

#include "wknn/errors.h"

namespace wknn {

ShapleyScores UnweightedScores::ToScores() const {
  ShapleyScores s;
  s.method = Method::kUnweightedSoft;
  s.values = values;
  return s;
}

UnweightedScores UnweightedKnnShapley(const SortedDataset& ds, int k,
                                      int num_classes) {
  if (k < 1) throw ConfigError("K must be at least 1");
  if (num_classes < 2) throw ConfigError("need at least 2 classes");
  const std::size_t n = ds.size();
  std::vector<double> phi(n, 0.0);
  if (n > 0) {
    const double big_n = static_cast<double>(n);
    const double big_k = static_cast<double>(k);
    const auto match = [&](std::size_t pos) {
      return ds.matches_query(pos) ? 1.0 : 0.0;
    };
    const std::size_t kn = std::min(static_cast<std::size_t>(k), n);

    // Farthest point.
    double last = (match(n - 1) - 1.0 / num_classes) / big_n;
    if (n >= 2) {
      double matches_before = 0.0;
      for (std::size_t pos = 0; pos + 1 < n; ++pos) matches_before += match(pos);
      double harmonic_tail = 0.0;
      for (std::size_t j = 1; j + 1 <= kn; ++j) {
        harmonic_tail += 1.0 / static_cast<double>(j + 1);
      }
      last += (match(n - 1) - matches_before / (big_n - 1.0)) * harmonic_tail /
              big_n;
    }
    phi[n - 1] = last;

    double harmonic = 0.0;
    for (std::size_t j = 1; j <= kn; ++j) harmonic += 1.0 / static_cast<double>(j);
    // With fewer than K points every coalition is "short"; the rank
    // correction then uses min(K, N) in place of K.
    const double k_eff = std::min(big_k, big_n);
    for (std::size_t pos = n - 1; pos-- > 0;) {
      const double i = static_cast<double>(pos + 1);  // 1-based rank
      const double diff = match(pos) - match(pos + 1);
      const double bracket =
          harmonic + (std::min(i, k_eff) * (big_n - 1.0) / i - k_eff) / k_eff;
      phi[pos] = phi[pos + 1] + diff / (big_n - 1.0) * bracket;
    }
  }
  UnweightedScores out;
  out.values = ScatterToOriginal(ds, phi, Method::kUnweightedSoft).values;
  out.num_classes = num_classes;
  return out;
}

namespace {

template <typename ForEachMember>
double SoftUtility(ForEachMember for_each_member, const SortedDataset& ds,
                   int k, int num_classes) {
  if (k < 1) throw ConfigError("K must be at least 1");
  if (num_classes < 2) throw ConfigError("need at least 2 classes");
  int taken = 0;
  int matches = 0;
  for_each_member([&](std::size_t pos) {
    if (taken >= k) return;
    ++taken;
    if (ds.matches_query(pos)) ++matches;
  });
  if (taken == 0) return 1.0 / num_classes;
  return static_cast<double>(matches) / taken;
}

}  // namespace

double UtilitySoftUnweighted(std::span<const std::size_t> members,
                             const SortedDataset& ds, int k, int num_classes) {
  std::vector<std::size_t> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.back() >= ds.size()) {
    throw DataError("subset member out of range");
  }
  return SoftUtility(
      [&](auto&& visit) {
        for (std::size_t pos : sorted) visit(pos);
      },
      ds, k, num_classes);
}

double UtilitySoftUnweighted(SubsetMask mask, const SortedDataset& ds, int k,
                             int num_classes) {
  return SoftUtility(
      [&](auto&& visit) {
        for (SubsetMask rest = mask; rest != 0; rest &= rest - 1) {
          visit(static_cast<std::size_t>(std::countr_zero(rest)));
        }
      },
      ds, k, num_classes);
}

}  // namespace wknn
