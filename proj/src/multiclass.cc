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

#include <algorithm>
#include <bit>

#include "wknn/errors.h"

namespace wknn {

ClassPairSubset BuildClassPair(const SortedDataset& ds, const DiscreteWeights& w,
                               int c) {
  const int y = ds.query().label;
  if (c == y) throw ConfigError("pair class must differ from the query label");
  if (c < 0 || c >= ds.num_classes()) throw ConfigError("pair class out of range");
  if (w.size() != ds.size()) throw DataError("weights do not match dataset size");
  std::vector<bool> keep(ds.size());
  ClassPairSubset pair;
  pair.c = c;
  for (std::size_t pos = 0; pos < ds.size(); ++pos) {
    keep[pos] = ds.label(pos) == y || ds.label(pos) == c;
    if (keep[pos]) pair.source_position.push_back(pos);
  }
  pair.data = ds.Restrict(keep);
  pair.weights = w.Restrict(keep);
  return pair;
}

ShapleyScores MulticlassShapley(const SortedDataset& ds, const DiscreteWeights& w,
                                int k, const MulticlassMethod& method,
                                const EngineOptions& options) {
  auto solve = [&](const SortedDataset& data, const DiscreteWeights& weights) {
    if (method.approx) {
      return ApproxShapley(data, weights, k, method.approx_config, options)
          .ToScores();
    }
    return ExactShapley(data, weights, k, options);
  };

  const int classes = ds.num_classes();
  const int y = ds.query().label;
  if (classes == 2) return solve(ds, w);

  std::vector<ShapleyScores> per_class;
  for (int c = 0; c < classes; ++c) {
    if (c == y) continue;
    const ClassPairSubset pair = BuildClassPair(ds, w, c);
    per_class.push_back(solve(pair.data, pair.weights));
  }
  ShapleyScores total = AggregateOverValidation(per_class);
  const double scale = 1.0 / static_cast<double>(classes - 1);
  for (double& v : total.values) v *= scale;
  if (total.intervals) {
    for (auto& iv : *total.intervals) {
      iv.lower *= scale;
      iv.upper *= scale;
    }
    *total.eps *= scale;
  }
  total.method = method.approx ? Method::kApprox : Method::kExact;
  return total;
}

namespace {

template <typename ForEachMember>
double Vtilde(ForEachMember for_each_member, const SortedDataset& ds,
              const DiscreteWeights& w, int k) {
  if (k < 1) throw ConfigError("K must be at least 1");
  const int classes = ds.num_classes();
  const int y = ds.query().label;
  double total = 0.0;
  for (int c = 0; c < classes; ++c) {
    if (c == y) continue;
    long long signed_sum = 0;
    int taken = 0;
    for_each_member([&](std::size_t pos) {
      if (taken >= k) return;
      const int label = ds.label(pos);
      if (label == y) {
        signed_sum += w.level(pos);
      } else if (label == c) {
        signed_sum -= w.level(pos);
      } else {
        return;
      }
      ++taken;
    });
    if (signed_sum >= 0) total += 1.0;
  }
  return total / static_cast<double>(classes - 1);
}

}  // namespace

double UtilityVtilde(std::span<const std::size_t> members,
                     const SortedDataset& ds, const DiscreteWeights& w, int k) {
  std::vector<std::size_t> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DataError("subset members must be distinct");
  }
  if (!sorted.empty() && sorted.back() >= ds.size()) {
    throw DataError("subset member out of range");
  }
  return Vtilde(
      [&](auto&& visit) {
        for (std::size_t pos : sorted) visit(pos);
      },
      ds, w, k);
}

double UtilityVtilde(SubsetMask mask, const SortedDataset& ds,
                     const DiscreteWeights& w, int k) {
  return Vtilde(
      [&](auto&& visit) {
        for (SubsetMask rest = mask; rest != 0; rest &= rest - 1) {
          visit(static_cast<std::size_t>(std::countr_zero(rest)));
        }
      },
      ds, w, k);
}

}  // namespace wknn
