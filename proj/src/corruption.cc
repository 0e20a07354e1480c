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

#include "wknn/corruption.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "wknn/errors.h"

namespace wknn {
namespace {

std::vector<std::size_t> ChooseRows(std::size_t n, double rate,
                                    std::mt19937_64& rng) {
  if (!(rate > 0.0 && rate < 1.0)) throw ConfigError("rate must be in (0, 1)");
  const auto count = static_cast<std::size_t>(
      std::floor(rate * static_cast<double>(n) + 0.5));
  std::vector<std::size_t> rows(n);
  std::iota(rows.begin(), rows.end(), 0);
  // Partial Fisher-Yates: the first `count` slots are a uniform sample.
  for (std::size_t k = 0; k < count; ++k) {
    std::uniform_int_distribution<std::size_t> pick(k, n - 1);
    std::swap(rows[k], rows[pick(rng)]);
  }
  rows.resize(count);
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

Corruption FlipLabels(const std::vector<LabeledPoint>& points, double rate,
                      int num_classes, std::uint64_t seed) {
  if (num_classes < 2) throw ConfigError("label flipping needs at least 2 classes");
  std::mt19937_64 rng(seed);
  Corruption out{points, ChooseRows(points.size(), rate, rng)};
  std::uniform_int_distribution<int> other(1, num_classes - 1);
  for (std::size_t row : out.corrupted) {
    int& label = out.points[row].label;
    if (label < 0 || label >= num_classes) throw DataError("label out of range");
    label = (label + other(rng)) % num_classes;
  }
  for (auto& row : out.corrupted) row = out.points[row].orig_index;
  std::sort(out.corrupted.begin(), out.corrupted.end());
  return out;
}

Corruption AddFeatureNoise(const std::vector<LabeledPoint>& points, double rate,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Corruption out{points, ChooseRows(points.size(), rate, rng)};
  if (points.empty()) return out;
  const std::size_t dims = points.front().features.size();
  std::vector<double> scale(dims, 0.0);
  for (const auto& p : points) {
    if (p.features.size() != dims) throw DataError("ragged feature rows");
    for (std::size_t d = 0; d < dims; ++d) scale[d] += std::fabs(p.features[d]);
  }
  for (double& s : scale) s /= static_cast<double>(points.size());
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (std::size_t row : out.corrupted) {
    for (std::size_t d = 0; d < dims; ++d) {
      out.points[row].features[d] += scale[d] * gauss(rng);
    }
  }
  for (auto& row : out.corrupted) row = out.points[row].orig_index;
  std::sort(out.corrupted.begin(), out.corrupted.end());
  return out;
}

}  // namespace wknn
