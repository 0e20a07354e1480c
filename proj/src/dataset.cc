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

#include "wknn/dataset.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wknn/errors.h"

namespace wknn {

std::optional<Kernel> ParseKernel(std::string_view name) {
  if (name == "rbf") return Kernel::kRbf;
  if (name == "norm-dist" || name == "norm_dist") return Kernel::kNormDist;
  if (name == "uniform") return Kernel::kUniform;
  return std::nullopt;
}

std::string_view KernelName(Kernel kernel) {
  switch (kernel) {
    case Kernel::kRbf:
      return "rbf";
    case Kernel::kNormDist:
      return "norm-dist";
    case Kernel::kUniform:
      return "uniform";
  }
  return "unknown";
}

SortedDataset::SortedDataset(std::vector<LabeledPoint> points,
                             std::vector<double> distances, ValQuery query,
                             int num_classes, std::size_t source_size)
    : points_(std::move(points)),
      distances_(std::move(distances)),
      query_(std::move(query)),
      num_classes_(num_classes),
      source_size_(source_size) {
  if (points_.size() != distances_.size()) {
    throw DataError("one distance per point required");
  }
  if (num_classes_ < 2) throw ConfigError("num_classes must be at least 2");
  if (query_.label < 0 || query_.label >= num_classes_) {
    throw DataError("query label out of range");
  }
  for (std::size_t pos = 0; pos < points_.size(); ++pos) {
    if (points_[pos].label < 0 || points_[pos].label >= num_classes_) {
      throw DataError("label out of range at row " +
                      std::to_string(points_[pos].orig_index));
    }
    if (points_[pos].orig_index >= source_size_) {
      throw DataError("orig_index exceeds source size");
    }
    if (!(distances_[pos] >= 0.0)) throw DataError("negative distance");
    if (pos > 0) {
      const bool ordered =
          distances_[pos - 1] < distances_[pos] ||
          (distances_[pos - 1] == distances_[pos] &&
           points_[pos - 1].orig_index < points_[pos].orig_index);
      if (!ordered) throw DataError("points are not sorted by distance");
    }
  }
}

SortedDataset SortedDataset::Restrict(const std::vector<bool>& keep) const {
  std::vector<LabeledPoint> points;
  std::vector<double> distances;
  for (std::size_t pos = 0; pos < size(); ++pos) {
    if (!keep[pos]) continue;
    points.push_back(points_[pos]);
    distances.push_back(distances_[pos]);
  }
  return SortedDataset(std::move(points), std::move(distances), query_,
                       num_classes_, source_size_);
}

namespace {

double EuclideanDistance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

void CheckFinite(std::span<const double> features, const std::string& what) {
  if (features.empty()) throw DataError(what + " has no features");
  for (double f : features) {
    if (!std::isfinite(f)) throw DataError(what + " has a non-finite feature");
  }
}

}  // namespace

SortedDataset SortByDistance(std::span<const LabeledPoint> points,
                             const ValQuery& query, Metric metric,
                             std::optional<int> num_classes) {
  (void)metric;  // Euclidean is the only metric.
  CheckFinite(query.features, "query");
  int max_label = query.label;
  std::size_t source_size = 0;
  std::vector<double> dist(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& p = points[k];
    const std::string row = "row " + std::to_string(p.orig_index);
    if (p.features.size() != query.features.size()) {
      throw DataError(row + ": dimension mismatch with query");
    }
    CheckFinite(p.features, row);
    if (p.label < 0) throw DataError(row + ": negative label");
    max_label = std::max(max_label, p.label);
    source_size = std::max(source_size, p.orig_index + 1);
    dist[k] = EuclideanDistance(p.features, query.features);
  }

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (dist[a] != dist[b]) return dist[a] < dist[b];
    return points[a].orig_index < points[b].orig_index;
  });

  std::vector<LabeledPoint> sorted;
  std::vector<double> sorted_dist;
  sorted.reserve(points.size());
  sorted_dist.reserve(points.size());
  for (std::size_t k : order) {
    sorted.push_back(points[k]);
    sorted_dist.push_back(dist[k]);
  }
  const int classes = num_classes.value_or(std::max(2, max_label + 1));
  return SortedDataset(std::move(sorted), std::move(sorted_dist), query,
                       classes, source_size);
}

WeightAssignment AssignWeights(const SortedDataset& ds, Kernel kernel) {
  WeightAssignment out;
  const std::size_t n = ds.size();
  out.weights.assign(n, 1.0);
  switch (kernel) {
    case Kernel::kUniform:
      break;
    case Kernel::kRbf:
      for (std::size_t pos = 0; pos < n; ++pos) {
        out.weights[pos] = std::exp(-ds.distance(pos));
      }
      break;
    case Kernel::kNormDist: {
      if (n == 0) break;
      const double nearest = ds.distance(0);
      const double farthest = ds.distance(n - 1);
      if (!(farthest > nearest)) {
        out.fell_back_to_uniform = true;
        break;
      }
      for (std::size_t pos = 0; pos < n; ++pos) {
        out.weights[pos] = (farthest - ds.distance(pos)) / (farthest - nearest);
      }
      break;
    }
  }
  return out;
}

DiscreteWeights::DiscreteWeights(int bits, std::vector<double> raw,
                                 std::vector<int> levels)
    : bits_(bits), raw_(std::move(raw)), levels_(std::move(levels)) {
  if (bits_ < 1 || bits_ > 16) throw ConfigError("bits must be in [1, 16]");
  if (raw_.size() != levels_.size()) {
    throw DataError("raw and quantized weights differ in length");
  }
  for (int g : levels_) {
    if (g < 0 || g > max_level()) throw DataError("weight level off the grid");
  }
}

std::vector<double> DiscreteWeights::quantized() const {
  std::vector<double> out(levels_.size());
  for (std::size_t pos = 0; pos < levels_.size(); ++pos) {
    out[pos] = quantized(pos);
  }
  return out;
}

std::vector<int> DiscreteWeights::SignedLevels(const SortedDataset& ds) const {
  if (ds.size() != levels_.size()) {
    throw DataError("weights do not match dataset size");
  }
  std::vector<int> out(levels_.size());
  for (std::size_t pos = 0; pos < levels_.size(); ++pos) {
    out[pos] = ds.matches_query(pos) ? levels_[pos] : -levels_[pos];
  }
  return out;
}

std::vector<double> DiscreteWeights::SignedValues(const SortedDataset& ds) const {
  const auto levels = SignedLevels(ds);
  std::vector<double> out(levels.size());
  for (std::size_t pos = 0; pos < levels.size(); ++pos) {
    out[pos] = static_cast<double>(levels[pos]) / max_level();
  }
  return out;
}

DiscreteWeights DiscreteWeights::Restrict(const std::vector<bool>& keep) const {
  std::vector<double> raw;
  std::vector<int> levels;
  for (std::size_t pos = 0; pos < levels_.size(); ++pos) {
    if (!keep[pos]) continue;
    raw.push_back(raw_[pos]);
    levels.push_back(levels_[pos]);
  }
  return DiscreteWeights(bits_, std::move(raw), std::move(levels));
}

DiscreteWeights Discretize(std::span<const double> raw, int bits) {
  if (bits < 1 || bits > 16) throw ConfigError("bits must be in [1, 16]");
  const int top = (1 << bits) - 1;
  std::vector<int> levels(raw.size());
  for (std::size_t pos = 0; pos < raw.size(); ++pos) {
    const double r = raw[pos];
    if (!(r >= 0.0 && r <= 1.0)) {
      throw DataError("raw weight outside [0, 1]");
    }
    levels[pos] = static_cast<int>(std::floor(r * top + 0.5));
  }
  return DiscreteWeights(bits, std::vector<double>(raw.begin(), raw.end()),
                         std::move(levels));
}

}  // namespace wknn
