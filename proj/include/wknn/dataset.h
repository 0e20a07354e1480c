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

// Training data ordered by distance to a single validation query, and the
// per-point weights derived from that ordering.
//
// Every valuation routine in this library works on a SortedDataset: position
// 0 is the nearest training point, position N-1 the farthest. Scores are
// reported against LabeledPoint::orig_index so callers never see the sorted
// permutation.

#ifndef WKNN_DATASET_H_
#define WKNN_DATASET_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace wknn {

struct LabeledPoint {
  std::vector<double> features;
  int label = 0;
  // Row of the point in its input file; scores are reported against it.
  std::size_t orig_index = 0;
};

struct ValQuery {
  std::vector<double> features;
  int label = 0;
};

enum class Metric { kEuclidean };

enum class Kernel { kRbf, kNormDist, kUniform };

std::optional<Kernel> ParseKernel(std::string_view name);
std::string_view KernelName(Kernel kernel);

class SortedDataset {
 public:
  SortedDataset() = default;

  // Takes already-sorted columns. Use SortByDistance() to build one from raw
  // points; this constructor only validates the ordering invariants.
  SortedDataset(std::vector<LabeledPoint> points, std::vector<double> distances,
                ValQuery query, int num_classes, std::size_t source_size);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  const LabeledPoint& point(std::size_t pos) const { return points_[pos]; }
  std::span<const LabeledPoint> points() const { return points_; }
  std::span<const double> distances() const { return distances_; }
  double distance(std::size_t pos) const { return distances_[pos]; }
  int label(std::size_t pos) const { return points_[pos].label; }
  std::size_t orig_index(std::size_t pos) const {
    return points_[pos].orig_index;
  }
  const ValQuery& query() const { return query_; }
  bool matches_query(std::size_t pos) const {
    return points_[pos].label == query_.label;
  }

  int num_classes() const { return num_classes_; }

  // Number of points in the original input. Scores are vectors of this
  // length; a restricted dataset (see multiclass.h) leaves the slots of the
  // points it dropped at zero.
  std::size_t source_size() const { return source_size_; }

  // Keeps the positions for which keep[pos] is true, preserving order.
  SortedDataset Restrict(const std::vector<bool>& keep) const;

 private:
  std::vector<LabeledPoint> points_;
  std::vector<double> distances_;
  ValQuery query_;
  int num_classes_ = 2;
  std::size_t source_size_ = 0;
};

// Sorts `points` by Euclidean distance to `query`, ties broken by orig_index.
// `num_classes` defaults to 1 + the largest label seen (at least 2).
// Throws DataError on dimension mismatch or non-finite features.
SortedDataset SortByDistance(std::span<const LabeledPoint> points,
                             const ValQuery& query,
                             Metric metric = Metric::kEuclidean,
                             std::optional<int> num_classes = std::nullopt);

struct WeightAssignment {
  std::vector<double> weights;
  // Set when kNormDist was requested but every distance was equal.
  bool fell_back_to_uniform = false;
};

// Raw weights in [0, 1], non-increasing along the sorted order.
WeightAssignment AssignWeights(const SortedDataset& ds, Kernel kernel);

// Weights quantized to the grid {g / (2^b - 1) : g = 0 .. 2^b - 1}.
//
// Levels are stored as integers so that partial sums of signed weights can be
// indexed exactly. The signed level of a point is +g when its label matches
// the query label and -g otherwise; it depends on the dataset, so it is
// derived on demand through SignedLevels().
class DiscreteWeights {
 public:
  DiscreteWeights() = default;
  DiscreteWeights(int bits, std::vector<double> raw, std::vector<int> levels);

  int bits() const { return bits_; }
  // W = 2^b grid points.
  int num_levels() const { return 1 << bits_; }
  int max_level() const { return num_levels() - 1; }
  std::size_t size() const { return levels_.size(); }

  std::span<const double> raw() const { return raw_; }
  std::span<const int> levels() const { return levels_; }
  int level(std::size_t pos) const { return levels_[pos]; }
  double quantized(std::size_t pos) const {
    return static_cast<double>(levels_[pos]) / max_level();
  }
  std::vector<double> quantized() const;

  // +level for points labelled like the query, -level otherwise.
  std::vector<int> SignedLevels(const SortedDataset& ds) const;
  std::vector<double> SignedValues(const SortedDataset& ds) const;

  DiscreteWeights Restrict(const std::vector<bool>& keep) const;

 private:
  int bits_ = 1;
  std::vector<double> raw_;
  std::vector<int> levels_;
};

// Rounds each raw weight to the nearest grid point; exact halves round up.
// Throws ConfigError for bits outside [1, 16] and DataError for raw values
// outside [0, 1].
DiscreteWeights Discretize(std::span<const double> raw, int bits);

}  // namespace wknn

#endif  // WKNN_DATASET_H_
