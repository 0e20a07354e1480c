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

#include "wknn/synthetic.h"

#include <cmath>
#include <numbers>
#include <random>

namespace wknn {

std::vector<LabeledPoint> SignSumGaussian(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<LabeledPoint> points(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x0 = gauss(rng);
    const double x1 = gauss(rng);
    points[k] = {{x0, x1}, x0 + x1 > 0.0 ? 1 : 0, k};
  }
  return points;
}

std::vector<LabeledPoint> TwoGaussians(std::size_t n, std::uint64_t seed,
                                       double offset) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<LabeledPoint> points(n);
  for (std::size_t k = 0; k < n; ++k) {
    const int label = static_cast<int>(k % 2);
    const double centre = label == 1 ? offset : -offset;
    const double x0 = centre + gauss(rng);
    const double x1 = centre + gauss(rng);
    points[k] = {{x0, x1}, label, k};
  }
  return points;
}

std::vector<LabeledPoint> GaussianBlobs(std::size_t n, int classes,
                                        std::uint64_t seed, double radius) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<LabeledPoint> points(n);
  for (std::size_t k = 0; k < n; ++k) {
    const int label = static_cast<int>(k % static_cast<std::size_t>(classes));
    const double angle = 2.0 * std::numbers::pi * label / classes;
    const double x0 = radius * std::cos(angle) + gauss(rng);
    const double x1 = radius * std::sin(angle) + gauss(rng);
    points[k] = {{x0, x1}, label, k};
  }
  return points;
}

std::vector<ValQuery> AsQueries(const std::vector<LabeledPoint>& points) {
  std::vector<ValQuery> queries;
  queries.reserve(points.size());
  for (const auto& p : points) queries.push_back({p.features, p.label});
  return queries;
}

}  // namespace wknn
