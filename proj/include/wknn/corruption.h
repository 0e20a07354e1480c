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

// Seeded corruption generators for detection experiments.

#ifndef WKNN_CORRUPTION_H_
#define WKNN_CORRUPTION_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wknn/dataset.h"

namespace wknn {

struct Corruption {
  std::vector<LabeledPoint> points;
  // Sorted orig_index values of the altered points.
  std::vector<std::size_t> corrupted;
};

// Flips the labels of exactly floor(rate * N + 0.5) points chosen uniformly
// without replacement; each new label is drawn uniformly from the other
// num_classes - 1 classes. Throws ConfigError for num_classes < 2 or a rate
// outside (0, 1).
Corruption FlipLabels(const std::vector<LabeledPoint>& points, double rate,
                      int num_classes, std::uint64_t seed);

// Adds zero-mean Gaussian noise to floor(rate * N + 0.5) points. The standard
// deviation in each dimension is the mean absolute value of that feature over
// the whole input.
Corruption AddFeatureNoise(const std::vector<LabeledPoint>& points, double rate,
                           std::uint64_t seed);

}  // namespace wknn

#endif  // WKNN_CORRUPTION_H_
