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

// Seeded synthetic datasets for benchmarks and detection experiments.

#ifndef WKNN_SYNTHETIC_H_
#define WKNN_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wknn/dataset.h"

namespace wknn {

// 2-D standard Gaussian samples labelled 1 when x0 + x1 > 0, else 0.
std::vector<LabeledPoint> SignSumGaussian(std::size_t n, std::uint64_t seed);

// Two unit-variance 2-D Gaussian blobs centred at -(offset, offset) (label 0)
// and +(offset, offset) (label 1); labels alternate so classes are balanced.
std::vector<LabeledPoint> TwoGaussians(std::size_t n, std::uint64_t seed,
                                       double offset = 1.0);

// `classes` unit-variance 2-D blobs on a circle of the given radius.
std::vector<LabeledPoint> GaussianBlobs(std::size_t n, int classes,
                                        std::uint64_t seed, double radius = 3.0);

std::vector<ValQuery> AsQueries(const std::vector<LabeledPoint>& points);

}  // namespace wknn

#endif  // WKNN_SYNTHETIC_H_
