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

#ifndef WKNN_METRICS_H_
#define WKNN_METRICS_H_

#include <cstddef>
#include <span>
#include <vector>

namespace wknn {

// Rank-based AUROC for detecting `positives` (indices into `scores`) where a
// LOWER score is the stronger corruption signal. Tied scores share their
// midrank, so all-equal scores give 0.5. Throws DataError when the positive
// set is empty, covers every index, or contains an out-of-range index.
double Auroc(std::span<const double> scores,
             std::span<const std::size_t> positives);

// Least-squares slope of log(y) against log(x).
double LogLogSlope(std::span<const double> x, std::span<const double> y);

}  // namespace wknn

#endif  // WKNN_METRICS_H_
