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

#ifndef WKNN_NUMERIC_H_
#define WKNN_NUMERIC_H_

#include <cmath>
#include <cstdint>

namespace wknn {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void Add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double Value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// log C(n, k); -inf when k > n.
inline double LogBinomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return -INFINITY;
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

// C(n, k) as a double via the multiplicative formula. Exact for results
// below 2^53 and relatively accurate to a few ulps beyond that.
inline double Binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double result = 1.0;
  for (std::int64_t j = 1; j <= k; ++j) {
    result = result * static_cast<double>(n - k + j) / static_cast<double>(j);
  }
  return result < 9.0e15 ? std::round(result) : result;
}

}  // namespace wknn

#endif  // WKNN_NUMERIC_H_
