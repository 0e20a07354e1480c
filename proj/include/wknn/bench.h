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

// Evaluation records and the runtime-scaling benchmark.

#ifndef WKNN_BENCH_H_
#define WKNN_BENCH_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wknn/valuation.h"

namespace wknn {

struct EvalReport {
  std::string method;
  std::string dataset;
  int k = 0;
  int bits = 0;
  std::string mstar;  // "-" unless approx
  std::size_t n_train = 0;
  std::size_t n_val = 0;
  std::vector<double> seconds_per_query;
  std::optional<double> auroc;  // in [0, 1]
  std::uint64_t seed = 0;
};

std::string MstarLabel(const RunConfig& cfg);

EvalReport MakeReport(const RunConfig& cfg, const std::string& dataset,
                      std::size_t n_train, std::size_t n_val,
                      const ValuationLog& log);

// Flat key=value lines, one field per line.
void WriteReport(std::ostream& out, const EvalReport& report);

struct BenchResult {
  std::vector<EvalReport> reports;  // one per size
  std::vector<double> seconds;      // best wall time per size, single query
  double slope = 0.0;               // least squares of log(time) vs log(N)
};

// Times one validation query on SignSumGaussian(N) for each N in `sizes`
// (strictly increasing, at least three). Each size is repeated until about
// `min_seconds` have elapsed and the fastest run is kept.
BenchResult BenchRuntime(std::span<const std::size_t> sizes,
                         const RunConfig& cfg, double min_seconds = 0.2);

}  // namespace wknn

#endif  // WKNN_BENCH_H_
