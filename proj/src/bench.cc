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

#include "wknn/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <ostream>

#include "wknn/errors.h"
#include "wknn/metrics.h"
#include "wknn/synthetic.h"

namespace wknn {
namespace {

std::string FormatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string MstarLabel(const RunConfig& cfg) {
  if (cfg.method != Method::kApprox) return "-";
  switch (cfg.approx.policy) {
    case ApproxConfig::Policy::kFixed:
      return std::to_string(cfg.approx.mstar);
    case ApproxConfig::Policy::kSqrtN:
      return "sqrt";
    case ApproxConfig::Policy::kAdaptive:
      return "adaptive:" + FormatDouble(cfg.approx.adaptive_ratio);
  }
  return "-";
}

EvalReport MakeReport(const RunConfig& cfg, const std::string& dataset,
                      std::size_t n_train, std::size_t n_val,
                      const ValuationLog& log) {
  EvalReport r;
  r.method = std::string(MethodName(cfg.method));
  r.dataset = dataset;
  r.k = cfg.k;
  r.bits = cfg.bits;
  r.mstar = MstarLabel(cfg);
  r.n_train = n_train;
  r.n_val = n_val;
  r.seconds_per_query = log.seconds_per_query;
  r.seed = cfg.seed;
  return r;
}

void WriteReport(std::ostream& out, const EvalReport& report) {
  double total = 0.0;
  for (double s : report.seconds_per_query) total += s;
  out << "method=" << report.method << '\n'
      << "dataset=" << report.dataset << '\n'
      << "k=" << report.k << '\n'
      << "bits=" << report.bits << '\n'
      << "mstar=" << report.mstar << '\n'
      << "n_train=" << report.n_train << '\n'
      << "n_val=" << report.n_val << '\n'
      << "seed=" << report.seed << '\n'
      << "wall_seconds_total=" << FormatDouble(total) << '\n'
      << "wall_seconds_per_query=";
  for (std::size_t q = 0; q < report.seconds_per_query.size(); ++q) {
    if (q > 0) out << ';';
    out << FormatDouble(report.seconds_per_query[q]);
  }
  out << '\n';
  out << "auroc=" << (report.auroc ? FormatDouble(*report.auroc) : "-") << '\n';
}

BenchResult BenchRuntime(std::span<const std::size_t> sizes,
                         const RunConfig& cfg, double min_seconds) {
  if (sizes.size() < 3) throw ConfigError("benchmark needs at least three sizes");
  for (std::size_t k = 1; k < sizes.size(); ++k) {
    if (sizes[k] <= sizes[k - 1]) {
      throw ConfigError("benchmark sizes must be strictly increasing");
    }
  }
  BenchResult result;
  std::vector<double> xs;
  for (std::size_t n : sizes) {
    // One extra sample serves as the validation query.
    auto points = SignSumGaussian(n + 1, cfg.seed);
    const ValQuery query{points.back().features, points.back().label};
    points.pop_back();
    const int classes = 2;

    ValuationLog log;
    double best = std::numeric_limits<double>::infinity();
    double spent = 0.0;
    int runs = 0;
    while (runs < 3 || spent < min_seconds) {
      ValuationLog once;
      ValueForQuery(points, query, classes, cfg, &once, cfg.seed);
      const double t = once.seconds_per_query.front();
      best = std::min(best, t);
      spent += t;
      ++runs;
      if (runs >= 50) break;
    }
    log.seconds_per_query.push_back(best);
    result.reports.push_back(
        MakeReport(cfg, "sign-sum-gaussian-" + std::to_string(n), n, 1, log));
    result.seconds.push_back(best);
    xs.push_back(static_cast<double>(n));
  }
  result.slope = LogLogSlope(xs, result.seconds);
  return result;
}

}  // namespace wknn
