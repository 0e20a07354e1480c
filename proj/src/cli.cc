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

#include "wknn/cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wknn/bench.h"
#include "wknn/corruption.h"
#include "wknn/csv_io.h"
#include "wknn/errors.h"
#include "wknn/metrics.h"
#include "wknn/synthetic.h"
#include "wknn/valuation.h"

namespace wknn {

std::optional<ApproxConfig> ParseMstar(std::string_view text) {
  if (text == "sqrt") return ApproxConfig::SqrtN();
  if (text == "adaptive") return ApproxConfig::Adaptive(0.1);
  if (text.starts_with("adaptive:")) {
    const std::string ratio_text(text.substr(9));
    char* end = nullptr;
    const double ratio = std::strtod(ratio_text.c_str(), &end);
    if (ratio_text.empty() || end != ratio_text.c_str() + ratio_text.size() ||
        !(ratio > 0.0 && ratio < 1.0)) {
      return std::nullopt;
    }
    return ApproxConfig::Adaptive(ratio);
  }
  std::size_t mstar = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), mstar);
  if (ec != std::errc() || ptr != text.data() + text.size() || mstar == 0) {
    return std::nullopt;
  }
  return ApproxConfig::Fixed(mstar);
}

namespace {

struct CommonFlags {
  std::string train;
  std::string val;
  std::string method = "exact";
  int k = 5;
  int bits = 3;
  std::string mstar;
  std::string kernel = "rbf";
  std::uint64_t seed = 0;
  int workers = 1;
  std::string out;
};

void AddCommon(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--train", f.train, "Training CSV (f0..f{d-1},label)");
  cmd->add_option("--val", f.val, "Validation CSV, same layout");
  cmd->add_option("--method", f.method,
                  "exact|approx|mc|oracle|unweighted_soft|unweighted_hard");
  cmd->add_option("--k", f.k, "Number of neighbours K");
  cmd->add_option("--bits", f.bits, "Weight discretization bits b");
  cmd->add_option("--mstar", f.mstar, "Approx truncation: INT|sqrt|adaptive:R");
  cmd->add_option("--kernel", f.kernel, "rbf|norm-dist|uniform");
  cmd->add_option("--seed", f.seed, "Seed for corruption and sampling");
  cmd->add_option("--workers", f.workers, "Worker threads");
  cmd->add_option("--out", f.out, "Output file (default: stdout)");
}

RunConfig MakeRunConfig(const CommonFlags& f) {
  RunConfig cfg;
  const auto method = ParseMethod(f.method);
  if (!method) throw ConfigError("unknown method '" + f.method + "'");
  cfg.method = *method;
  const auto kernel = ParseKernel(f.kernel);
  if (!kernel) throw ConfigError("unknown kernel '" + f.kernel + "'");
  cfg.kernel = *kernel;
  if (f.k < 1) throw ConfigError("--k must be at least 1");
  if (f.bits < 1 || f.bits > 16) throw ConfigError("--bits must be in [1, 16]");
  if (f.workers < 1) throw ConfigError("--workers must be at least 1");
  cfg.k = f.k;
  cfg.bits = f.bits;
  cfg.seed = f.seed;
  cfg.workers = f.workers;
  if (!f.mstar.empty()) {
    if (cfg.method != Method::kApprox) {
      throw ConfigError("--mstar only applies to --method approx");
    }
    const auto parsed = ParseMstar(f.mstar);
    if (!parsed) throw ConfigError("bad --mstar '" + f.mstar + "'");
    cfg.approx = *parsed;
  }
  return cfg;
}

std::vector<ValQuery> ReadQueries(const std::string& path) {
  return AsQueries(ReadLabeledCsv(path));
}

// Writes to the file named by `path`, or to `fallback` when it is empty.
template <typename Fn>
void Emit(const std::string& path, std::ostream& fallback, Fn&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw DataError("cannot write " + path);
  write(file);
  if (!file) throw DataError("failed writing " + path);
}

void CheckFixedMstar(const RunConfig& cfg, std::size_t n) {
  if (cfg.method == Method::kApprox &&
      cfg.approx.policy == ApproxConfig::Policy::kFixed &&
      (cfg.approx.mstar < MinMstar(n, cfg.k) || cfg.approx.mstar > n)) {
    throw ConfigError("--mstar must lie in [K+1, N] for N = " + std::to_string(n));
  }
}

int RunValue(const CommonFlags& f, std::ostream& out) {
  const RunConfig cfg = MakeRunConfig(f);
  const auto train = ReadLabeledCsv(f.train);
  const auto queries = ReadQueries(f.val);
  CheckFixedMstar(cfg, train.size());
  const ShapleyScores scores = ValueDataset(train, queries, cfg);
  Emit(f.out, out, [&](std::ostream& s) { WriteScoresCsv(s, scores); });
  return kExitOk;
}

struct EvalFlags {
  double rate = 0.1;
  std::string scores;
  std::size_t synthetic = 0;
  std::size_t queries = 50;
};

int RunEval(const CommonFlags& f, const EvalFlags& e, bool noise,
            std::ostream& out) {
  const RunConfig cfg = MakeRunConfig(f);
  std::vector<LabeledPoint> clean;
  std::vector<ValQuery> queries;
  std::string dataset;
  if (e.synthetic > 0) {
    clean = TwoGaussians(e.synthetic, cfg.seed);
    queries = AsQueries(TwoGaussians(e.queries, cfg.seed + 1));
    dataset = "two-gaussians-" + std::to_string(e.synthetic);
  } else {
    clean = ReadLabeledCsv(f.train);
    queries = ReadQueries(f.val);
    dataset = f.train;
  }
  CheckFixedMstar(cfg, clean.size());
  const int classes = InferNumClasses(clean, queries);
  const Corruption corrupted = noise ? AddFeatureNoise(clean, e.rate, cfg.seed)
                                     : FlipLabels(clean, e.rate, classes, cfg.seed);
  ValuationLog log;
  const ShapleyScores scores = ValueDataset(corrupted.points, queries, cfg, &log);
  EvalReport report = MakeReport(cfg, dataset + (noise ? "/noise" : "/mislabel"),
                                 clean.size(), queries.size(), log);
  report.auroc = Auroc(scores.values, corrupted.corrupted);

  Emit(f.out, out, [&](std::ostream& s) { WriteReport(s, report); });
  std::string scores_path = e.scores;
  if (scores_path.empty() && !f.out.empty()) scores_path = f.out + ".scores.csv";
  if (!scores_path.empty()) {
    Emit(scores_path, out, [&](std::ostream& s) { WriteScoresCsv(s, scores); });
  }
  return kExitOk;
}

int RunBench(const CommonFlags& f, const std::vector<std::size_t>& sizes,
             std::ostream& out) {
  const RunConfig cfg = MakeRunConfig(f);
  const BenchResult result = BenchRuntime(sizes, cfg);
  Emit(f.out, out, [&](std::ostream& s) {
    for (const auto& r : result.reports) {
      WriteReport(s, r);
      s << '\n';
    }
    s << "loglog_slope=" << result.slope << '\n';
  });
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Data Shapley values for weighted hard-label KNN", "wknn"};
  app.require_subcommand(1);

  CommonFlags value_flags;
  CLI::App* value = app.add_subcommand("value", "Score every training point");
  AddCommon(value, value_flags);
  value->get_option("--train")->required();
  value->get_option("--val")->required();

  CommonFlags eval_flags;
  EvalFlags eval_extra;
  CLI::App* eval = app.add_subcommand("eval", "Corruption-detection experiment");
  eval->require_subcommand(1);
  CLI::App* mislabel = eval->add_subcommand("mislabel", "Flip a fraction of labels");
  CLI::App* noise = eval->add_subcommand("noise", "Add Gaussian feature noise");
  for (CLI::App* cmd : {mislabel, noise}) {
    AddCommon(cmd, eval_flags);
    cmd->add_option("--rate", eval_extra.rate, "Fraction of corrupted points");
    cmd->add_option("--scores", eval_extra.scores, "Score CSV output");
    cmd->add_option("--synthetic", eval_extra.synthetic,
                    "Use N synthetic two-Gaussian training points");
    cmd->add_option("--queries", eval_extra.queries,
                    "Synthetic validation queries");
  }

  CommonFlags bench_flags;
  std::vector<std::size_t> sizes{500, 1000, 2000, 4000};
  CLI::App* bench = app.add_subcommand("bench", "Runtime scaling benchmark");
  AddCommon(bench, bench_flags);
  bench->add_option("--sizes", sizes, "Training sizes")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "wknn: " << e.what() << " (usage: wknn <value|eval|bench> --help)\n";
    return kExitUsage;
  }

  try {
    if (value->parsed()) return RunValue(value_flags, out);
    if (mislabel->parsed() || noise->parsed()) {
      if (eval_extra.synthetic == 0 &&
          (eval_flags.train.empty() || eval_flags.val.empty())) {
        err << "wknn: --train is required (or --synthetic N); usage: wknn eval "
               "<mislabel|noise> --train FILE --val FILE\n";
        return kExitUsage;
      }
      return RunEval(eval_flags, eval_extra, noise->parsed(), out);
    }
    if (bench->parsed()) return RunBench(bench_flags, sizes, out);
  } catch (const ConfigError& e) {
    err << "wknn: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "wknn: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace wknn
