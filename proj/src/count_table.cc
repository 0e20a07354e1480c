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

#include "wknn/count_table.h"

#include <algorithm>

#include "wknn/errors.h"

namespace wknn {
namespace {

double IntervalSum(std::span<const double> row, const SignedGrid& grid,
                   LevelInterval interval) {
  const int lo = std::max(interval.lo, grid.lo());
  const int hi = std::min(interval.hi, grid.hi() + 1);
  double sum = 0.0;
  for (int level = lo; level < hi; ++level) sum += row[grid.index(level)];
  return sum;
}

}  // namespace

SignedGrid::SignedGrid(int k, int bits) : k_(k), bits_(bits) {
  if (k < 1) throw ConfigError("K must be at least 1");
  if (bits < 1 || bits > 16) throw ConfigError("bits must be in [1, 16]");
  span_ = (k - 1) * ((1 << bits) - 1);
}

LevelInterval SmallSubsetInterval(int target_signed_level, bool target_matches) {
  return target_matches ? LevelInterval{-target_signed_level, 0}
                        : LevelInterval{0, -target_signed_level};
}

LevelInterval DisplacementInterval(int target_signed_level, int displaced,
                                   bool target_matches) {
  return target_matches ? LevelInterval{-target_signed_level, -displaced}
                        : LevelInterval{-displaced, -target_signed_level};
}

CountTable::CountTable(std::size_t target, std::size_t n, SignedGrid grid)
    : target_(target), n_(n), grid_(grid) {
  const std::size_t layers = static_cast<std::size_t>(std::max(0, grid_.k() - 1));
  entries_.assign(n_ * layers * grid_.size(), 0.0);
}

std::size_t CountTable::offset(std::size_t m, int l) const {
  return (m * static_cast<std::size_t>(k() - 1) + static_cast<std::size_t>(l - 1)) *
         grid_.size();
}

double CountTable::at(std::size_t m, int l, int level) const {
  if (!grid_.contains(level)) return 0.0;
  return entries_[offset(m, l) + grid_.index(level)];
}

std::span<const double> CountTable::row(std::size_t m, int l) const {
  return std::span<const double>(entries_).subspan(offset(m, l), grid_.size());
}

std::span<double> CountTable::mutable_row(std::size_t m, int l) {
  return std::span<double>(entries_).subspan(offset(m, l), grid_.size());
}

CountTable BuildCountTable(std::size_t target, const SortedDataset& ds,
                           const DiscreteWeights& w, int k) {
  if (k < 2) throw ConfigError("count table needs K >= 2");
  if (target >= ds.size()) throw ConfigError("target out of range");
  const std::size_t n = ds.size();
  const auto signed_levels = w.SignedLevels(ds);
  CountTable table(target, n, SignedGrid(k, w.bits()));
  const SignedGrid& grid = table.grid();

  for (std::size_t m = 0; m < n; ++m) {
    if (m == target) continue;
    table.mutable_row(m, 1)[grid.index(signed_levels[m])] = 1.0;
  }

  std::vector<double> prefix(grid.size());
  for (int l = 2; l <= k - 1; ++l) {
    std::fill(prefix.begin(), prefix.end(), 0.0);
    for (std::size_t m = 0; m < n; ++m) {
      if (m != target) {
        auto row = table.mutable_row(m, l);
        const int shift = signed_levels[m];
        for (std::size_t s = 0; s < grid.size(); ++s) {
          const int from = grid.level(s) - shift;
          if (grid.contains(from)) row[s] = prefix[grid.index(from)];
        }
      }
      const auto below = table.row(m, l - 1);
      for (std::size_t s = 0; s < grid.size(); ++s) prefix[s] += below[s];
    }
  }
  return table;
}

std::vector<double> ComputeG(const CountTable& table, const SortedDataset& ds,
                             const DiscreteWeights& w) {
  const std::size_t i = table.target();
  const auto signed_levels = w.SignedLevels(ds);
  const bool matches = ds.matches_query(i);
  std::vector<double> g(static_cast<std::size_t>(table.k()), 0.0);
  g[0] = (!matches && w.level(i) > 0) ? 1.0 : 0.0;
  const LevelInterval interval = SmallSubsetInterval(signed_levels[i], matches);
  for (int l = 1; l <= table.k() - 1; ++l) {
    double sum = 0.0;
    for (std::size_t m = 0; m < table.n(); ++m) {
      if (m == i) continue;
      sum += IntervalSum(table.row(m, l), table.grid(), interval);
    }
    g[static_cast<std::size_t>(l)] = sum;
  }
  return g;
}

std::size_t RStreamStart(std::size_t target, int k) {
  return std::max(target + 1, static_cast<std::size_t>(k));
}

std::vector<double> ComputeRStream(const CountTable& table,
                                   const SortedDataset& ds,
                                   const DiscreteWeights& w) {
  const std::size_t i = table.target();
  const int top = table.k() - 1;
  const auto signed_levels = w.SignedLevels(ds);
  const bool matches = ds.matches_query(i);
  const std::size_t start = RStreamStart(i, table.k());
  const SignedGrid& grid = table.grid();

  std::vector<double> prefix(grid.size(), 0.0);
  for (std::size_t t = 0; t < std::min(start, table.n()); ++t) {
    if (t == i) continue;
    const auto row = table.row(t, top);
    for (std::size_t s = 0; s < grid.size(); ++s) prefix[s] += row[s];
  }
  std::vector<double> r;
  for (std::size_t m = start; m < table.n(); ++m) {
    r.push_back(IntervalSum(
        prefix, grid,
        DisplacementInterval(signed_levels[i], signed_levels[m], matches)));
    const auto row = table.row(m, top);
    for (std::size_t s = 0; s < grid.size(); ++s) prefix[s] += row[s];
  }
  return r;
}

}  // namespace wknn
