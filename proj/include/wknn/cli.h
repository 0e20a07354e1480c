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

// The `wknn` command-line tool.
//
//   wknn value --train FILE --val FILE [--method M] [--k INT] [--bits INT]
//              [--mstar INT|sqrt|adaptive:R] [--kernel rbf|norm-dist|uniform]
//              [--seed INT] [--workers INT] [--out FILE]
//   wknn eval mislabel|noise (--train FILE --val FILE | --synthetic N
//              [--queries Q]) [--rate R] [--scores FILE] [value options]
//   wknn bench [--sizes N1,N2,...] [value options]
//
// Exit codes: 0 success, 2 usage or configuration error, 3 data error.

#ifndef WKNN_CLI_H_
#define WKNN_CLI_H_

#include <iosfwd>
#include <optional>
#include <string_view>

#include "wknn/approx.h"

namespace wknn {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;

// "sqrt", "adaptive" (ratio 0.1), "adaptive:R" or a positive integer.
std::optional<ApproxConfig> ParseMstar(std::string_view text);

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace wknn

#endif  // WKNN_CLI_H_
