// Copyright 2026 The qrobust Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command-line front end. Exit codes: 0 success, 1 property failure,
// 2 invalid input or usage, 3 rank-deficient input with --no-fallback, 4 I/O.

#include <iosfwd>
#include <string>
#include <vector>

#include "qrobust/json_io.hpp"
#include "qrobust/states.hpp"
#include "qrobust/tolerances.hpp"

namespace qrobust::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFailure = 1,
  kInvalidInput = 2,
  kUnsupportedInput = 3,
  kIoFailure = 4,
};

struct AnalyzeOptions {
  bool oracle = false;
  bool fallback = true;
  int budget = 20;
  std::uint64_t seed = 0;
};

// The analysis report written by `analyze` and `param --report`. Throws
// RankDeficient when the closed form does not apply and fallback is off.
Json analyze_state(const DensityMatrix& rho, const AnalyzeOptions& options, const Tolerances& tol);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qrobust::cli
