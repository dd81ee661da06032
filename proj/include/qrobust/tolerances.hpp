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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qrobust {

// Every numerical threshold used by the library, in one place.
struct Tolerances {
  // Preconditions of the matrix kernels.
  double hermitian_input = 1e-9;
  double symmetric_input = 1e-9;

  // DensityMatrix invariants.
  double state_hermiticity = 1e-9;
  double state_trace = 1e-9;
  double state_psd = 1e-10;

  // Kernel internals.
  double jacobi_offdiag = 1e-14;  // relative off-diagonal Frobenius mass
  double rank_relative = 1e-8;
  double takagi_failure = 1e-7;
  double ppt = 1e-11;  // a partial transpose with min eigenvalue >= -ppt is PPT
  double bisection = 1e-10;

  // Property checks (verify command, acceptance suite).
  double identity = 1e-9;
  double orthogonality = 1e-10;
  double moment = 1e-8;
  double oracle_agreement = 1e-6;
};

// Names accepted by apply_overrides, paired with the field they set.
std::vector<std::pair<std::string, double Tolerances::*>> tolerance_fields();

// Applies overrides of the form "key=value,key=value". A bare number sets
// every property-check tolerance (identity, orthogonality, moment,
// oracle_agreement) at once. Throws ParseError on malformed input.
Tolerances apply_overrides(Tolerances base, std::string_view overrides);

// Default tolerances with the QROBUST_TOL environment variable applied.
Tolerances tolerances_from_env();

}  // namespace qrobust
