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

// Numerical robustness oracle: exact relative robustness along a separable
// direction by bisection on the PPT test, and a random-restart local search
// over mixtures of product states for the absolute robustness.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qrobust/robustness.hpp"
#include "qrobust/states.hpp"
#include "qrobust/tolerances.hpp"

namespace qrobust {

// Smallest s >= 0 with (rho + s rho_s) / (1 + s) PPT, to relative precision
// `precision`: the returned s is PPT and s - precision (1 + s) is not (or s = 0).
// Throws NotSeparableDirection if rho_s is not PPT and ImproperDirection if
// no s <= 2^16 works.
double bisect_relative_robustness(const DensityMatrix& rho, const DensityMatrix& rho_s,
                                  double precision = 1e-10, const Tolerances& tol = {});

// Same search on raw matrices; `ppt_tests` accumulates the number of PPT
// evaluations. rho_s must already be known to be PPT.
double bisect_relative_robustness(const ComplexMatrix4& rho, const ComplexMatrix4& rho_s,
                                  double precision, const Tolerances& tol, long* ppt_tests);

// sum_t w_t |a_t><a_t| (x) |b_t><b_t| / sum_t w_t, with Bloch angles
// angles[t] = (theta_a, phi_a, theta_b, phi_b).
struct ProductMixture {
  std::vector<double> weights;                 // nonnegative, not all zero
  std::vector<std::array<double, 4>> angles;

  static ProductMixture random(std::mt19937_64& rng, int terms);

  std::vector<double> probabilities() const;
  ComplexMatrix4 matrix() const;
  DensityMatrix state(const Tolerances& tol = {}) const;
};

struct OracleOptions {
  int terms = 16;
  int sweeps = 8;
  double angle_step = 0.3;
  double weight_step = 0.1;
  double precision = 1e-10;
  bool parallel = true;  // restarts across OpenMP threads; results are identical
  double flag_threshold = 1e-3;
};

struct OracleResult {
  double s_direction = 0.0;  // along sigma_k, or I/4 when no certificate exists
  double s_best = 0.0;
  DensityMatrix best_direction = DensityMatrix::maximally_mixed();
  std::string best_source;   // "sigma_k", "maximally_mixed" or "restart <n>"
  long evaluations = 0;      // candidate directions tried
  long ppt_tests = 0;
  bool converged = false;
  std::optional<double> s_formula;
  double gap_to_formula = 0.0;  // s_formula - s_best; NaN without a formula
  bool flagged = false;         // gap_to_formula above the flag threshold
};

// Upper bound on min over separable rho_s of R(rho || rho_s). Deterministic
// for fixed (budget, seed); restart r draws from seed + r.
OracleResult minimize_absolute_robustness(const DensityMatrix& rho, int budget, std::uint64_t seed,
                                          const OracleOptions& options = {},
                                          const Tolerances& tol = {});

struct Check {
  std::string name;
  double value = 0.0;
  double limit = 0.0;
  bool passed = false;
};

struct VerificationReport {
  double s_formula = 0.0;
  double s_bisection = 0.0;
  double bisection_error = 0.0;
  double pseudomixture_residual = 0.0;
  double plane_residual = 0.0;
  double trace_residual = 0.0;
  PptResult ppt_rho_p;
  PptResult ppt_rho_pp;
  double concurrence_rho_p = 0.0;
  double concurrence_rho_pp = 0.0;
  double concurrence_at_s = 0.0;
  std::optional<OracleResult> oracle;
  std::vector<Check> checks;
  bool passed = false;
};

// Bundles the certificate invariants and the bisection cross-check. When
// oracle_budget > 0 the absolute-robustness search is run as well; its
// minimality gap is reported but never fails the verdict.
VerificationReport verify_certificate(const DensityMatrix& rho, const RobustnessCertificate& cert,
                                      int oracle_budget = 0, std::uint64_t seed = 0,
                                      const Tolerances& tol = {});

}  // namespace qrobust
