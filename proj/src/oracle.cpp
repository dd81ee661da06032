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

#include "qrobust/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qrobust/errors.hpp"
#include "qrobust/wootters.hpp"

namespace qrobust {
namespace {

constexpr double kBracketCap = 65536.0;  // 2^16

bool ppt_at(const ComplexMatrix4& rho, const ComplexMatrix4& dir, double s, const Tolerances& tol,
            long* ppt_tests) {
  if (ppt_tests) ++*ppt_tests;
  return is_separable_ppt(mix(rho, dir, s), tol).separable;
}

// lo is known NPT, hi known PPT.
double bisect_bracket(const ComplexMatrix4& rho, const ComplexMatrix4& dir, double lo, double hi,
                      double precision, const Tolerances& tol, long* ppt_tests) {
  while (hi - lo > precision * (1.0 + hi)) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (ppt_at(rho, dir, mid, tol, ppt_tests)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

Matrix2 bloch_projector(double theta, double phi) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex off = c * s * std::polar(1.0, -phi);
  return {Complex(c * c), off, std::conj(off), Complex(s * s)};
}

struct RestartOutcome {
  double s = std::numeric_limits<double>::infinity();
  ProductMixture mixture;
  long evaluations = 0;
  long ppt_tests = 0;
  bool quiet_last_sweep = false;
};

RestartOutcome run_restart(const ComplexMatrix4& rho, std::uint64_t seed, const OracleOptions& opt,
                           const Tolerances& tol) {
  RestartOutcome out;
  std::mt19937_64 rng(seed);
  ProductMixture pm = ProductMixture::random(rng, opt.terms);
  try {
    out.s = bisect_relative_robustness(rho, pm.matrix(), opt.precision, tol, &out.ppt_tests);
  } catch (const ImproperDirection&) {
    out.mixture = pm;
    return out;  // s stays +inf; the merge ignores it
  }
  ++out.evaluations;

  double angle_step = opt.angle_step;
  double weight_step = opt.weight_step;
  for (int sweep = 0; sweep < opt.sweeps && out.s > 0.0; ++sweep) {
    bool improved = false;
    for (int t = 0; t < opt.terms && out.s > 0.0; ++t) {
      for (int c = 0; c < 5 && out.s > 0.0; ++c) {
        for (double sign : {1.0, -1.0}) {
          ProductMixture cand = pm;
          if (c == 0) {
            double& w = cand.weights[t];
            w = std::max(0.0, w + sign * weight_step);
            if (w == pm.weights[t]) continue;
            if (std::all_of(cand.weights.begin(), cand.weights.end(),
                            [](double x) { return x == 0.0; }))
              continue;
          } else {
            cand.angles[t][c - 1] += sign * angle_step;
          }
          ++out.evaluations;
          const ComplexMatrix4 m = cand.matrix();
          // A single PPT test at the current value rejects non-improving moves.
          if (!ppt_at(rho, m, out.s, tol, &out.ppt_tests)) continue;
          double s_new = 0.0;
          if (!ppt_at(rho, m, 0.0, tol, &out.ppt_tests)) {
            s_new = bisect_bracket(rho, m, 0.0, out.s, opt.precision, tol, &out.ppt_tests);
          }
          if (s_new < out.s) {
            out.s = s_new;
            pm = cand;
            improved = true;
            break;
          }
        }
      }
    }
    out.quiet_last_sweep = !improved;
    angle_step *= 0.5;
    weight_step *= 0.5;
  }
  if (out.s == 0.0) out.quiet_last_sweep = true;
  out.mixture = pm;
  return out;
}

}  // namespace

double bisect_relative_robustness(const ComplexMatrix4& rho, const ComplexMatrix4& rho_s,
                                  double precision, const Tolerances& tol, long* ppt_tests) {
  if (ppt_at(rho, rho_s, 0.0, tol, ppt_tests)) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  while (!ppt_at(rho, rho_s, hi, tol, ppt_tests)) {
    lo = hi;
    hi *= 2.0;
    if (hi > kBracketCap) {
      throw ImproperDirection("mixture stays entangled up to s = 2^16 along this direction");
    }
  }
  return bisect_bracket(rho, rho_s, lo, hi, precision, tol, ppt_tests);
}

double bisect_relative_robustness(const DensityMatrix& rho, const DensityMatrix& rho_s,
                                  double precision, const Tolerances& tol) {
  if (!(precision >= 1e-12)) throw BadWeights("bisection precision must be >= 1e-12");
  const PptResult dir = is_separable_ppt(rho_s, tol);
  if (!dir.separable) {
    throw NotSeparableDirection("direction is not PPT (min eigenvalue " +
                                std::to_string(dir.min_eigenvalue) + ")");
  }
  return bisect_relative_robustness(rho.matrix(), rho_s.matrix(), precision, tol, nullptr);
}

ProductMixture ProductMixture::random(std::mt19937_64& rng, int terms) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ProductMixture pm;
  pm.weights.resize(terms);
  pm.angles.resize(terms);
  for (int t = 0; t < terms; ++t) {
    pm.weights[t] = unit(rng);
    for (int q = 0; q < 2; ++q) {
      pm.angles[t][2 * q] = std::acos(1.0 - 2.0 * unit(rng));  // uniform on the sphere
      pm.angles[t][2 * q + 1] = 2.0 * std::numbers::pi * unit(rng);
    }
  }
  return pm;
}

std::vector<double> ProductMixture::probabilities() const {
  double total = 0.0;
  for (double w : weights) total += w;
  std::vector<double> p(weights.size());
  for (std::size_t t = 0; t < weights.size(); ++t) p[t] = weights[t] / total;
  return p;
}

ComplexMatrix4 ProductMixture::matrix() const {
  const std::vector<double> p = probabilities();
  ComplexMatrix4 m = ComplexMatrix4::zero();
  for (std::size_t t = 0; t < p.size(); ++t) {
    if (p[t] == 0.0) continue;
    const auto& a = angles[t];
    m = m + Complex(p[t], 0.0) * kron(bloch_projector(a[0], a[1]), bloch_projector(a[2], a[3]));
  }
  return m;
}

DensityMatrix ProductMixture::state(const Tolerances& tol) const {
  return DensityMatrix::from_matrix(matrix(), tol);
}

OracleResult minimize_absolute_robustness(const DensityMatrix& rho, int budget, std::uint64_t seed,
                                          const OracleOptions& options, const Tolerances& tol) {
  OracleResult res;
  res.gap_to_formula = std::numeric_limits<double>::quiet_NaN();

  std::optional<RobustnessCertificate> cert;
  try {
    cert = robustness(rho, tol);
    res.s_formula = cert->s;
  } catch (const RankDeficient&) {
  }

  // Fixed directions first, then restarts; ties keep the earliest.
  const DensityMatrix mixed = DensityMatrix::maximally_mixed();
  res.s_best = std::numeric_limits<double>::infinity();
  auto offer = [&](double s, const DensityMatrix& dir, std::string source, bool converged) {
    if (s < res.s_best) {
      res.s_best = s;
      res.best_direction = dir;
      res.best_source = std::move(source);
      res.converged = converged;
    }
  };

  if (cert && cert->s > 0.0) {
    try {
      ++res.evaluations;
      res.s_direction = bisect_relative_robustness(rho.matrix(), cert->rho_pp.matrix(),
                                                   options.precision, tol, &res.ppt_tests);
      offer(res.s_direction, cert->rho_pp, "sigma_k", true);
    } catch (const Error&) {
      // A vertex that is numerically not PPT is simply skipped.
    }
  }
  ++res.evaluations;
  const double s_mixed =
      bisect_relative_robustness(rho.matrix(), mixed.matrix(), options.precision, tol, &res.ppt_tests);
  if (!(cert && cert->s > 0.0)) res.s_direction = s_mixed;
  offer(s_mixed, mixed, "maximally_mixed", true);

  if (res.s_best > 0.0 && budget > 0) {
    std::vector<RestartOutcome> outcomes(budget);
    const ComplexMatrix4 m = rho.matrix();
#pragma omp parallel for schedule(dynamic) if (options.parallel)
    for (int r = 0; r < budget; ++r) {
      outcomes[r] = run_restart(m, seed + static_cast<std::uint64_t>(r), options, tol);
    }
    for (int r = 0; r < budget; ++r) {
      const auto& o = outcomes[r];
      res.evaluations += o.evaluations;
      res.ppt_tests += o.ppt_tests;
      if (o.s < res.s_best) {
        offer(o.s, o.mixture.state(tol), "restart " + std::to_string(r), o.quiet_last_sweep);
      }
    }
  }

  if (res.s_formula) {
    res.gap_to_formula = *res.s_formula - res.s_best;
    res.flagged = res.gap_to_formula > options.flag_threshold;
  }
  return res;
}

VerificationReport verify_certificate(const DensityMatrix& rho, const RobustnessCertificate& cert,
                                      int oracle_budget, std::uint64_t seed, const Tolerances& tol) {
  VerificationReport rep;
  rep.s_formula = cert.s;
  rep.s_bisection = bisect_relative_robustness(rho, cert.rho_pp, tol.bisection, tol);
  rep.bisection_error = std::abs(rep.s_bisection - rep.s_formula);
  rep.pseudomixture_residual = cert.residuals.pseudomixture;
  rep.plane_residual = cert.s > 0.0 ? cert.residuals.plane : 0.0;
  rep.trace_residual = cert.residuals.trace;
  rep.ppt_rho_p = is_separable_ppt(cert.rho_p, tol);
  rep.ppt_rho_pp = is_separable_ppt(cert.rho_pp, tol);
  rep.concurrence_rho_p = cert.residuals.concurrence_rho_p;
  rep.concurrence_rho_pp = cert.residuals.concurrence_rho_pp;
  rep.concurrence_at_s =
      concurrence(DensityMatrix::from_matrix(mix(rho.matrix(), cert.rho_pp.matrix(), cert.s), tol), tol);

  auto upper = [&](std::string name, double value, double limit) {
    rep.checks.push_back({std::move(name), value, limit, value <= limit});
  };
  auto lower = [&](std::string name, double value, double limit) {
    rep.checks.push_back({std::move(name), value, limit, value >= limit});
  };
  upper("pseudomixture", rep.pseudomixture_residual, tol.identity);
  upper("plane", rep.plane_residual, tol.identity);
  upper("trace", rep.trace_residual, tol.identity);
  lower("ppt_rho_p", rep.ppt_rho_p.min_eigenvalue, -tol.ppt);
  lower("ppt_rho_pp", rep.ppt_rho_pp.min_eigenvalue, -tol.ppt);
  upper("concurrence_rho_p", rep.concurrence_rho_p, tol.identity);
  upper("concurrence_rho_pp", rep.concurrence_rho_pp, tol.identity);
  upper("concurrence_at_s", rep.concurrence_at_s, tol.identity);
  upper("bisection_agreement", rep.bisection_error, tol.oracle_agreement);

  if (oracle_budget > 0) {
    rep.oracle = minimize_absolute_robustness(rho, oracle_budget, seed, {}, tol);
    // Soundness only: the search may beat the formula, which is a finding, not a failure.
    upper("oracle_upper_bound", rep.oracle->s_best - rep.s_formula, tol.oracle_agreement);
  }

  rep.passed = std::all_of(rep.checks.begin(), rep.checks.end(), [](const Check& c) { return c.passed; });
  return rep;
}

}  // namespace qrobust
