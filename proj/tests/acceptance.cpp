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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Tolerances below are fixed and deliberately not read from QROBUST_TOL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "qrobust/coset.hpp"
#include "qrobust/oracle.hpp"
#include "qrobust/robustness.hpp"
#include "qrobust/sampling.hpp"
#include "qrobust/states.hpp"
#include "qrobust/wootters.hpp"
#include "test_util.hpp"

namespace {

using namespace qrobust;
using qrobust::testing::identity_defect;

constexpr std::uint64_t kMaster = 0;  // the CLI's default master seed

struct Outcome {
  bool passed = true;
  std::string detail;
  std::vector<std::string> notes;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // stated runtime limit; infinity when none
  std::function<Outcome()> body;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Ginibre corpus shared by criteria 3-5: states derive_seed(0, i), i < 200.
struct CorpusEntry {
  std::size_t index;
  DensityMatrix rho;
  WoottersDecomposition d;
  RobustnessCertificate cert;
};

const std::vector<CorpusEntry>& entangled_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> out;
    for (std::size_t i = 0; i < 200; ++i) {
      const DensityMatrix rho = sample_state(Ensemble::ginibre, derive_seed(kMaster, i));
      const WoottersDecomposition d = decompose(rho);
      if (!d.full_rank() || d.concurrence <= 0.0) continue;
      out.push_back({i, rho, d, robustness(rho, d)});
    }
    return out;
  }();
  return corpus;
}

Outcome bell_diagonal_identity() {
  Outcome o;
  double ds = 0.0, dk = 0.0;
  int found = 0;
  for (std::uint64_t i = 0; found < 100; ++i) {
    std::mt19937_64 rng(derive_seed(kMaster, i));
    const BellWeights w = sample_bell_weights(rng);
    const double p1 = *std::max_element(w.p().begin(), w.p().end());
    if (p1 <= 0.5) continue;  // rejection: keep the entangled ones
    ++found;
    const RobustnessCertificate c = robustness(bell_diagonal(w));
    ds = std::max(ds, std::abs(c.s - (2 * p1 - 1)));
    for (double k : c.k) dk = std::max(dk, std::abs(k - 1.0));
  }
  o.passed = ds <= 1e-9 && dk <= 1e-9;
  o.detail = "max|s-(2p1-1)|=" + fmt("%.2e", ds) + " max|K-1|=" + fmt("%.2e", dk) + " (100 states)";
  return o;
}

Outcome defining_relation() {
  Outcome o;
  double rel = 0.0, rec = 0.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const DensityMatrix rho = sample_state(Ensemble::ginibre, derive_seed(kMaster, i));
    const WoottersDecomposition d = decompose(rho);
    rel = std::max(rel, defining_relation_residual(d));
    rec = std::max(rec, reconstruction_residual(d, rho));
  }
  o.passed = rel <= 1e-9 && rec <= 1e-9;
  o.detail = "relation=" + fmt("%.2e", rel) + " reconstruction=" + fmt("%.2e", rec) + " (1000 states)";
  return o;
}

Outcome boundary_exactness() {
  Outcome o;
  double at_s = 0.0;
  double below = std::numeric_limits<double>::infinity();
  int violations = 0;
  for (const auto& e : entangled_corpus()) {
    const ComplexMatrix4& sigma = e.cert.rho_pp.matrix();
    const double s = e.cert.s;
    at_s = std::max(at_s, concurrence(DensityMatrix::from_matrix(mix(e.rho.matrix(), sigma, s))));
    const double c = concurrence(DensityMatrix::from_matrix(mix(e.rho.matrix(), sigma, 0.999 * s)));
    below = std::min(below, c);
    if (c <= 1e-6) {
      ++violations;
      // Along sigma_k the concurrence falls linearly to zero, so at 0.999 s
      // it is exactly 0.001 C / (1 + 0.999 s); small-C states cannot clear 1e-6.
      const double predicted = 1e-3 * e.d.concurrence / (1 + 0.999 * s);
      o.notes.push_back("state " + std::to_string(e.index) + ": C=" + fmt("%.4e", e.d.concurrence) +
                        " s=" + fmt("%.4e", s) + " C(0.999s)=" + fmt("%.4e", c) +
                        " predicted 0.001C/(1+0.999s)=" + fmt("%.4e", predicted));
    }
  }
  o.passed = at_s <= 1e-9 && below > 1e-6;
  o.detail = "max C(s)=" + fmt("%.2e", at_s) + " min C(0.999s)=" + fmt("%.2e", below) + " (" +
             std::to_string(entangled_corpus().size()) + " entangled states, " +
             std::to_string(violations) + " below 1e-6)";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  double worst = 0.0;
  for (const auto& e : entangled_corpus()) {
    worst = std::max(worst, std::abs(bisect_relative_robustness(e.rho, e.cert.rho_pp, 1e-10) - e.cert.s));
  }
  o.passed = worst <= 1e-6;
  o.detail = "max|bisect-s|=" + fmt("%.2e", worst);
  return o;
}

Outcome pseudomixture() {
  Outcome o;
  double worst = 0.0;
  for (const auto& e : entangled_corpus()) {
    const double s = e.cert.s;
    const ComplexMatrix4 r = e.rho.matrix() - Complex(1 + s) * e.cert.rho_p.matrix() +
                             Complex(s) * e.cert.rho_pp.matrix();
    worst = std::max(worst, max_abs(r));
  }
  o.passed = worst <= 1e-9;
  o.detail = "max|rho-(1+s)rho'+s rho''|=" + fmt("%.2e", worst);
  return o;
}

Outcome coset_closed_form() {
  Outcome o;
  double kerr = 0.0, yty = 0.0, xsx = 0.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const coset::CosetParams p = coset::normalized(sample_coset_params(derive_seed(kMaster, i)));
    const ComplexMatrix4 y = coset::build_Y(p);
    const ComplexMatrix4 x = coset::build_X(p);
    yty = std::max(yty, identity_defect(transpose(y) * y));
    xsx = std::max(xsx, identity_defect(transpose(x) * sigma_yy() * x));
    const auto kc = coset::k_closed_form(p);
    for (int k = 0; k < 4; ++k) kerr = std::max(kerr, std::abs(kc[k] - norm_sq(x.column(k))));
  }
  o.passed = kerr <= 1e-9 && yty <= 1e-10 && xsx <= 1e-10;
  o.detail = "K err=" + fmt("%.2e", kerr) + " Y^TY-I=" + fmt("%.2e", yty) + " X^T(syy)X-I=" + fmt("%.2e", xsx) +
             " (1000 draws)";
  return o;
}

Outcome tilde_norm_invariance() {
  Outcome o;
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    std::mt19937_64 rng(derive_seed(kMaster, 90000 + i));
    const ComplexMatrix4 m = random_hermitian(rng);
    const ComplexMatrix4 u = random_local_unitary(rng).matrix();
    ComplexMatrix4 r = u * m * adjoint(u);
    r = Complex(0.5) * (r + adjoint(r));
    const double before = tilde_norm(m);
    worst = std::max(worst, std::abs(tilde_norm(r) - before) / before);
  }
  o.passed = worst <= 1e-9;
  o.detail = "max relative change=" + fmt("%.2e", worst) + " (500 pairs)";
  return o;
}

Outcome known_thresholds() {
  Outcome o;
  const double s = bisect_relative_robustness(singlet(), DensityMatrix::maximally_mixed(), 1e-10);
  // Werner boundary by bisection on the singlet weight itself.
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (is_separable_ppt(werner(mid)).separable ? lo : hi) = mid;
  }
  const double boundary = 0.5 * (lo + hi);
  const double pt = is_separable_ppt(singlet()).min_eigenvalue;
  const bool a = std::abs(s - 2.0) <= 1e-6;
  const bool b = std::abs(boundary - 1.0 / 3.0) <= 1e-8;
  const bool c = std::abs(pt + 0.5) <= 1e-10;
  o.passed = a && b && c;
  o.detail = "bisect(singlet,I/4)=" + fmt("%.12f", s) + " werner=" + fmt("%.12f", boundary) +
             " min eig PT(singlet)=" + fmt("%.12f", pt);
  return o;
}

Outcome minimality_probe() {
  Outcome o;
  int states = 0, flagged = 0;
  double worst_excess = -std::numeric_limits<double>::infinity();
  for (const auto& e : entangled_corpus()) {
    if (states == 20) break;
    ++states;
    const OracleResult r = minimize_absolute_robustness(e.rho, 50, kMaster);
    worst_excess = std::max(worst_excess, r.s_best - e.cert.s);
    if (r.s_best > e.cert.s + 1e-6) o.passed = false;
    if (r.flagged) {
      ++flagged;
      o.notes.push_back("FLAG state " + std::to_string(e.index) + ": s_formula=" + fmt("%.6f", e.cert.s) +
                        " s_best=" + fmt("%.6f", r.s_best) + " gap=" + fmt("%.3e", r.gap_to_formula) +
                        " via " + r.best_source);
    }
  }
  o.detail = "max(s_best-s_formula)=" + fmt("%.2e", worst_excess) + " (" + std::to_string(states) +
             " states, budget 50, " + std::to_string(flagged) + " flagged for gap > 1e-3)";
  return o;
}

}  // namespace

int main() {
  const double none = std::numeric_limits<double>::infinity();
  const std::vector<Criterion> criteria = {
      {1, "Bell-diagonal identity", 1.0, bell_diagonal_identity},
      {2, "Wootters defining relation", 5.0, defining_relation},
      {3, "Certificate boundary exactness", 5.0, boundary_exactness},
      {4, "Oracle equivalence along sigma_k", 30.0, oracle_equivalence},
      {5, "Pseudomixture identity", none, pseudomixture},
      {6, "Closed-form K", 5.0, coset_closed_form},
      {7, "Tilde-norm local-unitary invariance", none, tilde_norm_invariance},
      {8, "Known thresholds", none, known_thresholds},
      {9, "Minimality probe", 300.0, minimality_probe},
  };

  // Corpus setup is shared; time it separately so per-criterion numbers are fair.
  const auto t0 = std::chrono::steady_clock::now();
  entangled_corpus();
  const double setup = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("corpus: %zu full-rank entangled of 200 Ginibre states (master seed %llu), %.3f s\n",
              entangled_corpus().size(), static_cast<unsigned long long>(kMaster), setup);

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& ex) {
      o.passed = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_seconds;
    const bool ok = o.passed && in_time;
    if (!ok) ++failed;
    std::string timing = fmt("%.3f s", secs);
    if (std::isfinite(c.budget_seconds)) timing += fmt(" < %.0f s", c.budget_seconds) + (in_time ? "" : " EXCEEDED");
    std::printf("%s  %d. %s: %s [%s]\n", ok ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), timing.c_str());
    for (const auto& n : o.notes) std::printf("        %s\n", n.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
