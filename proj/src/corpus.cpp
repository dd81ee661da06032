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

#include "qrobust/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qrobust/coset.hpp"
#include "qrobust/errors.hpp"
#include "qrobust/json_io.hpp"
#include "qrobust/robustness.hpp"
#include "qrobust/wootters.hpp"

namespace qrobust {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void fill(CorpusRow& row, Ensemble ensemble, const CorpusOptions& options, const Tolerances& tol) {
  const DensityMatrix rho = sample_state(ensemble, row.seed);
  const WoottersDecomposition d = decompose(rho, tol);
  row.rank = d.rank;
  row.concurrence = d.concurrence;
  row.p = d.p_coord;
  for (int i = 0; i < 4; ++i) row.k[i] = d.k_norm[i].value_or(kNaN);
  row.min_pair_sum = row.s_formula = row.s_bisection = row.bisection_gap = kNaN;

  if (d.full_rank()) {
    const RobustnessCertificate cert = robustness(rho, d, tol);
    row.k_index = cert.k_index;
    row.min_pair_sum = cert.k[cert.pair.first - 1] + cert.k[cert.pair.second - 1];
    row.s_formula = cert.s;
    row.s_bisection = bisect_relative_robustness(rho, cert.rho_pp, tol.bisection, tol);
    row.bisection_gap = std::abs(row.s_bisection - row.s_formula);
  }
  if (ensemble == Ensemble::coset && d.full_rank()) {
    const auto kc = coset::k_closed_form(coset::normalized(sample_coset_params(row.seed)));
    double err = 0.0;
    for (int i = 0; i < 4; ++i) err = std::max(err, std::abs(kc[i] - row.k[i]));
    row.k_closed_form_err = err;
  }
  if (options.oracle) {
    OracleOptions o = options.oracle_options;
    o.parallel = false;  // states are already spread across threads
    const OracleResult res = minimize_absolute_robustness(rho, options.oracle_budget, row.seed, o, tol);
    row.s_best = res.s_best;
    row.gap = res.s_formula ? res.gap_to_formula : kNaN;
  }
}

std::string num(double x) { return std::isnan(x) ? "nan" : format_double(x); }

}  // namespace

CorpusRow evaluate_state(Ensemble ensemble, std::size_t index, std::uint64_t master_seed,
                         const CorpusOptions& options, const Tolerances& tol) {
  CorpusRow row;
  row.index = index;
  row.seed = derive_seed(master_seed, index);
  try {
    fill(row, ensemble, options, tol);
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

std::vector<CorpusRow> evaluate_corpus(Ensemble ensemble, std::size_t n, std::uint64_t master_seed,
                                       const CorpusOptions& options, const Tolerances& tol) {
  std::vector<CorpusRow> rows(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    rows[i] = evaluate_state(ensemble, static_cast<std::size_t>(i), master_seed, options, tol);
  }
  return rows;
}

std::vector<CorpusRow> evaluate_corpus_serial(Ensemble ensemble, std::size_t n,
                                              std::uint64_t master_seed,
                                              const CorpusOptions& options, const Tolerances& tol) {
  std::vector<CorpusRow> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rows.push_back(evaluate_state(ensemble, i, master_seed, options, tol));
  return rows;
}

std::string corpus_csv_header(Ensemble ensemble, bool oracle) {
  std::string h =
      "seed_index,seed,rank,concurrence,K1,K2,K3,K4,P1,P2,P3,P4,min_pair_sum,k_index,"
      "s_formula,s_bisection,bisection_gap";
  if (oracle) h += ",s_best,gap";
  if (ensemble == Ensemble::coset) h += ",k_closed_form_err";
  return h;
}

std::string corpus_csv_row(const CorpusRow& r, Ensemble ensemble, bool oracle) {
  std::string s = std::to_string(r.index) + "," + std::to_string(r.seed) + "," +
                  std::to_string(r.rank) + "," + num(r.concurrence);
  for (double k : r.k) s += "," + num(k);
  for (double p : r.p) s += "," + num(p);
  s += "," + num(r.min_pair_sum) + "," + std::to_string(r.k_index) + "," + num(r.s_formula) + "," +
       num(r.s_bisection) + "," + num(r.bisection_gap);
  if (oracle) s += "," + num(r.s_best.value_or(kNaN)) + "," + num(r.gap.value_or(kNaN));
  if (ensemble == Ensemble::coset) s += "," + num(r.k_closed_form_err.value_or(kNaN));
  return s;
}

std::string corpus_csv(const std::vector<CorpusRow>& rows, Ensemble ensemble, bool oracle) {
  std::string out = corpus_csv_header(ensemble, oracle) + "\n";
  for (const auto& r : rows) out += corpus_csv_row(r, ensemble, oracle) + "\n";
  return out;
}

}  // namespace qrobust
