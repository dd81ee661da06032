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

// Batch evaluation of a seeded ensemble: decomposition, closed form and the
// bisection cross-check per state, optionally the absolute-robustness search.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrobust/oracle.hpp"
#include "qrobust/sampling.hpp"
#include "qrobust/tolerances.hpp"

namespace qrobust {

struct CorpusOptions {
  bool oracle = false;
  int oracle_budget = 20;
  OracleOptions oracle_options{};
};

struct CorpusRow {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  int rank = 0;
  double concurrence = 0.0;
  std::array<double, 4> k{};  // NaN where undefined
  std::array<double, 4> p{};
  double min_pair_sum = 0.0;  // NaN unless full rank
  int k_index = 0;            // 0 unless full rank
  double s_formula = 0.0;     // NaN unless full rank
  double s_bisection = 0.0;   // along sigma_k (NaN unless full rank)
  double bisection_gap = 0.0; // |s_bisection - s_formula|
  std::optional<double> s_best;
  std::optional<double> gap;  // s_formula - s_best
  std::optional<double> k_closed_form_err;  // coset ensemble only
  std::string error;          // non-empty if the state could not be processed
};

CorpusRow evaluate_state(Ensemble ensemble, std::size_t index, std::uint64_t master_seed,
                         const CorpusOptions& options, const Tolerances& tol = {});

// Rows in index order. The parallel and serial versions produce identical rows.
std::vector<CorpusRow> evaluate_corpus(Ensemble ensemble, std::size_t n, std::uint64_t master_seed,
                                       const CorpusOptions& options = {}, const Tolerances& tol = {});
std::vector<CorpusRow> evaluate_corpus_serial(Ensemble ensemble, std::size_t n,
                                              std::uint64_t master_seed,
                                              const CorpusOptions& options = {},
                                              const Tolerances& tol = {});

std::string corpus_csv_header(Ensemble ensemble, bool oracle);
std::string corpus_csv_row(const CorpusRow& row, Ensemble ensemble, bool oracle);
std::string corpus_csv(const std::vector<CorpusRow>& rows, Ensemble ensemble, bool oracle);

}  // namespace qrobust
