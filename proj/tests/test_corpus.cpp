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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "qrobust/corpus.hpp"
#include "qrobust/properties.hpp"

namespace qrobust {
namespace {

TEST(Corpus, BellDiagonalRowsHaveUnitK) {
  const auto rows = evaluate_corpus(Ensemble::bell_diagonal, 100, 0);
  for (const auto& r : rows) {
    ASSERT_TRUE(r.error.empty()) << r.error;
    for (double k : r.k) EXPECT_NEAR(k, 1.0, 1e-9);
    EXPECT_NEAR(r.s_formula, r.concurrence, 1e-9);
  }
}

TEST(Corpus, ParallelMatchesSerial) {
  CorpusOptions opt;
  opt.oracle = true;
  opt.oracle_budget = 1;
  const auto a = evaluate_corpus(Ensemble::ginibre, 6, 7, opt);
  const auto b = evaluate_corpus_serial(Ensemble::ginibre, 6, 7, opt);
  EXPECT_EQ(corpus_csv(a, Ensemble::ginibre, true), corpus_csv(b, Ensemble::ginibre, true));
}

TEST(Corpus, CosetClosedFormColumn) {
  const auto rows = evaluate_corpus(Ensemble::coset, 100, 3);
  for (const auto& r : rows) {
    ASSERT_TRUE(r.k_closed_form_err);
    EXPECT_LE(*r.k_closed_form_err, 1e-9);
  }
  const std::string h = corpus_csv_header(Ensemble::coset, false);
  EXPECT_NE(h.find("k_closed_form_err"), std::string::npos);
  EXPECT_EQ(h.find("s_best"), std::string::npos);
}

TEST(Corpus, GinibreBisectionAgrees) {
  for (const auto& r : evaluate_corpus(Ensemble::ginibre, 50, 11)) {
    EXPECT_EQ(r.rank, 4);
    EXPECT_LE(r.bisection_gap, 1e-6);
    EXPECT_EQ(r.s_formula, r.concurrence * r.min_pair_sum / 2);
  }
}

TEST(Corpus, CsvShape) {
  const auto rows = evaluate_corpus(Ensemble::bures, 3, 1);
  const std::string csv = corpus_csv(rows, Ensemble::bures, false);
  const std::string header = csv.substr(0, csv.find('\n'));
  EXPECT_EQ(header.substr(0, 31), "seed_index,seed,rank,concurrenc");
  const auto columns = std::count(header.begin(), header.end(), ',');
  std::size_t pos = csv.find('\n') + 1;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end = csv.find('\n', pos);
    const std::string line = csv.substr(pos, end - pos);
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), columns);
    pos = end + 1;
  }
}

TEST(Properties, DefaultSuitePassesWithTenGroups) {
  PropertySuiteOptions opt;
  opt.corpus = 60;
  const auto results = run_property_suite(opt);
  EXPECT_GE(results.size(), 10u);
  for (const auto& r : results) {
    EXPECT_TRUE(r.passed) << r.group << "." << r.name << " worst " << r.worst << " limit " << r.limit;
    EXPECT_GT(r.samples, 0) << r.name;
  }
}

TEST(Properties, ZeroToleranceInjectsFailures) {
  PropertySuiteOptions opt;
  opt.corpus = 10;
  opt.oracle_states = 0;
  const auto results = run_property_suite(opt, apply_overrides({}, "0"));
  const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
  EXPECT_GT(failed, 0);
}

}  // namespace
}  // namespace qrobust
