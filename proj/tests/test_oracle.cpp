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

#include <cmath>

#include "qrobust/errors.hpp"
#include "qrobust/oracle.hpp"
#include "qrobust/robustness.hpp"
#include "qrobust/sampling.hpp"
#include "qrobust/wootters.hpp"
#include "test_util.hpp"

namespace qrobust {
namespace {

const DensityMatrix& mixed() {
  static const DensityMatrix m = DensityMatrix::maximally_mixed();
  return m;
}

DensityMatrix bell7() { return bell_diagonal(BellWeights::from_array({0.7, 0.1, 0.1, 0.1})); }

TEST(Bisection, SingletTowardMixedIsTwo) {
  EXPECT_NEAR(bisect_relative_robustness(singlet(), mixed(), 1e-10), 2.0, 1e-6);
}

TEST(Bisection, SeparableIsZero) {
  EXPECT_EQ(bisect_relative_robustness(mixed(), mixed()), 0.0);
  EXPECT_EQ(bisect_relative_robustness(werner(0.3), mixed()), 0.0);
}

TEST(Bisection, RejectsEntangledDirection) {
  EXPECT_THROW(bisect_relative_robustness(bell7(), singlet()), NotSeparableDirection);
}

TEST(Bisection, RejectsTinyPrecision) {
  EXPECT_THROW(bisect_relative_robustness(bell7(), mixed(), 1e-14), BadWeights);
}

TEST(Bisection, ImproperDirection) {
  // |uu><uu| never washes out the part of the singlet it does not touch.
  const DensityMatrix up = DensityMatrix::pure(testing::vec(1, 0, 0, 0));
  EXPECT_THROW(bisect_relative_robustness(singlet(), up), ImproperDirection);
}

TEST(Bisection, ResultBracketsTheThreshold) {
  for (int i = 0; i < 20; ++i) {
    const DensityMatrix rho = sample_state(Ensemble::ginibre, derive_seed(51, i));
    const double p = 1e-8;
    const double s = bisect_relative_robustness(rho, mixed(), p);
    if (s == 0.0) continue;
    EXPECT_TRUE(is_separable_ppt(mix(rho.matrix(), mixed().matrix(), s)).separable);
    EXPECT_FALSE(is_separable_ppt(mix(rho.matrix(), mixed().matrix(), std::max(0.0, s - p * (1 + s)))).separable);
  }
}

TEST(Bisection, MatchesCertificate) {
  int tested = 0;
  for (int i = 0; tested < 50; ++i) {
    const DensityMatrix rho = sample_state(Ensemble::ginibre, derive_seed(52, i));
    const auto c = robustness(rho);
    if (c.s == 0.0) continue;
    ++tested;
    EXPECT_NEAR(bisect_relative_robustness(rho, c.rho_pp, 1e-10), c.s, 1e-6);
  }
}

TEST(Bisection, WernerTowardMixedHasClosedForm) {
  // singlet weight w: (w/(1+s)) <= 1/3  <=>  s = 3w - 1.
  for (double w : {0.5, 0.7, 0.9}) {
    EXPECT_NEAR(bisect_relative_robustness(werner(w), mixed(), 1e-12), 3 * w - 1, 1e-9);
  }
}

TEST(ProductMixture, IsSeparableAndNormalized) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const ProductMixture pm = ProductMixture::random(rng, 16);
    const DensityMatrix s = pm.state();
    EXPECT_NEAR(trace(s.matrix()).real(), 1.0, 1e-14);
    EXPECT_TRUE(is_separable_ppt(s).separable);
    EXPECT_LE(concurrence(s), 1e-9);
    double t = 0;
    for (double p : pm.probabilities()) t += p;
    EXPECT_NEAR(t, 1.0, 1e-15);
  }
}

TEST(ProductMixture, SingleTermIsProductPure) {
  ProductMixture pm;
  pm.weights = {1.0};
  pm.angles = {{0.0, 0.0, M_PI, 0.0}};  // |u> (x) |d>
  EXPECT_LE(max_abs(pm.matrix() - testing::diag(0, 1, 0, 0)), 1e-15);
}

TEST(Oracle, SeparableGivesZero) {
  const auto r = minimize_absolute_robustness(mixed(), 5, 1);
  EXPECT_EQ(r.s_best, 0.0);
  EXPECT_TRUE(r.converged);
  ASSERT_TRUE(r.s_formula);
  EXPECT_EQ(*r.s_formula, 0.0);
  EXPECT_FALSE(r.flagged);
}

TEST(Oracle, BellDiagonalNeverBeatsNorExceedsFormulaMuch) {
  const auto r = minimize_absolute_robustness(bell7(), 20, 2);
  EXPECT_LE(r.s_best, 0.4 + 1e-6);
  EXPECT_GE(r.gap_to_formula, -1e-6);
  EXPECT_TRUE(is_separable_ppt(r.best_direction).separable);
  EXPECT_LE(concurrence(r.best_direction), 1e-9);
}

TEST(Oracle, PureBellStateFallsBackToSearch) {
  const DensityMatrix bell = DensityMatrix::pure(testing::vec(1, 0, 0, 1));
  const auto r = minimize_absolute_robustness(bell, 10, 3);
  EXPECT_FALSE(r.s_formula);
  EXPECT_TRUE(std::isnan(r.gap_to_formula));
  EXPECT_NEAR(r.s_direction, 2.0, 1e-6);  // toward I/4
  EXPECT_LE(r.s_best, 2.0 + 1e-9);
  // Robustness of a pure state is its concurrence; the search can only bound it from above.
  EXPECT_GE(r.s_best, 1.0 - 1e-9);
  EXPECT_TRUE(is_separable_ppt(r.best_direction).separable);
}

TEST(Oracle, UpperBoundSoundnessAndReportedDirection) {
  for (int i = 0; i < 4; ++i) {
    const DensityMatrix rho = sample_state(Ensemble::ginibre, derive_seed(53, i));
    const auto r = minimize_absolute_robustness(rho, 4, 10 + i);
    ASSERT_TRUE(r.s_formula);
    EXPECT_LE(r.s_best, *r.s_formula + 1e-6);
    EXPECT_LE(r.s_best, r.s_direction + 1e-9);
    EXPECT_TRUE(is_separable_ppt(r.best_direction).separable);
    EXPECT_LE(concurrence(r.best_direction), 1e-9);
    // The reported direction really reaches separability at s_best.
    EXPECT_TRUE(is_separable_ppt(mix(rho.matrix(), r.best_direction.matrix(), r.s_best)).separable);
    EXPECT_EQ(r.flagged, r.gap_to_formula > 1e-3);
  }
}

TEST(Oracle, DeterministicAndParallelMatchesSerial) {
  const DensityMatrix rho = sample_state(Ensemble::ginibre, derive_seed(54, 3));
  OracleOptions serial;
  serial.parallel = false;
  const auto a = minimize_absolute_robustness(rho, 6, 7);
  const auto b = minimize_absolute_robustness(rho, 6, 7, serial);
  const auto c = minimize_absolute_robustness(rho, 6, 7);
  EXPECT_EQ(a.s_best, b.s_best);
  EXPECT_EQ(a.best_direction, b.best_direction);
  EXPECT_EQ(a.evaluations, b.evaluations);
  EXPECT_EQ(a.s_best, c.s_best);
}

TEST(Verify, BellDiagonalPasses) {
  const DensityMatrix rho = bell7();
  const auto rep = verify_certificate(rho, robustness(rho));
  EXPECT_TRUE(rep.passed);
  EXPECT_NEAR(rep.s_bisection, 0.4, 1e-6);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name;
}

TEST(Verify, SeparableTriviallyPasses) {
  const auto rep = verify_certificate(mixed(), robustness(mixed()));
  EXPECT_TRUE(rep.passed);
  EXPECT_EQ(rep.s_formula, 0.0);
  EXPECT_EQ(rep.s_bisection, 0.0);
}

TEST(Verify, ZeroToleranceFails) {
  const DensityMatrix rho = sample_state(Ensemble::ginibre, derive_seed(55, 0));
  Tolerances strict;
  strict.identity = 0.0;
  strict.oracle_agreement = 0.0;
  EXPECT_FALSE(verify_certificate(rho, robustness(rho), 0, 0, strict).passed);
}

TEST(Verify, WithOracle) {
  const DensityMatrix rho = bell7();
  const auto rep = verify_certificate(rho, robustness(rho), 3, 1);
  ASSERT_TRUE(rep.oracle);
  EXPECT_TRUE(rep.passed);
}

}  // namespace
}  // namespace qrobust
