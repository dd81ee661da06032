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
#include <random>

#include "qrobust/coset.hpp"
#include "qrobust/errors.hpp"
#include "qrobust/robustness.hpp"
#include "qrobust/sampling.hpp"
#include "qrobust/wootters.hpp"
#include "test_util.hpp"

namespace qrobust {
namespace {

using coset::CosetParams;
using testing::identity_defect;

CosetParams zero_angles(std::array<double, 4> lambda) {
  CosetParams p;
  p.lambda = lambda;
  return p;
}

TEST(Coset, MatrixO) {
  const ComplexMatrix4 o = coset::matrix_O();
  EXPECT_LE(identity_defect(transpose(o) * o), 1e-15);
  const double h = 1 / std::sqrt(2.0);
  for (const Complex& z : o.a) {
    EXPECT_EQ(z.imag(), 0.0);
    EXPECT_TRUE(z.real() == 0.0 || std::abs(std::abs(z.real()) - h) == 0.0);
  }
  const ComplexMatrix4 eta = coset::matrix_eta();
  EXPECT_LE(max_abs(transpose(o) * eta * eta * o - sigma_yy()), 1e-15);
}

TEST(Coset, MatrixEta) {
  const ComplexMatrix4 eta = coset::matrix_eta();
  EXPECT_EQ(eta * eta, testing::diag(-1, 1, -1, 1));
  EXPECT_EQ(adjoint(eta) * eta, ComplexMatrix4::identity());
  EXPECT_EQ(eta * coset::matrix_eta_inverse(), ComplexMatrix4::identity());
  EXPECT_EQ(coset::matrix_eta_inverse()(0, 0), Complex(0, -1));
}

TEST(Coset, YIdentityAtZeroAngles) {
  EXPECT_EQ(coset::build_Y(zero_angles({1, 0, 0, 0})), ComplexMatrix4::identity());
}

TEST(Coset, YSingleTheta) {
  CosetParams p = zero_angles({1, 0, 0, 0});
  p.theta1 = 0.3;
  const ComplexMatrix4 y = coset::build_Y(p);
  EXPECT_LE(identity_defect(transpose(y) * y), 1e-12);
  // One 2x2 hyperbolic block, identity elsewhere.
  int touched = 0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const Complex z = y(r, c);
      if (r == c && std::abs(z - Complex(1)) < 1e-15) continue;
      if (z == Complex(0)) continue;
      ++touched;
      const double mag = std::abs(z);
      EXPECT_TRUE(std::abs(mag - std::cosh(0.3)) < 1e-15 || std::abs(mag - std::sinh(0.3)) < 1e-15);
    }
  EXPECT_EQ(touched, 4);
}

TEST(Coset, OrthogonalityChainOnRandomDraws) {
  double y_worst = 0, x_worst = 0;
  for (int i = 0; i < 1000; ++i) {
    std::mt19937_64 rng(derive_seed(41, i));
    const CosetParams p = coset::random_params(rng, 2.0);
    const ComplexMatrix4 y = coset::build_Y(p);
    const ComplexMatrix4 x = coset::build_X(p);
    y_worst = std::max(y_worst, identity_defect(transpose(y) * y));
    x_worst = std::max(x_worst, identity_defect(transpose(x) * sigma_yy() * x));
  }
  EXPECT_LE(y_worst, 1e-10);
  EXPECT_LE(x_worst, 1e-10);
}

TEST(Coset, XAtZeroAnglesIsTildeOrthonormal) {
  const ComplexMatrix4 x = coset::build_X(zero_angles({1, 0, 0, 0}));
  EXPECT_LE(max_abs(x - transpose(coset::matrix_O()) * coset::matrix_eta_inverse()), 0.0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      EXPECT_NEAR(std::abs(inner(x.column(i), spin_flip(x.column(j))) - Complex(i == j)), 0.0, 1e-15);
}

TEST(Coset, ClosedFormXBellLimit) {
  const std::array<double, 4> p{0.7, 0.1, 0.1, 0.1};
  const auto xs = coset::closed_form_x(zero_angles(p));
  const auto& b = bell_basis();
  const Complex phase[4] = {Complex(0, -1), 1, Complex(0, -1), 1};
  for (int i = 0; i < 4; ++i) {
    EXPECT_LE(max_abs(xs[i] - (phase[i] * std::sqrt(p[i])) * b[i]), 1e-15) << i;
  }
}

TEST(Coset, ClosedFormXZeroLambda) {
  std::mt19937_64 rng(1);
  CosetParams p = coset::random_params(rng, 1.0);
  p.lambda = {0.6, 0.4, 0.0, 0.0};
  const auto xs = coset::closed_form_x(p);
  EXPECT_EQ(max_abs(xs[2]), 0.0);
  EXPECT_EQ(max_abs(xs[3]), 0.0);
}

TEST(Coset, ClosedFormXMatchesColumns) {
  double worst = 0.0, norm_gap = 0.0;
  for (int i = 0; i < 1000; ++i) {
    std::mt19937_64 rng(derive_seed(42, i));
    const CosetParams p = coset::random_params(rng, 2.0);
    const ComplexMatrix4 x = coset::build_X(p);
    const auto xs = coset::closed_form_x(p);
    const auto k = coset::k_closed_form(p);
    double total = 0, want = 0;
    for (int c = 0; c < 4; ++c) {
      worst = std::max(worst, max_abs(xs[c] - Complex(std::sqrt(p.lambda[c])) * x.column(c)));
      total += norm_sq(xs[c]);
      want += p.lambda[c] * k[c];
    }
    norm_gap = std::max(norm_gap, std::abs(total - want));
  }
  EXPECT_LE(worst, 1e-10);
  EXPECT_LE(norm_gap, 1e-10);
}

TEST(Coset, KClosedFormExamples) {
  const auto k0 = coset::k_closed_form(zero_angles({1, 0, 0, 0}));
  for (double k : k0) EXPECT_EQ(k, 1.0);
  CosetParams p = zero_angles({1, 0, 0, 0});
  p.phi1 = 0.5;
  const auto k = coset::k_closed_form(p);
  EXPECT_NEAR(k[0], std::cosh(1.0), 1e-14);
  EXPECT_NEAR(k[0], norm_sq(coset::build_X(p).column(0)), 1e-14);
}

TEST(Coset, KClosedFormMatchesGram) {
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    std::mt19937_64 rng(derive_seed(43, i));
    const CosetParams p = coset::random_params(rng, 2.0);
    const ComplexMatrix4 x = coset::build_X(p);
    const auto k = coset::k_closed_form(p);
    for (int c = 0; c < 4; ++c) worst = std::max(worst, std::abs(k[c] - norm_sq(x.column(c))));
  }
  EXPECT_LE(worst, 1e-9);
}

TEST(Coset, Validation) {
  CosetParams p = zero_angles({0.7, 0.1, 0.1, 0.1});
  p.xi1 = -0.1;
  EXPECT_THROW(coset::validate(p), ValidationError);
  p.xi1 = 0.1;
  p.lambda = {0.1, 0.7, 0.1, 0.1};
  EXPECT_THROW(coset::validate(p), ValidationError);
  p.lambda = {0.7, 0.1, 0.1, -0.1};
  EXPECT_THROW(coset::validate(p), ValidationError);
  p.lambda = {0, 0, 0, 0};
  EXPECT_THROW(coset::density_from_params(p), DegenerateInput);
}

TEST(Coset, NormalizationRescalesLambda) {
  std::mt19937_64 rng(2);
  CosetParams p = coset::random_params(rng, 1.0);
  for (double& l : p.lambda) l *= 7.0;
  const CosetParams n = coset::normalized(p);
  const auto k = coset::k_closed_form(n);
  double t = 0;
  for (int i = 0; i < 4; ++i) t += n.lambda[i] * k[i];
  EXPECT_NEAR(t, 1.0, 1e-10);
}

TEST(Coset, DensityBellDiagonalLimit) {
  const DensityMatrix rho = coset::density_from_params(zero_angles({0.7, 0.1, 0.1, 0.1}));
  const DensityMatrix want = bell_diagonal(BellWeights::from_array({0.7, 0.1, 0.1, 0.1}));
  EXPECT_LE(max_abs(rho.matrix() - want.matrix()), 1e-15);
  const DensityMatrix pure = coset::density_from_params(zero_angles({1, 0, 0, 0}));
  EXPECT_LE(max_abs(pure.matrix() - testing::projector(testing::vec(1, 0, 0, 1))), 1e-15);
}

TEST(Coset, RoundTripLambdaAndK) {
  double lw = 0, kw = 0;
  for (int i = 0; i < 500; ++i) {
    const CosetParams p = coset::normalized(sample_coset_params(derive_seed(44, i)));
    const DensityMatrix rho = coset::density_from_params(p);
    const auto d = decompose(rho);
    const auto k = coset::k_closed_form(p);
    for (int c = 0; c < 4; ++c) {
      lw = std::max(lw, std::abs(d.lambda[c] - p.lambda[c]));
      kw = std::max(kw, std::abs(*d.k_norm[c] - k[c]));
    }
    // The closed-form certificate sees the same K.
    if (d.concurrence > 0) {
      const auto cert = robustness(rho, d);
      const double m = std::min({k[1] + k[2], k[1] + k[3], k[2] + k[3]});
      EXPECT_NEAR(cert.s, d.concurrence * m / 2, 1e-8);
    }
  }
  EXPECT_LE(lw, 1e-8);
  EXPECT_LE(kw, 1e-8);
}

TEST(Coset, BellLimitRobustnessIsConcurrence) {
  const DensityMatrix rho = coset::density_from_params(zero_angles({0.55, 0.2, 0.15, 0.1}));
  const auto d = decompose(rho);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(*d.k_norm[i], 1.0, 1e-12);
  EXPECT_NEAR(robustness(rho, d).s, d.concurrence, 1e-12);
}

}  // namespace
}  // namespace qrobust
