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

// Six-angle parameterization of the Wootters basis through the coset
// SO(4,C)/SO(4,R): Y = Y(theta) Y(xi) Y(phi), X = O^T eta^-1 Y, with the
// columns of X the tilde-normalized Wootters vectors |x'_i>.

#include <array>
#include <random>

#include "qrobust/numerics.hpp"
#include "qrobust/states.hpp"

namespace qrobust::coset {

struct CosetParams {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double xi1 = 0.0;  // >= 0
  double xi2 = 0.0;  // >= 0
  double phi1 = 0.0;
  double phi2 = 0.0;
  std::array<double, 4> lambda{};  // >= 0, descending; normalized by density_from_params
};

// Throws ValidationError for xi < 0, negative or unsorted lambda, non-finite values.
void validate(const CosetParams& p);

// Fixed orthogonal matrix whose rows are the Bell vectors.
ComplexMatrix4 matrix_O();
// diag(i, 1, i, 1)
ComplexMatrix4 matrix_eta();
ComplexMatrix4 matrix_eta_inverse();

// Complex orthogonal, Y^T Y = I.
ComplexMatrix4 build_Y(const CosetParams& p);
// X^T (sigma_y x sigma_y) X = I.
ComplexMatrix4 build_X(const CosetParams& p);

// Explicit formulas for |x_i> = sqrt(lambda_i) |x'_i>, using p.lambda as given.
std::array<ComplexVector4, 4> closed_form_x(const CosetParams& p);
// Explicit formulas for K_i = <x'_i|x'_i>.
std::array<double, 4> k_closed_form(const CosetParams& p);

// Copy of p with lambda rescaled so that sum lambda_i K_i = 1. Throws
// DegenerateInput if every lambda is zero.
CosetParams normalized(const CosetParams& p);

// rho = sum_i lambda_i |x'_i><x'_i| with lambda normalized.
DensityMatrix density_from_params(const CosetParams& p);

// Angles uniform in [-range, range] (xi in [0, range]), lambda a sorted
// uniform point of the simplex.
CosetParams random_params(std::mt19937_64& rng, double range);

}  // namespace qrobust::coset
