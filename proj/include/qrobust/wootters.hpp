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

// Wootters decomposition rho = sum_i |x_i><x_i| with <x_i|x~_j> = lambda_i
// delta_ij, plus the concurrence and the spin-flip norm and distance.

#include <array>
#include <optional>

#include "qrobust/numerics.hpp"
#include "qrobust/states.hpp"
#include "qrobust/tolerances.hpp"

namespace qrobust {

struct WoottersDecomposition {
  std::array<double, 4> lambda{};        // descending, >= 0
  std::array<ComplexVector4, 4> x{};     // subnormalized |x_i>
  std::array<std::optional<double>, 4> k_norm{};  // K_i = lambda_i^-1 <x_i|x_i>; empty if lambda_i ~ 0
  std::array<double, 4> p_coord{};       // P_i = <x_i|x_i>
  double concurrence = 0.0;
  int rank = 0;  // rank of rho

  // True when every K_i is defined, i.e. all four lambda_i are nonzero.
  bool full_rank() const noexcept;
  // K_i for a full-rank decomposition; throws RankDeficient otherwise.
  std::array<double, 4> k() const;
  // |x'_i> = |x_i> / sqrt(lambda_i); throws RankDeficient if K_i is undefined.
  ComplexVector4 x_prime(int i) const;
};

// Throws NumericalFailure if the Takagi residual exceeds tol.takagi_failure.
WoottersDecomposition decompose(const DensityMatrix& rho, const Tolerances& tol = {});

// Square roots of the eigenvalues of rho*rho~, descending, computed from the
// Hermitian matrix sqrt(rho) rho~ sqrt(rho).
std::array<double, 4> concurrence_lambdas(const DensityMatrix& rho, const Tolerances& tol = {});

// max(0, l1 - l2 - l3 - l4), clamped to [0, 1].
double concurrence(const DensityMatrix& rho, const Tolerances& tol = {});

// sqrt|Tr(M M~)|. Throws NonHermitianInput if M is not Hermitian.
double tilde_norm(const ComplexMatrix4& m, const Tolerances& tol = {});

// tilde_norm(a - b). Vanishes when a == b; note it can also vanish for
// distinct states (the form Tr(M M~) is indefinite).
double tilde_distance(const DensityMatrix& a, const DensityMatrix& b, const Tolerances& tol = {});

// max_ij |<x_i|x~_j> - lambda_i delta_ij|
double defining_relation_residual(const WoottersDecomposition& d);
// max |sum_i |x_i><x_i| - rho|
double reconstruction_residual(const WoottersDecomposition& d, const DensityMatrix& rho);

}  // namespace qrobust
