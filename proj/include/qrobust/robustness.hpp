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

// Closed-form robustness of entanglement and its separable witnesses.
//
// In the x' basis of a full-rank Wootters decomposition a state is a point
// with coordinates lambda_i (P_i = lambda_i K_i on the tetrahedron). The
// separable set is the octahedron bounded by the planes
//   S_1: lambda_1 = lambda_2 + lambda_3 + lambda_4    and    S'_1: lambda_1 = 0,
// together with their analogues for j = 2, 3, 4. Octahedron vertices are the
// edge states (|x'_i><x'_i| + |x'_j><x'_j|) / (K_i + K_j); the ones used here
// are sigma_1 = (1,2), sigma_2 = (3,4), sigma_3 = (2,4), sigma_4 = (2,3).

#include <array>
#include <utility>

#include "qrobust/states.hpp"
#include "qrobust/tolerances.hpp"
#include "qrobust/wootters.hpp"

namespace qrobust {

using Pair = std::pair<int, int>;  // 1-based indices

// lambda_1 - lambda_2 - lambda_3 - lambda_4, written through P_i / K_i.
double separability_gap(const WoottersDecomposition& d);

// 1-based pair of Wootters indices that sigma_k mixes.
Pair sigma_pair(int k);

// Coordinates of the edge state (i, j) in the x' basis.
std::array<double, 4> edge_coords(const WoottersDecomposition& d, Pair edge);
DensityMatrix edge_state(const WoottersDecomposition& d, Pair edge, const Tolerances& tol = {});
DensityMatrix sigma_vertex(const WoottersDecomposition& d, int k, const Tolerances& tol = {});

// sum_i c_i |x'_i><x'_i|
ComplexMatrix4 diagonal_in_x_prime(const WoottersDecomposition& d, const std::array<double, 4>& c);

// Convex weights a = (a_2, a_3, a_4) on sigma_2, sigma_3, sigma_4.
using VertexWeights = std::array<double, 3>;

// lambda'' of a_2 sigma_2 + a_3 sigma_3 + a_4 sigma_4 (a point of S'_1).
std::array<double, 4> rho_double_prime_coords(const WoottersDecomposition& d, const VertexWeights& a);
// lambda' of the point where the ray from that lambda'' through rho meets S_1.
std::array<double, 4> rho_prime_coords(const WoottersDecomposition& d, const VertexWeights& a);

// Robustness of rho relative to a_2 sigma_2 + a_3 sigma_3 + a_4 sigma_4.
double plane_robustness_s1(const WoottersDecomposition& d, const VertexWeights& a);

// Vertices of the face of S_j (j = 2, 3, 4) used by plane_robustness_other,
// in weight order: the (1, j) edge first, then the other two by ascending k.
std::array<Pair, 3> plane_vertices(int plane);

// Robustness of rho relative to b_1 v_1 + b_2 v_2 + b_3 v_3 with v from
// plane_vertices(plane).
double plane_robustness_other(const WoottersDecomposition& d, int plane, const VertexWeights& b);

// Relative robustness toward a separable state with x'-basis coordinates c:
// C / (c_2 + c_3 + c_4 - c_1), or +inf when that ray never reaches S_1.
double relative_robustness_diagonal(const WoottersDecomposition& d, const std::array<double, 4>& c);

struct CertificateResiduals {
  double pseudomixture = 0.0;  // max |rho - (1+s) rho' + s rho''|
  double plane = 0.0;          // |l'_1 - l'_2 - l'_3 - l'_4|
  double trace = 0.0;          // |sum l'_i K_i - 1|
  double ppt_min_eig_rho_p = 0.0;
  double ppt_min_eig_rho_pp = 0.0;
  double concurrence_rho_p = 0.0;
  double concurrence_rho_pp = 0.0;
};

struct RobustnessCertificate {
  double s = 0.0;
  int k_index = 2;
  Pair pair{3, 4};
  double concurrence = 0.0;
  std::array<double, 4> k{};
  std::array<double, 4> lambda{};
  std::array<double, 4> lambda_prime{};
  std::array<double, 4> lambda_double_prime{};
  DensityMatrix rho_p = DensityMatrix::maximally_mixed();
  DensityMatrix rho_pp = DensityMatrix::maximally_mixed();
  CertificateResiduals residuals;
};

// s = C min(K_i + K_j) / 2 over pairs in {2,3,4}, with rho'' = sigma_k for the
// vertex opposite the minimizing pair; ties go to the lexicographically
// smallest pair. Separable inputs yield s = 0, rho' = rho, rho'' = sigma_2.
// Throws RankDeficient unless all four Wootters values are nonzero.
RobustnessCertificate robustness(const DensityMatrix& rho, const Tolerances& tol = {});
RobustnessCertificate robustness(const DensityMatrix& rho, const WoottersDecomposition& d,
                                 const Tolerances& tol = {});

}  // namespace qrobust
