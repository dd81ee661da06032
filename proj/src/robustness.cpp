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

#include "qrobust/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qrobust/errors.hpp"

namespace qrobust {
namespace {

constexpr double kWeightSlack = 1e-12;

void check_weights(const VertexWeights& a) {
  double sum = 0.0;
  for (double w : a) {
    if (!std::isfinite(w) || w < -kWeightSlack) {
      throw BadWeights("vertex weights must be finite and nonnegative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSlack) {
    throw BadWeights("vertex weights sum to " + std::to_string(sum) + ", expected 1");
  }
}

// 1 / (K_i + K_j) with 1-based indices.
double inv(const std::array<double, 4>& k, int i, int j) { return 1.0 / (k[i - 1] + k[j - 1]); }

}  // namespace

double separability_gap(const WoottersDecomposition& d) {
  const auto k = d.k();
  const auto& p = d.p_coord;
  return p[0] / k[0] - p[1] / k[1] - p[2] / k[2] - p[3] / k[3];
}

Pair sigma_pair(int k) {
  switch (k) {
    case 1: return {1, 2};
    case 2: return {3, 4};
    case 3: return {2, 4};
    case 4: return {2, 3};
    default: throw BadWeights("vertex index must be 1..4, got " + std::to_string(k));
  }
}

std::array<double, 4> edge_coords(const WoottersDecomposition& d, Pair edge) {
  const auto k = d.k();
  const auto [i, j] = edge;
  if (i < 1 || i > 4 || j < 1 || j > 4 || i == j) throw BadWeights("invalid edge");
  std::array<double, 4> c{};
  c[i - 1] = c[j - 1] = inv(k, i, j);
  return c;
}

ComplexMatrix4 diagonal_in_x_prime(const WoottersDecomposition& d, const std::array<double, 4>& c) {
  ComplexMatrix4 m = ComplexMatrix4::zero();
  for (int i = 0; i < 4; ++i) {
    if (c[i] == 0.0) continue;
    const ComplexVector4 xp = d.x_prime(i);
    m = m + Complex(c[i], 0.0) * outer(xp, xp);
  }
  return m;
}

DensityMatrix edge_state(const WoottersDecomposition& d, Pair edge, const Tolerances& tol) {
  return DensityMatrix::from_matrix(diagonal_in_x_prime(d, edge_coords(d, edge)), tol);
}

DensityMatrix sigma_vertex(const WoottersDecomposition& d, int k, const Tolerances& tol) {
  return edge_state(d, sigma_pair(k), tol);
}

std::array<double, 4> rho_double_prime_coords(const WoottersDecomposition& d, const VertexWeights& a) {
  check_weights(a);
  const auto k = d.k();
  const double i34 = inv(k, 3, 4), i24 = inv(k, 2, 4), i23 = inv(k, 2, 3);
  return {0.0, a[1] * i24 + a[2] * i23, a[0] * i34 + a[2] * i23, a[0] * i34 + a[1] * i24};
}

std::array<double, 4> rho_prime_coords(const WoottersDecomposition& d, const VertexWeights& a) {
  check_weights(a);
  const auto k = d.k();
  const auto& l = d.lambda;
  const double half_c = d.concurrence / 2.0;
  const double t2 = a[0] * inv(k, 3, 4), t3 = a[1] * inv(k, 2, 4), t4 = a[2] * inv(k, 2, 3);
  const double sum = t2 + t3 + t4;
  const double den = sum + half_c;
  return {sum * l[0] / den, (sum * l[1] + half_c * (t3 + t4)) / den,
          (sum * l[2] + half_c * (t2 + t4)) / den, (sum * l[3] + half_c * (t2 + t3)) / den};
}

double plane_robustness_s1(const WoottersDecomposition& d, const VertexWeights& a) {
  check_weights(a);
  const auto k = d.k();
  return d.concurrence /
         (2.0 * a[0] * inv(k, 3, 4) + 2.0 * a[1] * inv(k, 2, 4) + 2.0 * a[2] * inv(k, 2, 3));
}

std::array<Pair, 3> plane_vertices(int plane) {
  switch (plane) {
    case 2: return {Pair{1, 2}, Pair{2, 4}, Pair{2, 3}};
    case 3: return {Pair{1, 3}, Pair{3, 4}, Pair{2, 3}};
    case 4: return {Pair{1, 4}, Pair{3, 4}, Pair{2, 4}};
    default: throw BadWeights("plane must be 2, 3 or 4, got " + std::to_string(plane));
  }
}

double plane_robustness_other(const WoottersDecomposition& d, int plane, const VertexWeights& b) {
  check_weights(b);
  const auto verts = plane_vertices(plane);
  std::array<double, 4> c{};
  for (int v = 0; v < 3; ++v) {
    const auto e = edge_coords(d, verts[v]);
    for (int i = 0; i < 4; ++i) c[i] += b[v] * e[i];
  }
  return relative_robustness_diagonal(d, c);
}

double relative_robustness_diagonal(const WoottersDecomposition& d, const std::array<double, 4>& c) {
  d.k();  // full rank required
  if (d.concurrence == 0.0) return 0.0;
  const double den = c[1] + c[2] + c[3] - c[0];
  if (!(den > 0.0)) return std::numeric_limits<double>::infinity();
  return d.concurrence / den;
}

RobustnessCertificate robustness(const DensityMatrix& rho, const Tolerances& tol) {
  return robustness(rho, decompose(rho, tol), tol);
}

RobustnessCertificate robustness(const DensityMatrix& rho, const WoottersDecomposition& d,
                                 const Tolerances& tol) {
  if (!d.full_rank()) {
    throw RankDeficient("closed-form robustness needs a full-rank state (Wootters rank " +
                        std::to_string(d.rank) + ")");
  }
  RobustnessCertificate cert;
  cert.k = d.k();
  cert.lambda = d.lambda;
  cert.concurrence = d.concurrence;

  // Lexicographic order of the candidate pairs, so strict < keeps the first tie.
  struct Candidate {
    Pair pair;
    int k_index;
  };
  constexpr std::array<Candidate, 3> candidates{
      Candidate{{2, 3}, 4}, Candidate{{2, 4}, 3}, Candidate{{3, 4}, 2}};
  double best = std::numeric_limits<double>::infinity();
  const Candidate* chosen = &candidates[2];
  if (d.concurrence > 0.0) {
    for (const auto& cand : candidates) {
      const double sum = cert.k[cand.pair.first - 1] + cert.k[cand.pair.second - 1];
      if (sum < best) {
        best = sum;
        chosen = &cand;
      }
    }
  }
  cert.pair = chosen->pair;
  cert.k_index = chosen->k_index;

  VertexWeights a{};
  a[cert.k_index - 2] = 1.0;
  cert.lambda_double_prime = rho_double_prime_coords(d, a);
  cert.rho_pp = sigma_vertex(d, cert.k_index, tol);

  if (d.concurrence > 0.0) {
    cert.s = d.concurrence * best / 2.0;
    cert.lambda_prime = rho_prime_coords(d, a);
    cert.rho_p = DensityMatrix::from_matrix(diagonal_in_x_prime(d, cert.lambda_prime), tol);
  } else {
    cert.s = 0.0;
    cert.lambda_prime = d.lambda;
    cert.rho_p = rho;
  }

  auto& r = cert.residuals;
  const ComplexMatrix4 pseudo = Complex(1.0 + cert.s, 0.0) * cert.rho_p.matrix() -
                                Complex(cert.s, 0.0) * cert.rho_pp.matrix();
  r.pseudomixture = max_abs(rho.matrix() - pseudo);
  const auto& lp = cert.lambda_prime;
  r.plane = std::abs(lp[0] - lp[1] - lp[2] - lp[3]);
  double tr = 0.0;
  for (int i = 0; i < 4; ++i) tr += lp[i] * cert.k[i];
  r.trace = std::abs(tr - 1.0);
  r.ppt_min_eig_rho_p = is_separable_ppt(cert.rho_p, tol).min_eigenvalue;
  r.ppt_min_eig_rho_pp = is_separable_ppt(cert.rho_pp, tol).min_eigenvalue;
  r.concurrence_rho_p = concurrence(cert.rho_p, tol);
  r.concurrence_rho_pp = concurrence(cert.rho_pp, tol);
  return cert;
}

}  // namespace qrobust
