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

#include "qrobust/wootters.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qrobust/errors.hpp"

namespace qrobust {
namespace {

// Spectral factors below this fraction of the top eigenvalue are dropped
// before forming the tilde overlaps; they are pure rounding.
constexpr double kSpectralFloor = 1e-14;

// Square root of a PSD Hermitian matrix; rounding-level eigenvalues are dropped.
ComplexMatrix4 psd_sqrt(const ComplexMatrix4& m, const Tolerances& tol) {
  const HermitianEigen eig = hermitian_eig(m, tol);
  const double floor = kSpectralFloor * std::max(eig.values[0], 0.0);
  ComplexMatrix4 r = ComplexMatrix4::zero();
  for (int k = 0; k < 4; ++k) {
    const double mu = eig.values[k];
    if (mu <= floor) continue;
    r = r + Complex(std::sqrt(mu), 0.0) * outer(eig.vectors[k], eig.vectors[k]);
  }
  return r;
}

double combine(const std::array<double, 4>& l) {
  return std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
}

}  // namespace

bool WoottersDecomposition::full_rank() const noexcept {
  return std::all_of(k_norm.begin(), k_norm.end(), [](const auto& k) { return k.has_value(); });
}

std::array<double, 4> WoottersDecomposition::k() const {
  if (!full_rank()) {
    throw RankDeficient("Wootters decomposition has a vanishing lambda; K_i undefined");
  }
  return {*k_norm[0], *k_norm[1], *k_norm[2], *k_norm[3]};
}

ComplexVector4 WoottersDecomposition::x_prime(int i) const {
  if (i < 0 || i > 3 || !k_norm[i]) {
    throw RankDeficient("x'_" + std::to_string(i + 1) + " undefined: lambda vanishes");
  }
  return Complex(1.0 / std::sqrt(lambda[i]), 0.0) * x[i];
}

WoottersDecomposition decompose(const DensityMatrix& rho, const Tolerances& tol) {
  const HermitianEigen eig = hermitian_eig(rho.matrix(), tol);
  const double mu_max = std::max(eig.values[0], 0.0);

  WoottersDecomposition out;
  std::array<ComplexVector4, 4> v{};
  for (int j = 0; j < 4; ++j) {
    const double mu = eig.values[j];
    if (mu > tol.rank_relative * mu_max) ++out.rank;
    if (mu > kSpectralFloor * mu_max) v[j] = Complex(std::sqrt(mu), 0.0) * eig.vectors[j];
  }

  std::array<ComplexVector4, 4> vt{};
  for (int j = 0; j < 4; ++j) vt[j] = spin_flip(v[j]);
  ComplexMatrix4 tau;
  for (int j = 0; j < 4; ++j)
    for (int l = j; l < 4; ++l) {
      // tau is symmetric in exact arithmetic; mirror so Takagi sees it exactly.
      const Complex t = inner(v[j], vt[l]);
      tau(j, l) = t;
      tau(l, j) = t;
    }

  const TakagiFactorization tk = takagi(tau, tol);
  const ComplexMatrix4 check = tk.w * tau * transpose(tk.w);
  double residual = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      residual = std::max(residual, std::abs(check(r, c) - (r == c ? Complex(tk.d[r]) : Complex())));
  if (!(residual <= tol.takagi_failure)) {
    throw NumericalFailure("Takagi residual " + std::to_string(residual) + " exceeds limit");
  }

  out.lambda = tk.d;
  const double floor = tol.rank_relative * std::max(out.lambda[0], 1e-30);
  for (int i = 0; i < 4; ++i) {
    ComplexVector4 xi;
    for (int j = 0; j < 4; ++j) xi = xi + std::conj(tk.w(i, j)) * v[j];
    out.x[i] = xi;
    out.p_coord[i] = norm_sq(xi);
    if (out.lambda[i] > floor) out.k_norm[i] = out.p_coord[i] / out.lambda[i];
  }
  out.concurrence = combine(out.lambda);
  return out;
}

std::array<double, 4> concurrence_lambdas(const DensityMatrix& rho, const Tolerances& tol) {
  // sqrt(rho) rho~ sqrt(rho) = A A^dagger with A = sqrt(rho) (sy x sy) sqrt(rho)^*,
  // and A is complex symmetric, so its Takagi values are the lambdas directly.
  // That skips the square root of near-zero eigenvalues, which costs half the digits.
  const ComplexMatrix4 root = psd_sqrt(rho.matrix(), tol);
  ComplexMatrix4 a = root * sigma_yy() * conj(root);
  a = Complex(0.5, 0.0) * (a + transpose(a));
  return takagi(a, tol).d;
}

double concurrence(const DensityMatrix& rho, const Tolerances& tol) {
  return combine(concurrence_lambdas(rho, tol));
}

double tilde_norm(const ComplexMatrix4& m, const Tolerances& tol) {
  if (!is_finite(m)) throw NumericalFailure("tilde_norm: non-finite entry");
  const double defect = hermitian_defect(m);
  if (defect > tol.hermitian_input) {
    throw NonHermitianInput("tilde_norm: max asymmetry " + std::to_string(defect));
  }
  return std::sqrt(std::abs(trace(m * spin_flip(m)).real()));
}

double tilde_distance(const DensityMatrix& a, const DensityMatrix& b, const Tolerances& tol) {
  return tilde_norm(a.matrix() - b.matrix(), tol);
}

double defining_relation_residual(const WoottersDecomposition& d) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Complex target = i == j ? Complex(d.lambda[i]) : Complex();
      worst = std::max(worst, std::abs(inner(d.x[i], spin_flip(d.x[j])) - target));
    }
  return worst;
}

double reconstruction_residual(const WoottersDecomposition& d, const DensityMatrix& rho) {
  ComplexMatrix4 sum = ComplexMatrix4::zero();
  for (const auto& xi : d.x) sum = sum + outer(xi, xi);
  return max_abs(sum - rho.matrix());
}

}  // namespace qrobust
