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

// Two-qubit density matrices in the product basis |uu>, |ud>, |du>, |dd>, the
// spin-flip (tilde) map, partial transposition, and Bell-diagonal states.

#include <array>

#include "qrobust/numerics.hpp"
#include "qrobust/tolerances.hpp"

namespace qrobust {

// Hermitian, unit-trace, positive semidefinite 4x4 matrix. Immutable once built.
class DensityMatrix {
 public:
  // Validates the invariants and throws ValidationError naming the first
  // violated one. The matrix is stored exactly as given.
  static DensityMatrix from_matrix(const ComplexMatrix4& m, const Tolerances& tol = {});
  static DensityMatrix maximally_mixed();
  // |psi><psi| / <psi|psi>
  static DensityMatrix pure(const ComplexVector4& psi);

  const ComplexMatrix4& matrix() const noexcept { return m_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;

 private:
  explicit DensityMatrix(const ComplexMatrix4& m) : m_(m) {}
  ComplexMatrix4 m_;
};

struct StateDiagnostics {
  bool finite = true;
  double max_asymmetry = 0.0;  // max |M - M^dagger|
  double trace_deficit = 0.0;  // 1 - Re Tr M
  double trace_imag = 0.0;
  double min_eigenvalue = 0.0;  // of the Hermitian part
};

StateDiagnostics diagnose(const ComplexMatrix4& m);

using Matrix2 = std::array<Complex, 4>;  // row-major 2x2

// U1 (x) U2 with both factors in SU(2).
class LocalUnitary {
 public:
  static LocalUnitary from_factors(const Matrix2& u1, const Matrix2& u2);
  static LocalUnitary identity();

  const Matrix2& u1() const noexcept { return u1_; }
  const Matrix2& u2() const noexcept { return u2_; }
  ComplexMatrix4 matrix() const;

 private:
  LocalUnitary(const Matrix2& u1, const Matrix2& u2) : u1_(u1), u2_(u2) {}
  Matrix2 u1_;
  Matrix2 u2_;
};

ComplexMatrix4 kron(const Matrix2& a, const Matrix2& b);

// Bell weights p1..p4 for psi1 = (|uu>+|dd>)/sqrt2, psi2 = (|ud>+|du>)/sqrt2,
// psi3 = (|ud>-|du>)/sqrt2, psi4 = (|uu>-|dd>)/sqrt2. Nonnegative, descending,
// summing to one.
class BellWeights {
 public:
  static BellWeights from_array(const std::array<double, 4>& p);
  const std::array<double, 4>& p() const noexcept { return p_; }

 private:
  explicit BellWeights(const std::array<double, 4>& p) : p_(p) {}
  std::array<double, 4> p_;
};

// sigma_y (x) sigma_y: antidiagonal (-1, 1, 1, -1) read top-right to bottom-left.
const ComplexMatrix4& sigma_yy();

// The four Bell vectors in the order used by BellWeights (index 0..3).
const std::array<ComplexVector4, 4>& bell_basis();

// (sigma_y x sigma_y) M^* (sigma_y x sigma_y)
ComplexMatrix4 spin_flip(const ComplexMatrix4& m);
ComplexMatrix4 spin_flip(const DensityMatrix& rho);
// (sigma_y x sigma_y) |x^*>
ComplexVector4 spin_flip(const ComplexVector4& x);

ComplexMatrix4 partial_transpose(const ComplexMatrix4& m);
ComplexMatrix4 partial_transpose(const DensityMatrix& rho);

struct PptResult {
  bool separable = false;
  double min_eigenvalue = 0.0;
};

// Peres-Horodecki test; exact for two qubits.
PptResult is_separable_ppt(const ComplexMatrix4& m, const Tolerances& tol = {});
PptResult is_separable_ppt(const DensityMatrix& rho, const Tolerances& tol = {});

DensityMatrix bell_diagonal(const BellWeights& w);

DensityMatrix apply_local_unitary(const DensityMatrix& rho, const LocalUnitary& lu,
                                  const Tolerances& tol = {});

// (rho + s * sigma) / (1 + s)
ComplexMatrix4 mix(const ComplexMatrix4& rho, const ComplexMatrix4& sigma, double s);

// Named reference states.
DensityMatrix singlet();
DensityMatrix werner(double singlet_weight);

}  // namespace qrobust
