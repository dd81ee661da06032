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

#include "qrobust/states.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "qrobust/errors.hpp"

namespace qrobust {
namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

Matrix2 mul2(const Matrix2& a, const Matrix2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Matrix2 adjoint2(const Matrix2& a) {
  return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

void check_su2(const Matrix2& u, const char* name) {
  const Matrix2 p = mul2(adjoint2(u), u);
  double defect = std::max({std::abs(p[0] - 1.0), std::abs(p[1]), std::abs(p[2]),
                            std::abs(p[3] - 1.0)});
  if (defect > 1e-12) {
    throw ValidationError(std::string(name) + " unitarity", defect,
                          std::string(name) + " is not unitary: |u^dagger u - I| = " + fmt(defect));
  }
  const double det_defect = std::abs(u[0] * u[3] - u[1] * u[2] - 1.0);
  if (det_defect > 1e-12) {
    throw ValidationError(std::string(name) + " determinant", det_defect,
                          std::string(name) + " is not special unitary: |det - 1| = " +
                              fmt(det_defect));
  }
}

}  // namespace

StateDiagnostics diagnose(const ComplexMatrix4& m) {
  StateDiagnostics d;
  d.finite = is_finite(m);
  if (!d.finite) return d;
  d.max_asymmetry = hermitian_defect(m);
  const Complex tr = trace(m);
  d.trace_deficit = 1.0 - tr.real();
  d.trace_imag = tr.imag();
  ComplexMatrix4 h;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  d.min_eigenvalue = hermitian_eigenvalues(h)[3];
  return d;
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix4& m, const Tolerances& tol) {
  const StateDiagnostics d = diagnose(m);
  if (!d.finite) {
    throw ValidationError("finiteness", 0.0, "density matrix has a non-finite entry");
  }
  if (d.max_asymmetry > tol.state_hermiticity) {
    throw ValidationError("hermiticity", d.max_asymmetry,
                          "density matrix is not Hermitian: max asymmetry |rho - rho^dagger| = " +
                              fmt(d.max_asymmetry));
  }
  const double trace_err = std::hypot(d.trace_deficit, d.trace_imag);
  if (trace_err > tol.state_trace) {
    throw ValidationError("trace", d.trace_deficit,
                          "density matrix trace is " + fmt(1.0 - d.trace_deficit) +
                              ": trace deficit " + fmt(d.trace_deficit));
  }
  if (d.min_eigenvalue < -tol.state_psd) {
    throw ValidationError("positivity", -d.min_eigenvalue,
                          "density matrix is not positive semidefinite: minimum eigenvalue " +
                              fmt(d.min_eigenvalue));
  }
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix(Complex(0.25) * ComplexMatrix4::identity());
}

DensityMatrix DensityMatrix::pure(const ComplexVector4& psi) {
  const double n = norm_sq(psi);
  if (!(n > 0.0)) throw ValidationError("normalization", 0.0, "pure state vector is zero");
  return from_matrix(Complex(1.0 / n) * outer(psi, psi));
}

LocalUnitary LocalUnitary::from_factors(const Matrix2& u1, const Matrix2& u2) {
  check_su2(u1, "u1");
  check_su2(u2, "u2");
  return LocalUnitary(u1, u2);
}

LocalUnitary LocalUnitary::identity() {
  const Matrix2 id{1.0, 0.0, 0.0, 1.0};
  return LocalUnitary(id, id);
}

ComplexMatrix4 kron(const Matrix2& a, const Matrix2& b) {
  ComplexMatrix4 r;
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t i2 = 0; i2 < 2; ++i2)
      for (std::size_t j1 = 0; j1 < 2; ++j1)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
          r(2 * i1 + i2, 2 * j1 + j2) = a[2 * i1 + j1] * b[2 * i2 + j2];
  return r;
}

ComplexMatrix4 LocalUnitary::matrix() const { return kron(u1_, u2_); }

BellWeights BellWeights::from_array(const std::array<double, 4>& p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!(p[i] >= 0.0)) {
      throw ValidationError("nonnegativity", p[i], "Bell weight p" + std::to_string(i + 1) +
                                                       " = " + fmt(p[i]) + " is negative");
    }
    if (i > 0 && p[i] > p[i - 1]) {
      throw ValidationError("ordering", p[i] - p[i - 1], "Bell weights must be descending");
    }
    sum += p[i];
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw ValidationError("normalization", 1.0 - sum,
                          "Bell weights sum to " + fmt(sum) + " instead of 1");
  }
  return BellWeights(p);
}

const ComplexMatrix4& sigma_yy() {
  static const ComplexMatrix4 m = [] {
    ComplexMatrix4 s;
    s(0, 3) = -1.0;
    s(1, 2) = 1.0;
    s(2, 1) = 1.0;
    s(3, 0) = -1.0;
    return s;
  }();
  return m;
}

const std::array<ComplexVector4, 4>& bell_basis() {
  static const std::array<ComplexVector4, 4> b = [] {
    const double h = 1.0 / std::sqrt(2.0);
    std::array<ComplexVector4, 4> v{};
    v[0] = ComplexVector4{{h, 0.0, 0.0, h}};
    v[1] = ComplexVector4{{0.0, h, h, 0.0}};
    v[2] = ComplexVector4{{0.0, h, -h, 0.0}};
    v[3] = ComplexVector4{{h, 0.0, 0.0, -h}};
    return v;
  }();
  return b;
}

// sigma_yy is a signed antidiagonal, so the conjugation reduces to
// (S M^* S)_{ij} = s_i s_j conj(M_{3-i, 3-j}) with s = (-1, 1, 1, -1).
ComplexMatrix4 spin_flip(const ComplexMatrix4& m) {
  constexpr double sign[4] = {-1.0, 1.0, 1.0, -1.0};
  ComplexMatrix4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = (sign[i] * sign[j]) * std::conj(m(3 - i, 3 - j));
  return r;
}

ComplexMatrix4 spin_flip(const DensityMatrix& rho) { return spin_flip(rho.matrix()); }

ComplexVector4 spin_flip(const ComplexVector4& x) {
  return ComplexVector4{{-std::conj(x[3]), std::conj(x[2]), std::conj(x[1]), -std::conj(x[0])}};
}

ComplexMatrix4 partial_transpose(const ComplexMatrix4& m) {
  ComplexMatrix4 r;
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t i2 = 0; i2 < 2; ++i2)
      for (std::size_t j1 = 0; j1 < 2; ++j1)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
          r(2 * i1 + i2, 2 * j1 + j2) = m(2 * i1 + j2, 2 * j1 + i2);
  return r;
}

ComplexMatrix4 partial_transpose(const DensityMatrix& rho) { return partial_transpose(rho.matrix()); }

PptResult is_separable_ppt(const ComplexMatrix4& m, const Tolerances& tol) {
  const double min_eig = hermitian_eigenvalues(partial_transpose(m), tol)[3];
  return {min_eig >= -tol.ppt, min_eig};
}

PptResult is_separable_ppt(const DensityMatrix& rho, const Tolerances& tol) {
  return is_separable_ppt(rho.matrix(), tol);
}

DensityMatrix bell_diagonal(const BellWeights& w) {
  ComplexMatrix4 m;
  const auto& basis = bell_basis();
  for (std::size_t k = 0; k < 4; ++k) m = m + Complex(w.p()[k]) * outer(basis[k], basis[k]);
  return DensityMatrix::from_matrix(m);
}

DensityMatrix apply_local_unitary(const DensityMatrix& rho, const LocalUnitary& lu,
                                  const Tolerances& tol) {
  const ComplexMatrix4 u = lu.matrix();
  return DensityMatrix::from_matrix(u * rho.matrix() * adjoint(u), tol);
}

ComplexMatrix4 mix(const ComplexMatrix4& rho, const ComplexMatrix4& sigma, double s) {
  const double inv = 1.0 / (1.0 + s);
  ComplexMatrix4 r;
  for (std::size_t i = 0; i < 16; ++i) r.a[i] = inv * (rho.a[i] + s * sigma.a[i]);
  return r;
}

DensityMatrix singlet() { return DensityMatrix::pure(bell_basis()[2]); }

DensityMatrix werner(double singlet_weight) {
  const ComplexMatrix4 m = Complex(singlet_weight) * singlet().matrix() +
                           Complex((1.0 - singlet_weight) * 0.25) * ComplexMatrix4::identity();
  return DensityMatrix::from_matrix(m);
}

}  // namespace qrobust
