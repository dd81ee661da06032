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

// Fixed-size complex linear algebra for two-qubit operators: 4-vectors,
// 4x4 matrices, a Jacobi Hermitian eigensolver and a Takagi factorization.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "qrobust/tolerances.hpp"

namespace qrobust {

using Complex = std::complex<double>;

struct ComplexVector4 {
  std::array<Complex, 4> v{};

  Complex& operator[](std::size_t i) { return v[i]; }
  const Complex& operator[](std::size_t i) const { return v[i]; }

  friend bool operator==(const ComplexVector4&, const ComplexVector4&) = default;
};

// Row-major 4x4 complex matrix.
struct ComplexMatrix4 {
  std::array<Complex, 16> a{};

  Complex& operator()(std::size_t r, std::size_t c) { return a[r * 4 + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return a[r * 4 + c]; }

  static ComplexMatrix4 zero() { return {}; }
  static ComplexMatrix4 identity() {
    ComplexMatrix4 m;
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }
  static ComplexMatrix4 diagonal(const std::array<Complex, 4>& d) {
    ComplexMatrix4 m;
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = d[i];
    return m;
  }
  // Matrix whose columns are the given vectors.
  static ComplexMatrix4 from_columns(const std::array<ComplexVector4, 4>& cols) {
    ComplexMatrix4 m;
    for (std::size_t c = 0; c < 4; ++c)
      for (std::size_t r = 0; r < 4; ++r) m(r, c) = cols[c][r];
    return m;
  }
  ComplexVector4 column(std::size_t c) const {
    ComplexVector4 out;
    for (std::size_t r = 0; r < 4; ++r) out[r] = (*this)(r, c);
    return out;
  }

  friend bool operator==(const ComplexMatrix4&, const ComplexMatrix4&) = default;
};

// ---- vector algebra -------------------------------------------------------

inline ComplexVector4 operator+(const ComplexVector4& x, const ComplexVector4& y) {
  ComplexVector4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = x[i] + y[i];
  return r;
}
inline ComplexVector4 operator-(const ComplexVector4& x, const ComplexVector4& y) {
  ComplexVector4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = x[i] - y[i];
  return r;
}
inline ComplexVector4 operator*(Complex s, const ComplexVector4& x) {
  ComplexVector4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = s * x[i];
  return r;
}
inline ComplexVector4 conj(const ComplexVector4& x) {
  ComplexVector4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = std::conj(x[i]);
  return r;
}
// <x|y>, antilinear in x.
inline Complex inner(const ComplexVector4& x, const ComplexVector4& y) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += std::conj(x[i]) * y[i];
  return s;
}
inline double norm_sq(const ComplexVector4& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += std::norm(x[i]);
  return s;
}
inline double max_abs(const ComplexVector4& x) {
  double m = 0.0;
  for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

// ---- matrix algebra -------------------------------------------------------

inline ComplexMatrix4 operator+(const ComplexMatrix4& x, const ComplexMatrix4& y) {
  ComplexMatrix4 r;
  for (std::size_t i = 0; i < 16; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}
inline ComplexMatrix4 operator-(const ComplexMatrix4& x, const ComplexMatrix4& y) {
  ComplexMatrix4 r;
  for (std::size_t i = 0; i < 16; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}
inline ComplexMatrix4 operator*(Complex s, const ComplexMatrix4& x) {
  ComplexMatrix4 r;
  for (std::size_t i = 0; i < 16; ++i) r.a[i] = s * x.a[i];
  return r;
}
inline ComplexMatrix4 operator*(const ComplexMatrix4& x, const ComplexMatrix4& y) {
  ComplexMatrix4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) {
      const Complex xik = x(i, k);
      for (std::size_t j = 0; j < 4; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}
inline ComplexVector4 operator*(const ComplexMatrix4& m, const ComplexVector4& x) {
  ComplexVector4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r[i] += m(i, j) * x[j];
  return r;
}

inline ComplexMatrix4 adjoint(const ComplexMatrix4& m) {
  ComplexMatrix4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = std::conj(m(j, i));
  return r;
}
inline ComplexMatrix4 transpose(const ComplexMatrix4& m) {
  ComplexMatrix4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = m(j, i);
  return r;
}
inline ComplexMatrix4 conj(const ComplexMatrix4& m) {
  ComplexMatrix4 r;
  for (std::size_t i = 0; i < 16; ++i) r.a[i] = std::conj(m.a[i]);
  return r;
}
inline Complex trace(const ComplexMatrix4& m) {
  return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3);
}
inline double max_abs(const ComplexMatrix4& m) {
  double r = 0.0;
  for (const auto& z : m.a) r = std::max(r, std::abs(z));
  return r;
}
inline double frobenius_norm(const ComplexMatrix4& m) {
  double r = 0.0;
  for (const auto& z : m.a) r += std::norm(z);
  return std::sqrt(r);
}
inline bool is_finite(const ComplexMatrix4& m) {
  for (const auto& z : m.a)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}
// |x><y|
inline ComplexMatrix4 outer(const ComplexVector4& x, const ComplexVector4& y) {
  ComplexMatrix4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = x[i] * std::conj(y[j]);
  return r;
}

// max |M - M^dagger|
inline double hermitian_defect(const ComplexMatrix4& m) {
  return max_abs(m - adjoint(m));
}
// max |M - M^T|
inline double symmetric_defect(const ComplexMatrix4& m) {
  return max_abs(m - transpose(m));
}

// ---- eigensolvers ----------------------------------------------------------

struct HermitianEigen {
  std::array<double, 4> values{};          // descending
  std::array<ComplexVector4, 4> vectors{};  // orthonormal, vectors[i] pairs with values[i]
};

// Jacobi eigendecomposition. Eigenvalues are sorted descending (stable), and
// each eigenvector is rotated so that its first largest-magnitude component is
// real and positive. Throws NonHermitianInput if |H - H^dagger|_max exceeds
// tol.hermitian_input, NumericalFailure on non-finite input.
HermitianEigen hermitian_eig(const ComplexMatrix4& h, const Tolerances& tol = {});

// Eigenvalues only (descending); same preconditions as hermitian_eig.
std::array<double, 4> hermitian_eigenvalues(const ComplexMatrix4& h, const Tolerances& tol = {});

struct TakagiFactorization {
  ComplexMatrix4 w;          // unitary, w * S * w^T = diag(d)
  std::array<double, 4> d{};  // nonnegative, descending
};

// Takagi (Autonne) factorization of a complex symmetric matrix. Throws
// NonSymmetricInput if |S - S^T|_max exceeds tol.symmetric_input.
TakagiFactorization takagi(const ComplexMatrix4& s, const Tolerances& tol = {});

}  // namespace qrobust
