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

#include "qrobust/numerics.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <type_traits>

#include "qrobust/errors.hpp"

namespace qrobust {
namespace {

template <typename T>
double abs2(const T& x) {
  if constexpr (std::is_same_v<T, double>) {
    return x * x;
  } else {
    return std::norm(x);
  }
}

template <typename T>
T conj_of(const T& x) {
  if constexpr (std::is_same_v<T, double>) {
    return x;
  } else {
    return std::conj(x);
  }
}

template <typename T>
double real_of(const T& x) {
  if constexpr (std::is_same_v<T, double>) {
    return x;
  } else {
    return x.real();
  }
}

template <typename T, std::size_t N>
using Square = std::array<T, N * N>;

constexpr int kMaxSweeps = 64;

// Cyclic Jacobi on a Hermitian (or real symmetric) N x N matrix held in `a`.
// On return `a` is diagonal; if `v` is non-null its columns are the
// eigenvectors, a_in = V diag(a_out) V^dagger.
template <typename T, std::size_t N>
void jacobi_diagonalize(Square<T, N>& a, Square<T, N>* v, double rel_tol) {
  if (v != nullptr) {
    v->fill(T{});
    for (std::size_t i = 0; i < N; ++i) (*v)[i * N + i] = T{1.0};
  }
  double total = 0.0;
  for (const auto& x : a) total += abs2(x);
  if (total == 0.0) return;
  const double threshold = rel_tol * rel_tol * total;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = 0; q < N; ++q)
        if (p != q) off += abs2(a[p * N + q]);
    if (off <= threshold) return;

    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const T apq = a[p * N + q];
        const double mag = std::sqrt(abs2(apq));
        if (mag == 0.0) continue;
        const T phase = apq / mag;
        const double app = real_of(a[p * N + p]);
        const double aqq = real_of(a[q * N + q]);
        const double theta = (aqq - app) / (2.0 * mag);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // U = diag(1, conj(phase)) * [[c, s], [-s, c]] on the (p, q) plane.
        const T upp = T{c};
        const T upq = T{s};
        const T uqp = -s * conj_of(phase);
        const T uqq = c * conj_of(phase);

        for (std::size_t k = 0; k < N; ++k) {
          const T akp = a[k * N + p];
          const T akq = a[k * N + q];
          a[k * N + p] = akp * upp + akq * uqp;
          a[k * N + q] = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const T apk = a[p * N + k];
          const T aqk = a[q * N + k];
          a[p * N + k] = conj_of(upp) * apk + conj_of(uqp) * aqk;
          a[q * N + k] = conj_of(upq) * apk + conj_of(uqq) * aqk;
        }
        a[p * N + q] = T{};
        a[q * N + p] = T{};
        a[p * N + p] = T{real_of(a[p * N + p])};
        a[q * N + q] = T{real_of(a[q * N + q])};

        if (v != nullptr) {
          auto& vm = *v;
          for (std::size_t k = 0; k < N; ++k) {
            const T vkp = vm[k * N + p];
            const T vkq = vm[k * N + q];
            vm[k * N + p] = vkp * upp + vkq * uqp;
            vm[k * N + q] = vkp * upq + vkq * uqq;
          }
        }
      }
    }
  }
}

template <std::size_t N>
std::array<std::size_t, N> descending_order(const std::array<double, N>& values) {
  std::array<std::size_t, N> idx{};
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t x, std::size_t y) { return values[x] > values[y]; });
  return idx;
}

// Index of the first component whose magnitude is (numerically) maximal.
std::size_t leading_component(const ComplexVector4& x) {
  const double m = max_abs(x);
  for (std::size_t i = 0; i < 4; ++i)
    if (std::abs(x[i]) >= m * (1.0 - 1e-12)) return i;
  return 0;
}

void check_finite(const ComplexMatrix4& m, const char* what) {
  if (!is_finite(m)) throw NumericalFailure(std::string(what) + ": non-finite matrix entry");
}

Square<Complex, 4> hermitian_part(const ComplexMatrix4& h, const Tolerances& tol) {
  check_finite(h, "hermitian_eig");
  const double defect = hermitian_defect(h);
  if (defect > tol.hermitian_input) {
    throw NonHermitianInput("matrix is not Hermitian: max |H - H^dagger| = " +
                            std::to_string(defect));
  }
  Square<Complex, 4> a{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) a[i * 4 + j] = 0.5 * (h(i, j) + std::conj(h(j, i)));
  return a;
}

}  // namespace

HermitianEigen hermitian_eig(const ComplexMatrix4& h, const Tolerances& tol) {
  Square<Complex, 4> a = hermitian_part(h, tol);
  Square<Complex, 4> v{};
  jacobi_diagonalize<Complex, 4>(a, &v, tol.jacobi_offdiag);

  std::array<double, 4> diag{};
  for (std::size_t i = 0; i < 4; ++i) diag[i] = a[i * 4 + i].real();
  const auto order = descending_order(diag);

  HermitianEigen out;
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t col = order[k];
    out.values[k] = diag[col];
    ComplexVector4 e;
    for (std::size_t r = 0; r < 4; ++r) e[r] = v[r * 4 + col];
    const Complex lead = e[leading_component(e)];
    const double mag = std::abs(lead);
    if (mag > 0.0) e = (std::conj(lead) / mag) * e;
    out.vectors[k] = e;
  }
  return out;
}

std::array<double, 4> hermitian_eigenvalues(const ComplexMatrix4& h, const Tolerances& tol) {
  Square<Complex, 4> a = hermitian_part(h, tol);
  jacobi_diagonalize<Complex, 4>(a, nullptr, tol.jacobi_offdiag);
  std::array<double, 4> diag{};
  for (std::size_t i = 0; i < 4; ++i) diag[i] = a[i * 4 + i].real();
  std::sort(diag.begin(), diag.end(), [](double x, double y) { return x > y; });
  return diag;
}

// For S = A + iB the real symmetric matrix [[A, B], [B, -A]] has eigenvalues
// +-d_i; an eigenvector [x; y] for +d gives a Takagi vector u = x + iy with
// S conj(u) = d u. Eigenvectors of one positive cluster map to orthonormal
// complex vectors, so degenerate singular values need no special handling.
// Null-space vectors are completed by complex Gram-Schmidt.
TakagiFactorization takagi(const ComplexMatrix4& s_in, const Tolerances& tol) {
  check_finite(s_in, "takagi");
  const double defect = symmetric_defect(s_in);
  if (defect > tol.symmetric_input) {
    throw NonSymmetricInput("matrix is not symmetric: max |S - S^T| = " + std::to_string(defect));
  }
  ComplexMatrix4 s;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) s(i, j) = 0.5 * (s_in(i, j) + s_in(j, i));

  Square<double, 8> m{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const double re = s(i, j).real();
      const double im = s(i, j).imag();
      m[i * 8 + j] = re;
      m[i * 8 + (j + 4)] = im;
      m[(i + 4) * 8 + j] = im;
      m[(i + 4) * 8 + (j + 4)] = -re;
    }
  }
  Square<double, 8> v{};
  jacobi_diagonalize<double, 8>(m, &v, tol.jacobi_offdiag);
  std::array<double, 8> diag{};
  for (std::size_t i = 0; i < 8; ++i) diag[i] = m[i * 8 + i];
  const auto order = descending_order(diag);

  std::array<ComplexVector4, 4> u{};
  std::size_t accepted = 0;
  for (std::size_t k = 0; k < 8 && accepted < 4; ++k) {
    const std::size_t col = order[k];
    ComplexVector4 z;
    for (std::size_t r = 0; r < 4; ++r) z[r] = Complex(v[r * 8 + col], v[(r + 4) * 8 + col]);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t j = 0; j < accepted; ++j) z = z - inner(u[j], z) * u[j];
    const double n = std::sqrt(norm_sq(z));
    if (n < 0.5) continue;
    u[accepted++] = Complex(1.0 / n) * z;
  }
  if (accepted < 4) throw NumericalFailure("takagi: could not complete a unitary basis");

  // W = U^dagger; fix row phases so that diag(W S W^T) is real nonnegative.
  TakagiFactorization out;
  std::array<ComplexVector4, 4> rows{};
  std::array<double, 4> d{};
  for (std::size_t i = 0; i < 4; ++i) {
    ComplexVector4 row = conj(u[i]);
    // (W S W^T)_ii = row^T S row
    Complex dii = 0.0;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) dii += row[a] * s(a, b) * row[b];
    const double mag = std::abs(dii);
    if (mag > 0.0) row = std::polar(1.0, -0.5 * std::arg(dii)) * row;
    rows[i] = row;
    d[i] = mag;
  }
  const auto sorted = descending_order(d);
  for (std::size_t k = 0; k < 4; ++k) {
    ComplexVector4 row = rows[sorted[k]];
    const Complex lead = row[leading_component(row)];
    if (lead.real() < 0.0 || (lead.real() == 0.0 && lead.imag() < 0.0)) row = Complex(-1.0) * row;
    for (std::size_t c = 0; c < 4; ++c) out.w(k, c) = row[c];
    out.d[k] = d[sorted[k]];
  }
  return out;
}

}  // namespace qrobust
