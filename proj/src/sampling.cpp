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

#include "qrobust/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qrobust/errors.hpp"

namespace qrobust {
namespace {

Complex complex_gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

DensityMatrix normalize_positive(const ComplexMatrix4& g) {
  ComplexMatrix4 m = g * adjoint(g);
  const double tr = trace(m).real();
  m = Complex(1.0 / tr) * m;
  // Force exact Hermitian symmetry.
  for (std::size_t i = 0; i < 4; ++i) {
    m(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < 4; ++j) m(j, i) = std::conj(m(i, j));
  }
  return DensityMatrix::from_matrix(m);
}

}  // namespace

Ensemble parse_ensemble(std::string_view name) {
  if (name == "ginibre") return Ensemble::ginibre;
  if (name == "bures") return Ensemble::bures;
  if (name == "bell_diagonal") return Ensemble::bell_diagonal;
  if (name == "coset") return Ensemble::coset;
  throw UnknownEnsemble("unknown ensemble '" + std::string(name) +
                        "' (expected ginibre, bures, bell_diagonal or coset)");
}

std::string_view ensemble_name(Ensemble e) {
  switch (e) {
    case Ensemble::ginibre:
      return "ginibre";
    case Ensemble::bures:
      return "bures";
    case Ensemble::bell_diagonal:
      return "bell_diagonal";
    case Ensemble::coset:
      return "coset";
  }
  return "unknown";
}

// splitmix64 finalizer
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ComplexMatrix4 ginibre_matrix(std::mt19937_64& rng) {
  ComplexMatrix4 g;
  for (auto& z : g.a) z = complex_gaussian(rng);
  return g;
}

// Gram-Schmidt on Ginibre columns; the positive-diagonal R convention makes
// the result Haar distributed.
ComplexMatrix4 haar_unitary(std::mt19937_64& rng) {
  const ComplexMatrix4 g = ginibre_matrix(rng);
  std::array<ComplexVector4, 4> q{};
  for (std::size_t c = 0; c < 4; ++c) {
    ComplexVector4 v = g.column(c);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t j = 0; j < c; ++j) v = v - inner(q[j], v) * q[j];
    q[c] = Complex(1.0 / std::sqrt(norm_sq(v))) * v;
  }
  return ComplexMatrix4::from_columns(q);
}

Matrix2 haar_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  double x[4];
  double norm = 0.0;
  for (double& v : x) {
    v = n(rng);
    norm += v * v;
  }
  norm = std::sqrt(norm);
  const Complex a(x[0] / norm, x[1] / norm);
  const Complex b(x[2] / norm, x[3] / norm);
  return {a, -std::conj(b), b, std::conj(a)};
}

LocalUnitary random_local_unitary(std::mt19937_64& rng) {
  const Matrix2 u1 = haar_su2(rng);
  const Matrix2 u2 = haar_su2(rng);
  return LocalUnitary::from_factors(u1, u2);
}

ComplexMatrix4 random_hermitian(std::mt19937_64& rng) {
  const ComplexMatrix4 g = ginibre_matrix(rng);
  ComplexMatrix4 h;
  for (std::size_t i = 0; i < 4; ++i) {
    h(i, i) = g(i, i).real();
    for (std::size_t j = i + 1; j < 4; ++j) {
      h(i, j) = g(i, j);
      h(j, i) = std::conj(g(i, j));
    }
  }
  return h;
}

ComplexMatrix4 random_symmetric(std::mt19937_64& rng) {
  const ComplexMatrix4 g = ginibre_matrix(rng);
  ComplexMatrix4 s;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      s(i, j) = g(i, j);
      s(j, i) = g(i, j);
    }
  return s;
}

BellWeights sample_bell_weights(std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::array<double, 4> p{};
  double sum = 0.0;
  for (auto& v : p) {
    v = expo(rng);
    sum += v;
  }
  for (auto& v : p) v /= sum;
  std::sort(p.begin(), p.end(), [](double a, double b) { return a > b; });
  // Put the rounding residue on the leading weight so the sum is 1 to an ulp.
  p[0] = 1.0 - (p[1] + p[2] + p[3]);
  return BellWeights::from_array(p);
}

coset::CosetParams sample_coset_params(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return coset::random_params(rng, kCosetEnsembleRange);
}

DensityMatrix sample_state(Ensemble ensemble, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (ensemble) {
    case Ensemble::ginibre:
      return normalize_positive(ginibre_matrix(rng));
    case Ensemble::bures: {
      const ComplexMatrix4 u = haar_unitary(rng);
      const ComplexMatrix4 g = ginibre_matrix(rng);
      return normalize_positive((ComplexMatrix4::identity() + u) * g);
    }
    case Ensemble::bell_diagonal:
      return bell_diagonal(sample_bell_weights(rng));
    case Ensemble::coset:
      return coset::density_from_params(sample_coset_params(seed));
  }
  throw UnknownEnsemble("unknown ensemble");
}

}  // namespace qrobust
