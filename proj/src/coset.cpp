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

#include "qrobust/coset.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qrobust/errors.hpp"

namespace qrobust::coset {
namespace {

constexpr Complex kI{0.0, 1.0};

// [[cosh a, i sinh a], [-i sinh a, cosh a]] placed on rows/cols (r, r+1).
void put_hyperbolic_block(ComplexMatrix4& m, std::size_t r, double a) {
  m(r, r) = std::cosh(a);
  m(r, r + 1) = kI * std::sinh(a);
  m(r + 1, r) = -kI * std::sinh(a);
  m(r + 1, r + 1) = std::cosh(a);
}

ComplexMatrix4 block_pair(double a, double b) {
  ComplexMatrix4 m;
  put_hyperbolic_block(m, 0, a);
  put_hyperbolic_block(m, 2, b);
  return m;
}

}  // namespace

void validate(const CosetParams& p) {
  const double angles[6] = {p.theta1, p.theta2, p.xi1, p.xi2, p.phi1, p.phi2};
  for (double a : angles)
    if (!std::isfinite(a)) throw ValidationError("finiteness", 0.0, "coset angle is not finite");
  if (p.xi1 < 0.0) throw ValidationError("xi1 >= 0", -p.xi1, "xi1 must be nonnegative");
  if (p.xi2 < 0.0) throw ValidationError("xi2 >= 0", -p.xi2, "xi2 must be nonnegative");
  for (std::size_t i = 0; i < 4; ++i) {
    if (!(p.lambda[i] >= 0.0) || !std::isfinite(p.lambda[i])) {
      throw ValidationError("lambda >= 0", p.lambda[i],
                            "lambda" + std::to_string(i + 1) + " must be finite and nonnegative");
    }
    if (i > 0 && p.lambda[i] > p.lambda[i - 1]) {
      throw ValidationError("lambda descending", p.lambda[i] - p.lambda[i - 1],
                            "lambda values must be sorted in descending order");
    }
  }
}

ComplexMatrix4 matrix_O() {
  const double h = 1.0 / std::sqrt(2.0);
  ComplexMatrix4 o;
  o(0, 0) = h;
  o(0, 3) = h;
  o(1, 1) = h;
  o(1, 2) = h;
  o(2, 1) = h;
  o(2, 2) = -h;
  o(3, 0) = h;
  o(3, 3) = -h;
  return o;
}

ComplexMatrix4 matrix_eta() { return ComplexMatrix4::diagonal({kI, 1.0, kI, 1.0}); }

ComplexMatrix4 matrix_eta_inverse() { return ComplexMatrix4::diagonal({-kI, 1.0, -kI, 1.0}); }

ComplexMatrix4 build_Y(const CosetParams& p) {
  ComplexMatrix4 middle;
  middle(0, 0) = std::cosh(p.xi1);
  middle(1, 1) = std::cosh(p.xi2);
  middle(2, 2) = std::cosh(p.xi1);
  middle(3, 3) = std::cosh(p.xi2);
  middle(0, 2) = kI * std::sinh(p.xi1);
  middle(1, 3) = kI * std::sinh(p.xi2);
  middle(2, 0) = -kI * std::sinh(p.xi1);
  middle(3, 1) = -kI * std::sinh(p.xi2);
  return block_pair(p.theta1, p.theta2) * middle * block_pair(p.phi1, p.phi2);
}

ComplexMatrix4 build_X(const CosetParams& p) {
  return transpose(matrix_O()) * matrix_eta_inverse() * build_Y(p);
}

std::array<ComplexVector4, 4> closed_form_x(const CosetParams& p) {
  const double ct1 = std::cosh(p.theta1), st1 = std::sinh(p.theta1);
  const double ct2 = std::cosh(p.theta2), st2 = std::sinh(p.theta2);
  const double cx1 = std::cosh(p.xi1), sx1 = std::sinh(p.xi1);
  const double cx2 = std::cosh(p.xi2), sx2 = std::sinh(p.xi2);
  const double cp1 = std::cosh(p.phi1), sp1 = std::sinh(p.phi1);
  const double cp2 = std::cosh(p.phi2), sp2 = std::sinh(p.phi2);

  std::array<ComplexVector4, 4> x{};
  {
    const double a = sx1 * st2 * cp1 + sx2 * ct2 * sp1;
    const double b = cx1 * ct1 * cp1 + cx2 * st1 * sp1;
    const double c = sx1 * ct2 * cp1 + sx2 * st2 * sp1;
    const double d = cx1 * st1 * cp1 + cx2 * ct1 * sp1;
    x[0] = ComplexVector4{{Complex(-a, -b), Complex(-c, -d), Complex(c, -d), Complex(a, -b)}};
  }
  {
    const double a = cx1 * ct1 * sp1 + cx2 * st1 * cp1;
    const double b = sx1 * st2 * sp1 + sx2 * ct2 * cp1;
    const double c = cx1 * st1 * sp1 + cx2 * ct1 * cp1;
    const double d = sx1 * ct2 * sp1 + sx2 * st2 * cp1;
    x[1] = ComplexVector4{{Complex(a, -b), Complex(c, -d), Complex(c, d), Complex(a, b)}};
  }
  {
    const double a = sx1 * ct1 * cp2 + sx2 * st1 * sp2;
    const double b = cx1 * st2 * cp2 + cx2 * ct2 * sp2;
    const double c = sx1 * st1 * cp2 + sx2 * ct1 * sp2;
    const double d = cx1 * ct2 * cp2 + cx2 * st2 * sp2;
    x[2] = ComplexVector4{{Complex(a, -b), Complex(c, -d), Complex(c, d), Complex(a, b)}};
  }
  {
    const double a = cx1 * st2 * sp2 + cx2 * ct2 * cp2;
    const double b = sx1 * ct1 * sp2 + sx2 * st1 * cp2;
    const double c = cx1 * ct2 * sp2 + cx2 * st2 * cp2;
    const double d = sx1 * st1 * sp2 + sx2 * ct1 * cp2;
    x[3] = ComplexVector4{{Complex(a, b), Complex(c, d), Complex(-c, d), Complex(-a, b)}};
  }
  for (std::size_t i = 0; i < 4; ++i) x[i] = Complex(std::sqrt(p.lambda[i] / 2.0)) * x[i];
  return x;
}

std::array<double, 4> k_closed_form(const CosetParams& p) {
  const double c2t1 = std::cosh(2.0 * p.theta1), s2t1 = std::sinh(2.0 * p.theta1);
  const double c2t2 = std::cosh(2.0 * p.theta2), s2t2 = std::sinh(2.0 * p.theta2);
  const double cx1 = std::cosh(p.xi1), sx1 = std::sinh(p.xi1);
  const double cx2 = std::cosh(p.xi2), sx2 = std::sinh(p.xi2);
  const double cp1 = std::cosh(p.phi1), sp1 = std::sinh(p.phi1);
  const double cp2 = std::cosh(p.phi2), sp2 = std::sinh(p.phi2);
  const double s2p1 = std::sinh(2.0 * p.phi1), s2p2 = std::sinh(2.0 * p.phi2);
  auto sq = [](double v) { return v * v; };

  const double cross1 = s2p1 * (sx1 * sx2 * s2t2 + cx1 * cx2 * s2t1);
  const double cross2 = s2p2 * (sx1 * sx2 * s2t1 + cx1 * cx2 * s2t2);
  return {
      c2t2 * (sq(sx1) * sq(cp1) + sq(sx2) * sq(sp1)) +
          c2t1 * (sq(cx1) * sq(cp1) + sq(cx2) * sq(sp1)) + cross1,
      c2t2 * (sq(sx1) * sq(sp1) + sq(sx2) * sq(cp1)) +
          c2t1 * (sq(cx1) * sq(sp1) + sq(cx2) * sq(cp1)) + cross1,
      c2t1 * (sq(sx1) * sq(cp2) + sq(sx2) * sq(sp2)) +
          c2t2 * (sq(cx1) * sq(cp2) + sq(cx2) * sq(sp2)) + cross2,
      c2t1 * (sq(sx1) * sq(sp2) + sq(sx2) * sq(cp2)) +
          c2t2 * (sq(cx1) * sq(sp2) + sq(cx2) * sq(cp2)) + cross2,
  };
}

CosetParams normalized(const CosetParams& p) {
  const auto k = k_closed_form(p);
  double norm = 0.0;
  for (std::size_t i = 0; i < 4; ++i) norm += p.lambda[i] * k[i];
  if (!(norm > 0.0)) throw DegenerateInput("all lambda values are zero");
  CosetParams out = p;
  for (auto& l : out.lambda) l /= norm;
  return out;
}

DensityMatrix density_from_params(const CosetParams& p) {
  validate(p);
  const CosetParams n = normalized(p);
  const ComplexMatrix4 x = build_X(n);
  ComplexMatrix4 rho;
  for (std::size_t k = 0; k < 4; ++k) {
    const ComplexVector4 col = x.column(k);
    rho = rho + Complex(n.lambda[k]) * outer(col, col);
  }
  return DensityMatrix::from_matrix(rho);
}

CosetParams random_params(std::mt19937_64& rng, double range) {
  std::uniform_real_distribution<double> angle(-range, range);
  std::uniform_real_distribution<double> positive(0.0, range);
  std::exponential_distribution<double> expo(1.0);
  CosetParams p;
  p.theta1 = angle(rng);
  p.theta2 = angle(rng);
  p.xi1 = positive(rng);
  p.xi2 = positive(rng);
  p.phi1 = angle(rng);
  p.phi2 = angle(rng);
  double sum = 0.0;
  for (auto& l : p.lambda) {
    l = expo(rng);
    sum += l;
  }
  for (auto& l : p.lambda) l /= sum;
  std::sort(p.lambda.begin(), p.lambda.end(), [](double a, double b) { return a > b; });
  return p;
}

}  // namespace qrobust::coset
