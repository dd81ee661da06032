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

#include "qrobust/properties.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qrobust/coset.hpp"
#include "qrobust/errors.hpp"
#include "qrobust/oracle.hpp"
#include "qrobust/robustness.hpp"
#include "qrobust/sampling.hpp"
#include "qrobust/wootters.hpp"

namespace qrobust {
namespace {

// Independent streams per property family.
enum Stream : std::uint64_t {
  kHermitian = 1,
  kSymmetric,
  kStates,
  kLocal,
  kTilde,
  kCoset,
  kScaling,
  kWeights,
};

std::uint64_t stream_seed(std::uint64_t master, Stream s, std::size_t i) {
  return derive_seed(derive_seed(master, s), i);
}

class Tally {
 public:
  Tally(std::string group, std::string name, double limit)
      : r_{std::move(group), std::move(name), 0, 0.0, limit, false} {}
  void add(double violation) {
    ++r_.samples;
    // A NaN sticks and fails the property.
    if (std::isnan(violation) || violation > r_.worst) r_.worst = violation;
  }
  PropertyResult finish() {
    r_.passed = !std::isnan(r_.worst) && r_.worst <= r_.limit;
    return r_;
  }

 private:
  PropertyResult r_;
};

double gram_deviation(const std::array<ComplexVector4, 4>& v) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      worst = std::max(worst, std::abs(inner(v[i], v[j]) - (i == j ? Complex(1) : Complex())));
  return worst;
}

ComplexMatrix4 matrix_power(const ComplexMatrix4& m, int k) {
  ComplexMatrix4 r = ComplexMatrix4::identity();
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

double identity_defect(const ComplexMatrix4& m) { return max_abs(m - ComplexMatrix4::identity()); }

void numerics_group(const PropertySuiteOptions& o, const Tolerances& tol,
                    std::vector<PropertyResult>& out) {
  Tally recon("numerics", "hermitian_reconstruction", tol.identity);
  Tally ortho("numerics", "hermitian_orthonormality", tol.orthogonality);
  for (std::size_t i = 0; i < o.corpus; ++i) {
    std::mt19937_64 rng(stream_seed(o.seed, kHermitian, i));
    const ComplexMatrix4 h = random_hermitian(rng);
    const HermitianEigen e = hermitian_eig(h, tol);
    ComplexMatrix4 sum = ComplexMatrix4::zero();
    for (int k = 0; k < 4; ++k) sum = sum + Complex(e.values[k]) * outer(e.vectors[k], e.vectors[k]);
    recon.add(max_abs(sum - h));
    ortho.add(gram_deviation(e.vectors));
  }
  out.push_back(recon.finish());
  out.push_back(ortho.finish());

  Tally sv("numerics", "takagi_singular_values", tol.identity);
  Tally fac("numerics", "takagi_factorization", tol.identity);
  for (std::size_t i = 0; i < o.corpus; ++i) {
    std::mt19937_64 rng(stream_seed(o.seed, kSymmetric, i));
    const ComplexMatrix4 s = random_symmetric(rng);
    const TakagiFactorization t = takagi(s, tol);
    const auto ev = hermitian_eigenvalues(adjoint(s) * s, tol);
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(std::sqrt(std::max(ev[k], 0.0)) - t.d[k]));
    sv.add(worst);
    ComplexMatrix4 target = ComplexMatrix4::diagonal({t.d[0], t.d[1], t.d[2], t.d[3]});
    fac.add(std::max(max_abs(t.w * s * transpose(t.w) - target), identity_defect(adjoint(t.w) * t.w)));
  }
  out.push_back(sv.finish());
  out.push_back(fac.finish());
}

void states_group(const PropertySuiteOptions& o, const Tolerances& tol,
                  std::vector<PropertyResult>& out) {
  Tally flip("states", "spin_flip_involution", tol.identity);
  Tally pt("states", "partial_transpose_involution", tol.identity);
  Tally overlap("states", "tilde_overlap_nonnegative", tol.identity);
  Tally bell("states", "bell_diagonal_flip_invariance", tol.identity);
  for (std::size_t i = 0; i < o.corpus; ++i) {
    const std::uint64_t seed = stream_seed(o.seed, kStates, i);
    const DensityMatrix rho = sample_state(Ensemble::ginibre, seed);
    flip.add(max_abs(spin_flip(spin_flip(rho)) - rho.matrix()));
    const ComplexMatrix4 t = partial_transpose(rho);
    pt.add(std::max(max_abs(partial_transpose(t) - rho.matrix()), std::abs(trace(t) - trace(rho.matrix()))));
    overlap.add(-trace(rho.matrix() * spin_flip(rho)).real());
    const DensityMatrix b = sample_state(Ensemble::bell_diagonal, seed);
    bell.add(max_abs(spin_flip(b) - b.matrix()));
  }
  out.push_back(flip.finish());
  out.push_back(pt.finish());
  out.push_back(overlap.finish());
  out.push_back(bell.finish());
}

void wootters_group(const std::vector<DensityMatrix>& corpus, const PropertySuiteOptions& o,
                    const Tolerances& tol, std::vector<PropertyResult>& out) {
  Tally rel("wootters", "defining_relation", tol.identity);
  Tally rec("wootters", "reconstruction", tol.identity);
  Tally mom("wootters", "moment_identity", tol.moment);
  Tally norm("wootters", "normalized_relation", tol.identity);
  Tally psum("wootters", "tetrahedron_normalization", tol.identity);
  Tally routes("wootters", "concurrence_routes_agree", tol.identity);
  Tally lu("wootters", "concurrence_local_unitary_invariance", tol.identity);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const DensityMatrix& rho = corpus[i];
    const WoottersDecomposition d = decompose(rho, tol);
    rel.add(defining_relation_residual(d));
    rec.add(reconstruction_residual(d, rho));
    const ComplexMatrix4 rr = rho.matrix() * spin_flip(rho);
    double worst = 0.0;
    for (int m = 1; m <= 4; ++m) {
      double sum = 0.0;
      for (double l : d.lambda) sum += std::pow(l, 2 * m);
      worst = std::max(worst, std::abs(trace(matrix_power(rr, m)).real() - sum));
    }
    mom.add(worst);
    if (d.full_rank()) {
      double dev = 0.0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          dev = std::max(dev, std::abs(inner(d.x_prime(a), spin_flip(d.x_prime(b))) -
                                       (a == b ? Complex(1) : Complex())));
      norm.add(dev);
    }
    psum.add(std::abs(d.p_coord[0] + d.p_coord[1] + d.p_coord[2] + d.p_coord[3] - 1.0));
    routes.add(std::abs(concurrence(rho, tol) - d.concurrence));
    std::mt19937_64 rng(stream_seed(o.seed, kLocal, i));
    const LocalUnitary u = random_local_unitary(rng);
    lu.add(std::abs(concurrence(apply_local_unitary(rho, u, tol), tol) - d.concurrence));
  }
  for (Tally* t : {&rel, &rec, &mom, &norm, &psum, &routes, &lu}) out.push_back(t->finish());

  Tally tn("wootters", "tilde_norm_local_unitary_invariance", tol.identity);
  for (std::size_t i = 0; i < o.corpus; ++i) {
    std::mt19937_64 rng(stream_seed(o.seed, kTilde, i));
    const ComplexMatrix4 m = random_hermitian(rng);
    const ComplexMatrix4 u = random_local_unitary(rng).matrix();
    const double before = tilde_norm(m, tol);
    const ComplexMatrix4 rotated = u * m * adjoint(u);
    const double after = tilde_norm(Complex(0.5) * (rotated + adjoint(rotated)), tol);
    tn.add(std::abs(after - before) / std::max(before, 1e-300));
  }
  out.push_back(tn.finish());
}

void robustness_group(const std::vector<DensityMatrix>& corpus, const PropertySuiteOptions& o,
                      const Tolerances& tol, std::vector<PropertyResult>& out) {
  Tally pseudo("robustness", "pseudomixture_identity", tol.identity);
  Tally plane("robustness", "rho_p_on_plane", tol.identity);
  Tally trace_t("robustness", "rho_p_unit_trace", tol.identity);
  Tally death("robustness", "concurrence_vanishes_at_s", tol.identity);
  Tally sep("robustness", "witnesses_separable", tol.ppt);
  Tally planes("robustness", "other_planes_dominate", tol.identity);
  Tally agree("oracle", "bisection_matches_formula", tol.oracle_agreement);
  Tally monotone("oracle", "ppt_interval_monotone", 0.0);
  std::size_t scanned = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const DensityMatrix& rho = corpus[i];
    const WoottersDecomposition d = decompose(rho, tol);
    if (!d.full_rank() || d.concurrence <= 0.0) continue;
    const RobustnessCertificate c = robustness(rho, d, tol);
    pseudo.add(c.residuals.pseudomixture);
    plane.add(c.residuals.plane);
    trace_t.add(c.residuals.trace);
    death.add(concurrence(DensityMatrix::from_matrix(mix(rho.matrix(), c.rho_pp.matrix(), c.s), tol), tol));
    sep.add(std::max(-c.residuals.ppt_min_eig_rho_p, -c.residuals.ppt_min_eig_rho_pp));

    std::mt19937_64 rng(stream_seed(o.seed, kWeights, i));
    std::exponential_distribution<double> expo(1.0);
    for (int trial = 0; trial < 10; ++trial) {
      VertexWeights w{expo(rng), expo(rng), expo(rng)};
      const double total = w[0] + w[1] + w[2];
      for (double& x : w) x /= total;
      double worst = c.s - plane_robustness_s1(d, w);
      for (int p = 2; p <= 4; ++p) worst = std::max(worst, c.s - plane_robustness_other(d, p, w));
      planes.add(worst);
    }

    agree.add(std::abs(bisect_relative_robustness(rho, c.rho_pp, tol.bisection, tol) - c.s));

    if (scanned < 10) {
      ++scanned;
      // PPT along the ray must switch from false to true exactly once.
      for (const DensityMatrix* dir : {&c.rho_pp, static_cast<const DensityMatrix*>(nullptr)}) {
        const ComplexMatrix4 dm = dir ? dir->matrix() : DensityMatrix::maximally_mixed().matrix();
        const double span = 2.0 * std::max(c.s, 2.0);
        int switches = 0;
        bool prev = false;
        for (int k = 0; k < 100; ++k) {
          const bool now = is_separable_ppt(mix(rho.matrix(), dm, span * k / 99.0), tol).separable;
          if (now != prev) ++switches;
          prev = now;
        }
        monotone.add(switches == 1 ? 0.0 : 1.0);
      }
    }
  }
  for (Tally* t : {&pseudo, &plane, &trace_t, &death, &sep, &planes}) out.push_back(t->finish());

  // s / C depends on the Wootters basis only: fixed angles, varied lambda.
  Tally prop("robustness", "proportional_to_concurrence", tol.identity);
  for (std::size_t i = 0; i < std::min<std::size_t>(o.corpus, 50); ++i) {
    const coset::CosetParams base = sample_coset_params(stream_seed(o.seed, kScaling, i));
    double ratio0 = 0.0;
    double worst = 0.0;
    for (int v = 0; v < 4; ++v) {
      coset::CosetParams p = base;
      const double dom = 0.4 + 0.15 * v;
      p.lambda = {dom, (1 - dom) * 0.5, (1 - dom) * 0.3, (1 - dom) * 0.2};
      const DensityMatrix rho = coset::density_from_params(p);
      const WoottersDecomposition d = decompose(rho, tol);
      if (!d.full_rank() || d.concurrence <= 0.0) continue;
      const double ratio = robustness(rho, d, tol).s / d.concurrence;
      if (ratio0 == 0.0) {
        ratio0 = ratio;
      } else {
        worst = std::max(worst, std::abs(ratio - ratio0) / ratio0);
      }
    }
    prop.add(worst);
  }
  out.push_back(prop.finish());
  out.push_back(agree.finish());
  out.push_back(monotone.finish());
}

void coset_group(const PropertySuiteOptions& o, const Tolerances& tol,
                 std::vector<PropertyResult>& out) {
  Tally yty("coset", "complex_orthogonality", tol.orthogonality);
  Tally kcf("coset", "k_closed_form", tol.identity);
  Tally xcf("coset", "x_closed_form", tol.orthogonality);
  Tally trip("coset", "lambda_round_trip", tol.moment);
  const ComplexMatrix4& syy = sigma_yy();
  for (std::size_t i = 0; i < o.corpus; ++i) {
    std::mt19937_64 rng(stream_seed(o.seed, kCoset, i));
    const coset::CosetParams p = coset::normalized(coset::random_params(rng, 2.0));
    const ComplexMatrix4 y = coset::build_Y(p);
    const ComplexMatrix4 x = coset::build_X(p);
    yty.add(std::max(identity_defect(transpose(y) * y), identity_defect(transpose(x) * syy * x)));
    const auto kc = coset::k_closed_form(p);
    const auto xs = coset::closed_form_x(p);
    double kw = 0.0;
    double xw = 0.0;
    for (int k = 0; k < 4; ++k) {
      const ComplexVector4 col = x.column(k);
      kw = std::max(kw, std::abs(kc[k] - norm_sq(col)));
      xw = std::max(xw, max_abs(xs[k] - Complex(std::sqrt(p.lambda[k])) * col));
    }
    kcf.add(kw);
    xcf.add(xw);
  }
  for (std::size_t i = 0; i < o.corpus; ++i) {
    const coset::CosetParams p = coset::normalized(sample_coset_params(derive_seed(o.seed, 7000 + i)));
    const WoottersDecomposition d = decompose(coset::density_from_params(p), tol);
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(d.lambda[k] - p.lambda[k]));
    trip.add(worst);
  }
  for (Tally* t : {&yty, &kcf, &xcf, &trip}) out.push_back(t->finish());
}

void oracle_group(const std::vector<DensityMatrix>& corpus, const PropertySuiteOptions& o,
                  const Tolerances& tol, std::vector<PropertyResult>& out) {
  Tally sound("oracle", "search_upper_bound", tol.oracle_agreement);
  int done = 0;
  for (std::size_t i = 0; i < corpus.size() && done < o.oracle_states; ++i) {
    const WoottersDecomposition d = decompose(corpus[i], tol);
    if (!d.full_rank() || d.concurrence <= 0.0) continue;
    ++done;
    const OracleResult r = minimize_absolute_robustness(corpus[i], o.oracle_budget, o.seed + i, {}, tol);
    sound.add(r.s_best - *r.s_formula);
  }
  out.push_back(sound.finish());
}

}  // namespace

std::vector<PropertyResult> run_property_suite(const PropertySuiteOptions& options,
                                               const Tolerances& tol) {
  std::vector<PropertyResult> out;
  std::vector<DensityMatrix> corpus;
  corpus.reserve(options.corpus);
  for (std::size_t i = 0; i < options.corpus; ++i) {
    corpus.push_back(sample_state(Ensemble::ginibre, derive_seed(options.seed, i)));
  }
  numerics_group(options, tol, out);
  states_group(options, tol, out);
  wootters_group(corpus, options, tol, out);
  robustness_group(corpus, options, tol, out);
  coset_group(options, tol, out);
  oracle_group(corpus, options, tol, out);
  return out;
}

}  // namespace qrobust
