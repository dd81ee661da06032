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

#include "qrobust/report.hpp"

#include <algorithm>

#include "qrobust/errors.hpp"

namespace qrobust {
namespace {

template <std::size_t N>
Json array_json(const std::array<double, N>& a) {
  Json j = Json::array();
  for (double x : a) j.push_back(x);
  return j;
}

Json ppt_json(const PptResult& p) {
  Json j;
  j["separable"] = p.separable;
  j["min_eigenvalue"] = p.min_eigenvalue;
  return j;
}

Json optional_json(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

}  // namespace

Json vector_json(const ComplexVector4& v) {
  Json re = Json::array();
  Json im = Json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    re.push_back(v[i].real());
    im.push_back(v[i].imag());
  }
  Json j;
  j["re"] = re;
  j["im"] = im;
  return j;
}

Json decomposition_json(const WoottersDecomposition& d) {
  Json j;
  j["lambda"] = array_json(d.lambda);
  Json k = Json::array();
  for (const auto& kn : d.k_norm) k.push_back(optional_json(kn));
  j["K"] = k;
  j["P"] = array_json(d.p_coord);
  j["concurrence"] = d.concurrence;
  j["rank"] = d.rank;
  j["full_rank"] = d.full_rank();
  Json xs = Json::array();
  for (const auto& x : d.x) xs.push_back(vector_json(x));
  j["vectors"] = xs;
  return j;
}

Json certificate_json(const RobustnessCertificate& c) {
  Json j;
  j["s"] = c.s;
  j["k_index"] = c.k_index;
  j["pair"] = Json::array({c.pair.first, c.pair.second});
  j["concurrence"] = c.concurrence;
  j["K"] = array_json(c.k);
  j["lambda_prime"] = array_json(c.lambda_prime);
  j["lambda_double_prime"] = array_json(c.lambda_double_prime);
  Json r;
  r["pseudomixture"] = c.residuals.pseudomixture;
  r["plane"] = c.residuals.plane;
  r["trace"] = c.residuals.trace;
  r["ppt_min_eig_rho_p"] = c.residuals.ppt_min_eig_rho_p;
  r["ppt_min_eig_rho_pp"] = c.residuals.ppt_min_eig_rho_pp;
  r["concurrence_rho_p"] = c.residuals.concurrence_rho_p;
  r["concurrence_rho_pp"] = c.residuals.concurrence_rho_pp;
  j["residuals"] = r;
  j["rho_p"] = state_to_json(c.rho_p);
  j["rho_pp"] = state_to_json(c.rho_pp);
  return j;
}

Json oracle_json(const OracleResult& r) {
  Json j;
  j["s_direction"] = r.s_direction;
  j["s_best"] = r.s_best;
  j["best_source"] = r.best_source;
  j["evaluations"] = r.evaluations;
  j["ppt_tests"] = r.ppt_tests;
  j["converged"] = r.converged;
  j["s_formula"] = optional_json(r.s_formula);
  j["gap_to_formula"] = r.s_formula ? Json(r.gap_to_formula) : Json(nullptr);
  j["flagged"] = r.flagged;
  j["best_direction"] = state_to_json(r.best_direction);
  return j;
}

Json verification_json(const VerificationReport& r) {
  Json j;
  j["passed"] = r.passed;
  j["s_formula"] = r.s_formula;
  j["s_bisection"] = r.s_bisection;
  j["bisection_error"] = r.bisection_error;
  j["pseudomixture_residual"] = r.pseudomixture_residual;
  j["plane_residual"] = r.plane_residual;
  j["trace_residual"] = r.trace_residual;
  j["ppt_rho_p"] = ppt_json(r.ppt_rho_p);
  j["ppt_rho_pp"] = ppt_json(r.ppt_rho_pp);
  j["concurrence_rho_p"] = r.concurrence_rho_p;
  j["concurrence_rho_pp"] = r.concurrence_rho_pp;
  j["concurrence_at_s"] = r.concurrence_at_s;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["value"] = c.value;
    cj["limit"] = c.limit;
    cj["passed"] = c.passed;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  if (r.oracle) j["oracle"] = oracle_json(*r.oracle);
  return j;
}

Json properties_json(const std::vector<PropertyResult>& results) {
  Json props = Json::array();
  std::vector<std::string> groups;
  std::size_t failed = 0;
  for (const auto& p : results) {
    if (std::find(groups.begin(), groups.end(), p.group) == groups.end()) groups.push_back(p.group);
    if (!p.passed) ++failed;
    Json pj;
    pj["group"] = p.group;
    pj["name"] = p.name;
    pj["samples"] = p.samples;
    pj["worst"] = p.worst;
    pj["limit"] = p.limit;
    pj["passed"] = p.passed;
    props.push_back(pj);
  }
  Json j;
  j["passed"] = failed == 0;
  j["properties_total"] = results.size();
  j["properties_failed"] = failed;
  j["groups"] = groups;
  j["properties"] = props;
  return j;
}

Json params_json(const coset::CosetParams& p) {
  Json j;
  j["theta1"] = p.theta1;
  j["theta2"] = p.theta2;
  j["xi1"] = p.xi1;
  j["xi2"] = p.xi2;
  j["phi1"] = p.phi1;
  j["phi2"] = p.phi2;
  j["lambda"] = array_json(p.lambda);
  return j;
}

coset::CosetParams params_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("parameter record must be an object");
  auto number = [&](const char* key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
      throw ParseError(std::string("parameter record: missing numeric \"") + key + "\"");
    }
    return j.at(key).get<double>();
  };
  coset::CosetParams p;
  p.theta1 = number("theta1");
  p.theta2 = number("theta2");
  p.xi1 = number("xi1");
  p.xi2 = number("xi2");
  p.phi1 = number("phi1");
  p.phi2 = number("phi2");
  if (!j.contains("lambda") || !j.at("lambda").is_array() || j.at("lambda").size() != 4) {
    throw ParseError("parameter record: \"lambda\" must be an array of 4 numbers");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j.at("lambda")[i].is_number()) throw ParseError("parameter record: lambda entries must be numbers");
    p.lambda[i] = j.at("lambda")[i].get<double>();
  }
  coset::validate(p);
  return p;
}

}  // namespace qrobust
