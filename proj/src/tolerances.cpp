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

#include "qrobust/tolerances.hpp"

#include <cstdlib>
#include <string>

#include "qrobust/errors.hpp"

namespace qrobust {

std::vector<std::pair<std::string, double Tolerances::*>> tolerance_fields() {
  return {
      {"hermitian_input", &Tolerances::hermitian_input},
      {"symmetric_input", &Tolerances::symmetric_input},
      {"state_hermiticity", &Tolerances::state_hermiticity},
      {"state_trace", &Tolerances::state_trace},
      {"state_psd", &Tolerances::state_psd},
      {"jacobi_offdiag", &Tolerances::jacobi_offdiag},
      {"rank_relative", &Tolerances::rank_relative},
      {"takagi_failure", &Tolerances::takagi_failure},
      {"ppt", &Tolerances::ppt},
      {"bisection", &Tolerances::bisection},
      {"identity", &Tolerances::identity},
      {"orthogonality", &Tolerances::orthogonality},
      {"moment", &Tolerances::moment},
      {"oracle_agreement", &Tolerances::oracle_agreement},
  };
}

namespace {

double parse_number(std::string_view text) {
  std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !(v >= 0.0)) {
    throw ParseError("tolerance value '" + s + "' is not a non-negative number");
  }
  return v;
}

}  // namespace

Tolerances apply_overrides(Tolerances base, std::string_view overrides) {
  const auto fields = tolerance_fields();
  std::size_t pos = 0;
  while (pos <= overrides.size()) {
    std::size_t comma = overrides.find(',', pos);
    if (comma == std::string_view::npos) comma = overrides.size();
    std::string_view item = overrides.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) {
      if (comma == overrides.size()) break;
      continue;
    }
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      const double v = parse_number(item);
      base.identity = v;
      base.orthogonality = v;
      base.moment = v;
      base.oracle_agreement = v;
      continue;
    }
    const std::string_view key = item.substr(0, eq);
    const double v = parse_number(item.substr(eq + 1));
    bool found = false;
    for (const auto& [name, member] : fields) {
      if (name == key) {
        base.*member = v;
        found = true;
        break;
      }
    }
    if (!found) throw ParseError("unknown tolerance '" + std::string(key) + "'");
  }
  return base;
}

Tolerances tolerances_from_env() {
  const char* env = std::getenv("QROBUST_TOL");
  if (env == nullptr || *env == '\0') return Tolerances{};
  return apply_overrides(Tolerances{}, env);
}

}  // namespace qrobust
