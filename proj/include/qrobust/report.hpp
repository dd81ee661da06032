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

// JSON views of the library's result records.

#include <vector>

#include "qrobust/coset.hpp"
#include "qrobust/json_io.hpp"
#include "qrobust/oracle.hpp"
#include "qrobust/properties.hpp"
#include "qrobust/robustness.hpp"
#include "qrobust/wootters.hpp"

namespace qrobust {

Json vector_json(const ComplexVector4& v);  // {"re": [4], "im": [4]}
Json decomposition_json(const WoottersDecomposition& d);
Json certificate_json(const RobustnessCertificate& c);
Json oracle_json(const OracleResult& r);
Json verification_json(const VerificationReport& r);
Json properties_json(const std::vector<PropertyResult>& results);

// {theta1, theta2, xi1, xi2, phi1, phi2, lambda: [4]}
Json params_json(const coset::CosetParams& p);
// Throws ParseError on a malformed record and ValidationError on bad values.
coset::CosetParams params_from_json(const nlohmann::json& j);

}  // namespace qrobust
