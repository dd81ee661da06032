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

// The invariant suite run by `qrobust verify`: each entry records the worst
// observed violation of one property over a seeded corpus.

#include <cstdint>
#include <string>
#include <vector>

#include "qrobust/tolerances.hpp"

namespace qrobust {

struct PropertyResult {
  std::string group;  // module the property belongs to
  std::string name;
  long samples = 0;
  double worst = 0.0;  // largest violation seen
  double limit = 0.0;
  bool passed = false;
};

struct PropertySuiteOptions {
  std::size_t corpus = 200;
  std::uint64_t seed = 0;
  int oracle_states = 3;   // states probed by the (slow) absolute search
  int oracle_budget = 4;
};

std::vector<PropertyResult> run_property_suite(const PropertySuiteOptions& options,
                                               const Tolerances& tol = {});

}  // namespace qrobust
