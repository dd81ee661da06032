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

// State files and 17-significant-digit JSON/CSV emission.
//
// State file layout (row-major, basis order |uu>, |ud>, |du>, |dd>):
//   {"basis": "uu,ud,du,dd", "re": [[...4x4...]], "im": [[...4x4...]]}

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "qrobust/states.hpp"
#include "qrobust/tolerances.hpp"

namespace qrobust {

using Json = nlohmann::ordered_json;

// "%.17g"; non-finite values become "nan", "inf" or "-inf".
std::string format_double(double x);

// Serializes with every floating-point number at 17 significant digits;
// non-finite numbers are written as null.
void write_json(std::ostream& os, const Json& j, int indent = 2);
std::string dump_json(const Json& j, int indent = 2);

Json state_to_json(const DensityMatrix& rho);
// Throws ParseError on a malformed document, ValidationError on a matrix that
// is not a density matrix.
DensityMatrix state_from_json(const nlohmann::json& j, const Tolerances& tol = {});

// Throws IoError if the file cannot be opened.
DensityMatrix read_state(const std::filesystem::path& path, const Tolerances& tol = {});
void write_state(const DensityMatrix& rho, const std::filesystem::path& path);

// 32 columns: re00..re33 then im00..im33, row-major.
std::string state_csv_header();
std::string state_csv_row(const DensityMatrix& rho);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace qrobust
