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

#include "qrobust/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qrobust/errors.hpp"

namespace qrobust {
namespace {

void write_indent(std::ostream& os, int indent, int depth) {
  if (indent < 0) return;
  os << '\n';
  for (int i = 0; i < indent * depth; ++i) os << ' ';
}

// Arrays of scalars are kept on one line so matrices stay readable.
bool is_flat_array(const Json& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void write_value(std::ostream& os, const Json& j, int indent, int depth) {
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',';
        first = false;
        write_indent(os, indent, depth + 1);
        os << Json(it.key()).dump() << (indent < 0 ? ":" : ": ");
        write_value(os, it.value(), indent, depth + 1);
      }
      write_indent(os, indent, depth);
      os << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      const bool flat = is_flat_array(j);
      os << '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) os << (flat && indent >= 0 ? ", " : ",");
        first = false;
        if (!flat) write_indent(os, indent, depth + 1);
        write_value(os, e, indent, depth + 1);
      }
      if (!flat) write_indent(os, indent, depth);
      os << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (std::isfinite(x)) {
        os << format_double(x);
      } else {
        os << "null";
      }
      return;
    }
    default:
      os << j.dump();
      return;
  }
}

double get_number(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string("state file: ") + what + " is not a number");
  return j.get<double>();
}

std::array<double, 16> read_block(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("state file: missing \"") + key + "\"");
  const auto& rows = doc.at(key);
  if (!rows.is_array() || rows.size() != 4) {
    throw ParseError(std::string("state file: \"") + key + "\" must be a 4x4 array");
  }
  std::array<double, 16> out{};
  for (std::size_t r = 0; r < 4; ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || row.size() != 4) {
      throw ParseError(std::string("state file: row ") + std::to_string(r) + " of \"" + key +
                       "\" must have 4 entries");
    }
    for (std::size_t c = 0; c < 4; ++c) out[r * 4 + c] = get_number(row[c], key);
  }
  return out;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_json(std::ostream& os, const Json& j, int indent) { write_value(os, j, indent, 0); }

std::string dump_json(const Json& j, int indent) {
  std::ostringstream os;
  write_json(os, j, indent);
  return os.str();
}

Json state_to_json(const DensityMatrix& rho) {
  Json re = Json::array();
  Json im = Json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    Json rr = Json::array();
    Json ir = Json::array();
    for (std::size_t c = 0; c < 4; ++c) {
      rr.push_back(rho(r, c).real());
      ir.push_back(rho(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ir);
  }
  Json doc;
  doc["basis"] = "uu,ud,du,dd";
  doc["re"] = re;
  doc["im"] = im;
  return doc;
}

DensityMatrix state_from_json(const nlohmann::json& doc, const Tolerances& tol) {
  if (!doc.is_object()) throw ParseError("state file: top level must be an object");
  if (doc.contains("basis")) {
    if (!doc.at("basis").is_string() || doc.at("basis").get<std::string>() != "uu,ud,du,dd") {
      throw ParseError("state file: basis must be \"uu,ud,du,dd\"");
    }
  }
  const auto re = read_block(doc, "re");
  const auto im = read_block(doc, "im");
  ComplexMatrix4 m;
  for (std::size_t i = 0; i < 16; ++i) m.a[i] = Complex(re[i], im[i]);
  return DensityMatrix::from_matrix(m, tol);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

DensityMatrix read_state(const std::filesystem::path& path, const Tolerances& tol) {
  const std::string text = read_text_file(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("state file '" + path.string() + "': " + e.what());
  }
  return state_from_json(doc, tol);
}

void write_state(const DensityMatrix& rho, const std::filesystem::path& path) {
  write_text_file(path, dump_json(state_to_json(rho)) + "\n");
}

std::string state_csv_header() {
  std::string h;
  for (const char* part : {"re", "im"})
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        if (!h.empty()) h += ',';
        h += part + std::to_string(r) + std::to_string(c);
      }
  return h;
}

std::string state_csv_row(const DensityMatrix& rho) {
  std::string s;
  for (int part = 0; part < 2; ++part)
    for (std::size_t i = 0; i < 16; ++i) {
      if (!s.empty()) s += ',';
      s += format_double(part == 0 ? rho.matrix().a[i].real() : rho.matrix().a[i].imag());
    }
  return s;
}

}  // namespace qrobust
