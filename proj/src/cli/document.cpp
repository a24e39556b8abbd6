// Copyright 2026 The twoq Authors
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

#include "twoq/cli/document.hpp"

#include <fstream>
#include <sstream>

#include "twoq/errors.hpp"

namespace twoq::cli {

using nlohmann::json;

namespace {

constexpr std::string_view kFormat = "twoq-circuit";
constexpr int kVersion = 1;

cplx complex_from_json(const json& pair) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
    throw ParseError("matrix entries must be [re, im] number pairs");
  const cplx z(pair[0].get<double>(), pair[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ParseError("matrix entry is not finite");
  return z;
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("circuit document: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("circuit document: bad field '") + key + "': " + e.what());
  }
}

const json& object_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_object())
    throw ParseError(std::string("circuit document: missing object '") + key + "'");
  return j.at(key);
}

// Matrices inside a document are checked only for shape; verify reports
// residuals rather than rejecting a slightly perturbed circuit.
Eigen::MatrixXcd raw_matrix(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array");
  std::vector<cplx> entries;
  if (j[0].is_array() && !j[0].empty() && j[0][0].is_array()) {
    for (const auto& row : j) {
      if (!row.is_array() || row.size() != j.size()) throw ParseError("matrix rows must form a square array");
      for (const auto& pair : row) entries.push_back(complex_from_json(pair));
    }
  } else {
    for (const auto& pair : j) entries.push_back(complex_from_json(pair));
  }
  const std::size_t n = entries.size() == 4 ? 2 : entries.size() == 16 ? 4 : 0;
  if (n == 0) throw ParseError("matrix must be 2x2 or 4x4");
  Eigen::MatrixXcd m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = entries[r * n + c];
  return m;
}

Unitary2 matrix2(const json& j) {
  const Eigen::MatrixXcd m = raw_matrix(j);
  if (m.rows() != 2) throw ParseError("local layer factors must be 2x2");
  return m;
}

Unitary4 matrix4(const json& j) {
  const Eigen::MatrixXcd m = raw_matrix(j);
  if (m.rows() != 4) throw ParseError("gate matrices must be 4x4");
  return m;
}

json gate_to_json(const GateDescriptor& g) { return {{"name", g.name}, {"matrix", matrix_to_json(g.matrix)}}; }

GateDescriptor gate_from_json(const json& j) {
  return {field<std::string>(j, "name"), matrix4(j.at("matrix"))};
}

json report_to_json(const SynthesisReport& r) {
  return {{"gamma", r.gamma},         {"apps_per_unit", r.apps_per_unit},
          {"n", r.n},                 {"entangler_count", r.entangler_count},
          {"local_count", r.local_count}, {"residual", r.residual},
          {"bound", r.bound}};
}

SynthesisReport report_from_json(const json& j) {
  SynthesisReport r;
  r.gamma = field<double>(j, "gamma");
  r.apps_per_unit = field<int>(j, "apps_per_unit");
  r.n = field<int>(j, "n");
  r.entangler_count = field<int>(j, "entangler_count");
  r.local_count = field<int>(j, "local_count");
  r.residual = field<double>(j, "residual");
  r.bound = field<int>(j, "bound");
  return r;
}

bool same_gate(const GateDescriptor& a, const GateDescriptor& b) { return a.name == b.name && a.matrix == b.matrix; }

bool same_element(const CircuitElement& a, const CircuitElement& b) {
  if (a.index() != b.index()) return false;
  if (const auto* la = std::get_if<LocalPair>(&a)) {
    const auto& lb = std::get<LocalPair>(b);
    return la->a == lb.a && la->b == lb.b;
  }
  return true;
}

bool same_report(const SynthesisReport& a, const SynthesisReport& b) {
  return a.gamma == b.gamma && a.apps_per_unit == b.apps_per_unit && a.n == b.n &&
         a.entangler_count == b.entangler_count && a.local_count == b.local_count && a.residual == b.residual &&
         a.bound == b.bound;
}

}  // namespace

json matrix_to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const json& j, double unitarity_tol) {
  const Eigen::MatrixXcd m = raw_matrix(j);
  if (!is_unitary(m, unitarity_tol)) {
    std::ostringstream msg;
    msg << "matrix is not unitary (max |UU^dag - I| = " << unitarity_error(m) << ", tolerance " << unitarity_tol
        << ")";
    throw NonUnitaryError(msg.str());
  }
  return m;
}

Eigen::MatrixXcd load_matrix_file(const std::filesystem::path& path, double unitarity_tol) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("matrix file '" + path.string() + "': " + e.what());
  }
  return matrix_from_json(j, unitarity_tol);
}

bool operator==(const CircuitDocument& lhs, const CircuitDocument& rhs) {
  if (!same_gate(lhs.entangler, rhs.entangler)) return false;
  if (lhs.target.has_value() != rhs.target.has_value()) return false;
  if (lhs.target && !same_gate(*lhs.target, *rhs.target)) return false;
  if (lhs.tolerances.unitarity_tol != rhs.tolerances.unitarity_tol ||
      lhs.tolerances.snap_tol != rhs.tolerances.snap_tol || lhs.tolerances.verify_tol != rhs.tolerances.verify_tol)
    return false;
  if (lhs.circuit.phase != rhs.circuit.phase) return false;
  if (lhs.circuit.elements.size() != rhs.circuit.elements.size()) return false;
  for (std::size_t k = 0; k < lhs.circuit.elements.size(); ++k)
    if (!same_element(lhs.circuit.elements[k], rhs.circuit.elements[k])) return false;
  if (lhs.report.has_value() != rhs.report.has_value()) return false;
  return !lhs.report || same_report(*lhs.report, *rhs.report);
}

json to_json(const CircuitDocument& doc) {
  json header = {{"entangler", gate_to_json(doc.entangler)},
                 {"tolerances",
                  {{"unitarity_tol", doc.tolerances.unitarity_tol},
                   {"snap_tol", doc.tolerances.snap_tol},
                   {"verify_tol", doc.tolerances.verify_tol}}}};
  if (doc.target) header["target"] = gate_to_json(*doc.target);

  json elements = json::array();
  for (const auto& element : doc.circuit.elements) {
    if (const auto* layer = std::get_if<LocalPair>(&element)) {
      elements.push_back({{"kind", "local"}, {"a", matrix_to_json(layer->a)}, {"b", matrix_to_json(layer->b)}});
    } else {
      elements.push_back({{"kind", "entangler"}});
    }
  }

  json out = {{"format", kFormat},
              {"version", kVersion},
              {"header", std::move(header)},
              {"elements", std::move(elements)},
              {"phase", complex_to_json(doc.circuit.phase)}};
  if (doc.report) out["report"] = report_to_json(*doc.report);
  return out;
}

CircuitDocument document_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("circuit document must be a JSON object");
  if (field<std::string>(j, "format") != kFormat) throw ParseError("not a twoq circuit document");
  if (field<int>(j, "version") != kVersion) throw ParseError("unsupported circuit document version");

  CircuitDocument doc;
  try {
    const json& header = object_field(j, "header");
    doc.entangler = gate_from_json(object_field(header, "entangler"));
    if (header.contains("target")) doc.target = gate_from_json(object_field(header, "target"));
    const json& tol = object_field(header, "tolerances");
    doc.tolerances.unitarity_tol = field<double>(tol, "unitarity_tol");
    doc.tolerances.snap_tol = field<double>(tol, "snap_tol");
    doc.tolerances.verify_tol = field<double>(tol, "verify_tol");

    const json& elements = j.at("elements");
    if (!elements.is_array()) throw ParseError("circuit document: 'elements' must be an array");
    for (const auto& e : elements) {
      const auto kind = field<std::string>(e, "kind");
      if (kind == "local") {
        doc.circuit.add_local(matrix2(e.at("a")), matrix2(e.at("b")));
      } else if (kind == "entangler") {
        doc.circuit.add_entangler();
      } else {
        throw ParseError("circuit document: unknown element kind '" + kind + "'");
      }
    }
    doc.circuit.phase = complex_from_json(j.at("phase"));
    if (j.contains("report")) doc.report = report_from_json(object_field(j, "report"));
  } catch (const json::exception& e) {
    throw ParseError(std::string("circuit document: ") + e.what());
  }
  return doc;
}

std::string emit(const CircuitDocument& doc) { return to_json(doc).dump(2) + "\n"; }

CircuitDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("circuit document is not valid JSON: ") + e.what());
  }
  return document_from_json(j);
}

CircuitDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open circuit document '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

}  // namespace twoq::cli
