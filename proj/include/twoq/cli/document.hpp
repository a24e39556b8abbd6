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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "twoq/compiler.hpp"
#include "twoq/matcore.hpp"

namespace twoq::cli {

/// Matrix interchange: a row-major JSON array of [re, im] pairs, either
/// nested by row ([[[1,0],[0,0]], [[0,0],[1,0]]]) or flat.
nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m);

/// Accepts 2x2 and 4x4 matrices. Throws ParseError on malformed input and
/// NonUnitaryError beyond `unitarity_tol`.
Eigen::MatrixXcd matrix_from_json(const nlohmann::json& j, double unitarity_tol);
Eigen::MatrixXcd load_matrix_file(const std::filesystem::path& path, double unitarity_tol);

/// A gate together with the text it was resolved from.
struct GateDescriptor {
  std::string name;
  Unitary4 matrix;
};

struct CircuitDocument {
  GateDescriptor entangler;
  std::optional<GateDescriptor> target;
  ToleranceConfig tolerances;
  Circuit circuit;
  std::optional<SynthesisReport> report;
};

/// Exact, element-by-element comparison (used for round-trip checks).
bool operator==(const CircuitDocument& lhs, const CircuitDocument& rhs);

nlohmann::json to_json(const CircuitDocument& doc);
CircuitDocument document_from_json(const nlohmann::json& j);

/// Pretty-printed JSON text.
std::string emit(const CircuitDocument& doc);
/// Throws ParseError.
CircuitDocument parse_document(std::string_view text);
CircuitDocument load_document(const std::filesystem::path& path);

}  // namespace twoq::cli
