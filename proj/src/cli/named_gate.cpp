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

#include "twoq/cli/named_gate.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "twoq/cli/angle.hpp"
#include "twoq/errors.hpp"
#include "twoq/gates.hpp"

namespace twoq::cli {

namespace {

std::string trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::toupper(ch); });
  return s;
}

}  // namespace

GateDescriptor resolve_gate(std::string_view spec, const ToleranceConfig& tol) {
  const std::string text = trimmed(spec);
  std::string name = text;
  std::string arg;
  bool has_arg = false;
  if (const auto open = text.find('('); open != std::string::npos) {
    if (text.back() != ')') throw ParseError("gate '" + text + "': missing closing ')'");
    name = trimmed(std::string_view(text).substr(0, open));
    arg = trimmed(std::string_view(text).substr(open + 1, text.size() - open - 2));
    has_arg = true;
  }
  name = upper(name);

  auto no_arg = [&](Unitary4 m) {
    if (has_arg) throw ParseError("gate '" + name + "' takes no argument");
    return GateDescriptor{text, m};
  };
  auto need_arg = [&]() -> const std::string& {
    if (!has_arg || arg.empty()) throw ParseError("gate '" + name + "' needs an argument");
    return arg;
  };

  if (name == "CNOT" || name == "CX") return no_arg(gates::cnot());
  if (name == "CZ") return no_arg(gates::cz());
  if (name == "SWAP") return no_arg(gates::swap());
  if (name == "SQRT_SWAP") return no_arg(gates::sqrt_swap());
  if (name == "B") return no_arg(gates::b_gate());
  if (name == "CPHASE") return {text, gates::cphase(parse_angle(need_arg()))};
  if (name == "ZZ") return {text, gates::zz(parse_angle(need_arg()))};
  if (name == "MATRIX") {
    const Eigen::MatrixXcd m = load_matrix_file(need_arg(), tol.unitarity_tol);
    if (m.rows() != 4) throw ParseError("MATRIX(" + arg + "): a two-qubit gate needs a 4x4 matrix");
    return {text, Unitary4(m)};
  }
  throw ParseError("unknown gate '" + text + "'");
}

}  // namespace twoq::cli
