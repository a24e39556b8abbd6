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

#include "twoq/matcore.hpp"

#include <algorithm>
#include <sstream>

#include "twoq/errors.hpp"

namespace twoq {

void ToleranceConfig::validate() const {
  if (!(unitarity_tol > 0) || !(snap_tol > 0) || !(verify_tol > 0))
    throw DomainError("tolerances must be strictly positive");
  if (snap_tol < unitarity_tol) throw DomainError("snap_tol must be >= unitarity_tol");
}

namespace {

template <typename M>
void check_unitary(const M& u, double tol, const char* what) {
  if (!u.allFinite()) {
    std::ostringstream msg;
    msg << what << " contains non-finite entries";
    throw NonUnitaryError(msg.str());
  }
  const double err = unitarity_error(u);
  if (err > tol) {
    std::ostringstream msg;
    msg << what << " is not unitary (max |UU^dag - I| = " << err << ", tolerance " << tol << ")";
    throw NonUnitaryError(msg.str());
  }
}

}  // namespace

void require_unitary(const Unitary2& u, double tol, const char* what) { check_unitary(u, tol, what); }
void require_unitary(const Unitary4& u, double tol, const char* what) { check_unitary(u, tol, what); }

SpecialProjection project_special(const Unitary4& u, double unitarity_tol) {
  require_unitary(u, unitarity_tol, "matrix");
  const cplx det = u.determinant();
  // principal branch: arg in (-pi, pi]
  const cplx root = std::polar(1.0, std::arg(det) / 4);
  return {u / root, root};
}

void Circuit::append(const Circuit& next) {
  elements.insert(elements.end(), next.elements.begin(), next.elements.end());
  phase *= next.phase;
}

std::size_t Circuit::entangler_count() const {
  return static_cast<std::size_t>(std::count_if(elements.begin(), elements.end(), [](const auto& e) {
    return std::holds_alternative<EntanglerApp>(e);
  }));
}

std::size_t Circuit::local_count() const { return elements.size() - entangler_count(); }

Circuit concat(const Circuit& first, const Circuit& second) {
  Circuit out = first;
  out.append(second);
  return out;
}

Unitary4 evaluate(const Circuit& circuit, const Unitary4& entangler) {
  Unitary4 acc = Unitary4::Identity();
  for (const auto& element : circuit.elements) {
    if (const auto* layer = std::get_if<LocalPair>(&element)) {
      acc = layer->matrix() * acc;
    } else {
      acc = entangler * acc;
    }
  }
  return circuit.phase * acc;
}

}  // namespace twoq
