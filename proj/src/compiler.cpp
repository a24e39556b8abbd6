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

#include "twoq/compiler.hpp"

#include <optional>
#include <sstream>

#include "twoq/block.hpp"
#include "twoq/errors.hpp"
#include "twoq/kak.hpp"
#include "twoq/zz_resource.hpp"

namespace twoq {

namespace {

ZzResource unit_resource(const Unitary4& entangler, const ToleranceConfig& tol) {
  tol.validate();
  require_unitary(entangler, tol.unitarity_tol, "entangler");
  return extract_zz(entangler, tol);
}

// Rescales each factor into SU(2); returns the scalar taken out.
cplx normalize(LocalPair& layer) {
  const cplx sa = std::sqrt(layer.a.determinant());
  const cplx sb = std::sqrt(layer.b.determinant());
  layer.a /= sa;
  layer.b /= sb;
  return sa * sb;
}

}  // namespace

Circuit merge_locals(const Circuit& circuit) {
  Circuit out;
  out.phase = circuit.phase;
  std::optional<LocalPair> pending;
  auto flush = [&] {
    if (!pending) return;
    out.phase *= normalize(*pending);
    out.add_local(*pending);
    pending.reset();
  };
  for (const auto& element : circuit.elements) {
    if (const auto* layer = std::get_if<LocalPair>(&element)) {
      pending = pending ? *layer * *pending : *layer;
    } else {
      flush();
      out.add_entangler();
    }
  }
  flush();
  return out;
}

SynthesisResult synthesize(const Unitary4& target, const Unitary4& entangler, const ToleranceConfig& tol) {
  const ZzResource unit = unit_resource(entangler, tol);
  require_unitary(target, tol.unitarity_tol, "target");
  const ZzResource resource = amplify(unit);
  const KakDecomposition kak = kak_decompose(target, tol);

  // target = phase · (k1 k_x†) ZZ(c1) (k_x k_y†) ZZ(c2) k_y ZZ(c3) k2
  Circuit raw;
  raw.phase = kak.phase;
  auto add_block = [&](double c) {
    if (std::abs(c) > tol.snap_tol) raw.append(synth_zz_block(c, resource));
  };
  raw.add_local(kak.k2);
  add_block(kak.c.c3);
  raw.add_local(k_y());
  add_block(kak.c.c2);
  raw.add_local(k_x() * k_y().adjoint());
  add_block(kak.c.c1);
  raw.add_local(kak.k1 * k_x().adjoint());

  SynthesisResult result;
  result.circuit = merge_locals(raw);

  SynthesisReport& report = result.report;
  report.gamma = unit.gamma;
  report.apps_per_unit = unit.apps_per_unit;
  report.n = resource.repetitions;
  report.bound = 6 * report.n * report.apps_per_unit;
  report.entangler_count = static_cast<int>(result.circuit.entangler_count());
  report.local_count = static_cast<int>(result.circuit.local_count());
  report.residual = phase_distance(evaluate(result.circuit, entangler), target);

  if (!(report.residual < tol.verify_tol)) {
    std::ostringstream msg;
    msg << "synthesized circuit misses the target: residual " << report.residual << " >= verify_tol "
        << tol.verify_tol;
    throw VerificationError(msg.str());
  }
  if (report.entangler_count > report.bound) {
    std::ostringstream msg;
    msg << "synthesized circuit uses " << report.entangler_count << " entangler applications, above the bound "
        << report.bound;
    throw VerificationError(msg.str());
  }
  return result;
}

BoundReport upper_bound(const Unitary4& entangler, const ToleranceConfig& tol) {
  const ZzResource unit = unit_resource(entangler, tol);
  BoundReport out;
  out.gamma = unit.gamma;
  out.apps_per_unit = unit.apps_per_unit;
  out.n = amplify(unit).repetitions;
  out.bound = 6 * out.n * out.apps_per_unit;
  return out;
}

bool efficient_coordinate(double gamma, double slack) {
  return gamma >= kPi / 4 - slack && gamma <= kPi / 2 + slack;
}

bool efficient_as_cnot(const Unitary2& u, const ToleranceConfig& tol) {
  return efficient_coordinate(controlled_u_gamma(u, tol), tol.snap_tol);
}

}  // namespace twoq
