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

#include "twoq/zz_resource.hpp"

#include <cmath>
#include <sstream>

#include "twoq/errors.hpp"

namespace twoq {

namespace {

// Exact-angle tolerance for the interval checks; not a physics tolerance.
constexpr double kAngleEps = 1e-12;

Unitary2 rot(double angle, const Unitary2& sigma) { return pauli_exp(angle, sigma); }

const Unitary2 kI = Unitary2::Identity();

// Circuit evaluating to the bare interaction A = interaction(kak.c).
Circuit bare_interaction(const KakDecomposition& kak) {
  Circuit a;
  a.add_local(kak.k2.adjoint());
  a.add_entangler();
  a.add_local(kak.k1.adjoint());
  a.phase = 1.0 / kak.phase;
  return a;
}

Circuit conjugated(const Circuit& inner, const LocalPair& k) {
  // k · inner · k†
  Circuit out;
  out.add_local(k.adjoint());
  out.append(inner);
  out.add_local(k);
  return out;
}

// A · (e^{iπ/2 σ}⊗I) · A · (e^{-iπ/2 σ}⊗I)
Circuit doubled(const Circuit& a, const Unitary2& sigma) {
  Circuit out;
  out.add_local(rot(-kPi / 2, sigma), kI);
  out.append(a);
  out.add_local(rot(kPi / 2, sigma), kI);
  out.append(a);
  return out;
}

Circuit half_pi_pair(const Circuit& a) {
  Circuit out;
  out.add_local(rot(kPi / 4, pauli::y()), kI);
  out.add_local(rot(-kPi / 4, pauli::z()), rot(kPi / 4, pauli::z()));
  out.append(a);
  out.add_local(rot(kPi / 4, pauli::z()), rot(-kPi / 4, pauli::z()));
  out.add_local(kI, rot(kPi / 4, pauli::y()));
  out.append(a);
  out.add_local(rot(-kPi / 4, pauli::y()), kI);
  return out;
}

}  // namespace

LocalPair k_x() {
  const Unitary2 r = rot(kPi / 4, pauli::y());
  return {r, r};
}

LocalPair k_y() {
  const Unitary2 r = rot(kPi / 4, pauli::x());
  return {r, r};
}

ExtractionCase extraction_case(const CanonicalVector& c, const ToleranceConfig& tol) {
  switch (classify(c, tol)) {
    case GateClass::Local:
      throw NotEntanglingError("resource gate is local and cannot generate entanglement");
    case GateClass::SwapClass:
      throw NotEntanglingError("resource gate is SWAP-class and cannot generate entanglement");
    case GateClass::Entangling:
      break;
  }
  const CanonicalVector s = snap(c, tol.snap_tol);
  if (s.c3 != 0.0) return ExtractionCase::ZConjugate;
  if (s.c2 == 0.0) return ExtractionCase::SingleApplication;
  if (s.c1 == kPi / 2 && s.c2 == kPi / 2) return ExtractionCase::HalfPiPair;
  if (s.c1 == kPi / 2) return ExtractionCase::YConjugate;
  return ExtractionCase::XConjugate;
}

ZzResource extract_zz(const Unitary4& entangler, const ToleranceConfig& tol) {
  const KakDecomposition kak = kak_decompose(entangler, tol);
  const Circuit a = bare_interaction(kak);

  ZzResource r;
  switch (extraction_case(kak.c, tol)) {
    case ExtractionCase::SingleApplication:
      r.circuit = conjugated(a, k_x());
      r.gamma = kak.c.c1;
      r.apps_per_unit = 1;
      break;
    case ExtractionCase::HalfPiPair:
      r.circuit = half_pi_pair(a);
      r.gamma = kPi / 2;
      r.apps_per_unit = 2;
      break;
    case ExtractionCase::XConjugate:
      r.circuit = conjugated(doubled(a, pauli::x()), k_x());
      r.gamma = 2 * kak.c.c1;
      r.apps_per_unit = 2;
      break;
    case ExtractionCase::YConjugate:
      r.circuit = conjugated(doubled(a, pauli::y()), k_y());
      r.gamma = 2 * kak.c.c2;
      r.apps_per_unit = 2;
      break;
    case ExtractionCase::ZConjugate:
      r.circuit = doubled(a, pauli::z());
      r.gamma = 2 * kak.c.c3;
      r.apps_per_unit = 2;
      break;
  }
  if (r.gamma > kPi) r = reduce_angle(std::move(r));
  if (r.gamma > kPi / 2) r = reflect_angle(std::move(r));
  return r;
}

Circuit shift_down_by_pi(const Circuit& zz_circuit) {
  // ZZ(θ) = i (e^{iπ/2 σz} ⊗ I) ZZ(π + θ) (I ⊗ e^{iπ/2 σz})
  Circuit out;
  out.add_local(kI, rot(kPi / 2, pauli::z()));
  out.append(zz_circuit);
  out.add_local(rot(kPi / 2, pauli::z()), kI);
  out.phase *= cplx(0.0, 1.0);
  return out;
}

Circuit mirror_about_half_pi(const Circuit& zz_circuit) {
  // ZZ(π - θ) = -i (e^{-iπ/2 σz} e^{iπ/2 σy} ⊗ I) ZZ(θ) (e^{-iπ/2 σy} ⊗ e^{-iπ/2 σz})
  Circuit out;
  out.add_local(rot(-kPi / 2, pauli::y()), rot(-kPi / 2, pauli::z()));
  out.append(zz_circuit);
  out.add_local(rot(-kPi / 2, pauli::z()) * rot(kPi / 2, pauli::y()), kI);
  out.phase *= cplx(0.0, -1.0);
  return out;
}

ZzResource reduce_angle(ZzResource r) {
  if (!(r.gamma > 0.0 && r.gamma < 2 * kPi) || std::abs(r.gamma - kPi) <= kAngleEps) {
    std::ostringstream msg;
    msg << "reduce_angle: gamma " << r.gamma << " must lie in (0, 2pi) and differ from pi";
    throw DomainError(msg.str());
  }
  if (r.gamma > kPi) {
    r.circuit = shift_down_by_pi(r.circuit);
    r.gamma -= kPi;
  }
  return r;
}

ZzResource reflect_angle(ZzResource r) {
  if (!(r.gamma > 0.0 && r.gamma < kPi)) {
    std::ostringstream msg;
    msg << "reflect_angle: gamma " << r.gamma << " must lie in (0, pi)";
    throw DomainError(msg.str());
  }
  if (r.gamma > kPi / 2 + kAngleEps) {
    r.circuit = mirror_about_half_pi(r.circuit);
    r.gamma = kPi - r.gamma;
  }
  return r;
}

ZzResource amplify(ZzResource r) {
  if (!(r.gamma > 0.0 && r.gamma <= kPi / 2 + kAngleEps)) {
    std::ostringstream msg;
    msg << "amplify: gamma " << r.gamma << " must lie in (0, pi/2]";
    throw DomainError(msg.str());
  }
  const int n = std::max(1, static_cast<int>(std::ceil((kPi / 4 - kAngleEps) / r.gamma)));
  Circuit repeated;
  for (int k = 0; k < n; ++k) repeated.append(r.circuit);
  r.circuit = std::move(repeated);
  r.gamma *= n;
  r.repetitions *= n;
  return r;
}

}  // namespace twoq
