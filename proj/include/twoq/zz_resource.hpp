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

#include "twoq/kak.hpp"
#include "twoq/matcore.hpp"

namespace twoq {

/// A circuit over some entangler that evaluates exactly (global phase
/// included) to zz_interaction(gamma).
struct ZzResource {
  Circuit circuit;
  double gamma = 0.0;
  /// Entangler applications needed for one copy of the unit interaction.
  int apps_per_unit = 1;
  /// Copies of the unit interaction concatenated by amplify().
  int repetitions = 1;
};

/// How the unit interaction is extracted from the entangler's canonical
/// vector (γ1, γ2, γ3).
enum class ExtractionCase {
  SingleApplication,  ///< γ2 = γ3 = 0: one application conjugated by k_x.
  HalfPiPair,         ///< γ1 = γ2 = π/2, γ3 = 0: dedicated two-application circuit.
  XConjugate,         ///< γ3 = 0, 0 < γ2 < π/2: A σx¹ A σx¹, angle 2γ1.
  YConjugate,         ///< as XConjugate with γ1 = π/2: A σy¹ A σy¹, angle 2γ2.
  ZConjugate,         ///< 0 < γ3 < π/2: A σz¹ A σz¹, angle 2γ3.
};

/// Case selection on snapped angles. Throws NotEntanglingError for Local and
/// SWAP-class vectors.
ExtractionCase extraction_case(const CanonicalVector& c, const ToleranceConfig& tol = {});

/// k_x = e^{iπ/4 σy} ⊗ e^{iπ/4 σy}; σx⊗σx = k_x† σz⊗σz k_x.
LocalPair k_x();
/// k_y = e^{iπ/4 σx} ⊗ e^{iπ/4 σx}; σy⊗σy = k_y† σz⊗σz k_y.
LocalPair k_y();

/// Builds zz_interaction(gamma) with gamma in (0, π/2] from at most two
/// applications of `entangler`.
ZzResource extract_zz(const Unitary4& entangler, const ToleranceConfig& tol = {});

/// Wraps a circuit for ZZ(θ) into one for ZZ(θ - π).
Circuit shift_down_by_pi(const Circuit& zz_circuit);
/// Wraps a circuit for ZZ(θ) into one for ZZ(π - θ).
Circuit mirror_about_half_pi(const Circuit& zz_circuit);

/// gamma in (π, 2π) is brought down to gamma - π. Requires gamma in (0, 2π),
/// gamma != π; throws DomainError otherwise.
ZzResource reduce_angle(ZzResource r);

/// gamma in (π/2, π) becomes π - gamma. Requires gamma in (0, π).
ZzResource reflect_angle(ZzResource r);

/// Repeats the resource the minimal n times with n·gamma ≥ π/4.
ZzResource amplify(ZzResource r);

}  // namespace twoq
