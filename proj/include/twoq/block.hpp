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

#include <utility>

#include "twoq/matcore.hpp"
#include "twoq/zz_resource.hpp"

namespace twoq {

/// Parameters of the two-insertion circuit that turns ZZ(gamma) into ZZ(c).
/// Satisfy p² + q² = 1 and sin(c/2) = sin(gamma) sin(b/2).
struct BlockParams {
  double c = 0.0;
  double gamma = 0.0;
  double b = 0.0;
  double p = 0.0;
  double q = 0.0;
};

/// Requires c in (0, π/2], gamma in [π/4, π/2] and c ≤ 2 gamma; throws
/// DomainError otherwise.
BlockParams block_params(double c, double gamma);

/// U1 = [[ip, iq], [-q, p]], U2 = [[ip, -q], [-iq, -p]].
std::pair<Unitary2, Unitary2> u1_u2(const BlockParams& params);

/// Circuit for zz_interaction(c), c in (0, π], built from exactly two copies
/// of `resource` (none when c = π, which is local). The result evaluates
/// exactly, phase included, over the resource's entangler.
Circuit synth_zz_block(double c, const ZzResource& resource);

/// The single-qubit gate exp(i gamma n·σ).
struct AxisAngle {
  double gamma = 0.0;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
};

Unitary2 axis_angle_unitary(const AxisAngle& spec);

/// Basis change U1 with U1 σz U1† = -n·σ, using the closed form in the
/// generic case and σx / I at the poles n_z = +1 / -1.
Unitary2 controlled_u_basis_change(const Eigen::Vector3d& axis);

/// Controlled-U from one ZZ(gamma) interaction; the circuit's entangler is
/// `interaction`.
struct ControlledUCircuit {
  Circuit circuit;
  Unitary4 interaction;
};

/// Throws DomainError for a non-unit axis or non-positive gamma.
ControlledUCircuit controlled_u_circuit(const AxisAngle& spec);

/// Interval coordinate in [0, π/2] of the local-equivalence class of
/// diag(I, u).
double controlled_u_gamma(const Unitary2& u, const ToleranceConfig& tol = {});

}  // namespace twoq
