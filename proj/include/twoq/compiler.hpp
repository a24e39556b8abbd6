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

#include "twoq/matcore.hpp"

namespace twoq {

/// Entangler-dependent part of a synthesis: the unit interaction angle, its
/// cost in entangler applications, the repetition count and the resulting
/// uniform bound 6 · n · apps_per_unit.
struct BoundReport {
  double gamma = 0.0;
  int apps_per_unit = 0;
  int n = 0;
  int bound = 0;
};

struct SynthesisReport {
  double gamma = 0.0;
  int apps_per_unit = 0;
  int n = 0;
  int entangler_count = 0;
  int local_count = 0;
  double residual = 0.0;
  int bound = 0;
};

struct SynthesisResult {
  Circuit circuit;
  SynthesisReport report;
};

/// Exact circuit for `target` over local layers and applications of
/// `entangler`. Blocks whose interaction coefficient snaps to zero are
/// omitted. Throws NonUnitaryError, NotEntanglingError, or VerificationError
/// if the evaluated circuit misses the target by verify_tol or more.
SynthesisResult synthesize(const Unitary4& target, const Unitary4& entangler, const ToleranceConfig& tol = {});

/// Upper bound on entangler applications over all targets. Depends only on
/// the entangler's canonical vector.
BoundReport upper_bound(const Unitary4& entangler, const ToleranceConfig& tol = {});

/// Whether a coordinate on the controlled-gate interval [0, π/2] attains the
/// CNOT bound, i.e. lies in [π/4, π/2]. `slack` widens the interval.
bool efficient_coordinate(double gamma, double slack = 0.0);

/// efficient_coordinate(controlled_u_gamma(u)) with snap_tol as slack.
bool efficient_as_cnot(const Unitary2& u, const ToleranceConfig& tol = {});

/// Multiplies runs of adjacent local layers into one SU(2)⊗SU(2) layer and
/// moves the leftover scalars into the circuit phase.
Circuit merge_locals(const Circuit& circuit);

}  // namespace twoq
