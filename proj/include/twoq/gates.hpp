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

namespace twoq::gates {

// Two-qubit gates in the computational basis |q1 q2>, q1 most significant.
// All built from closed forms; none uses decimal literals.

Unitary4 cnot();
Unitary4 cz();
Unitary4 swap();
/// e^{iπ/8} exp(i π/8 (σx⊗σx + σy⊗σy + σz⊗σz)): the square root of SWAP
/// whose singlet eigenvalue is -i, canonical vector (π/4, π/4, π/4). Its
/// adjoint, the other common convention, sits at (3π/4, π/4, π/4).
Unitary4 sqrt_swap();
/// exp(i/2 (π/2 σx⊗σx + π/4 σy⊗σy)).
Unitary4 b_gate();
/// diag(1, 1, 1, e^{iφ}).
Unitary4 cphase(double phi);
/// exp(i (γ/2) σz⊗σz).
Unitary4 zz(double gamma);

/// Block-diagonal diag(I, u): u applied to qubit 2 when qubit 1 is |1>.
Unitary4 controlled(const Unitary2& u);

/// diag(1, e^{iφ}).
Unitary2 phase(double phi);

}  // namespace twoq::gates
