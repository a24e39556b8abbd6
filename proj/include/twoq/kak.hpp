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

#include <array>
#include <iosfwd>
#include <string_view>

#include "twoq/matcore.hpp"

namespace twoq {

/// Interaction coefficients (c1, c2, c3) of a two-qubit gate, in radians.
/// Canonical vectors lie in the chamber π - c2 ≥ c1 ≥ c2 ≥ c3 ≥ 0.
struct CanonicalVector {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  std::array<double, 3> values() const { return {c1, c2, c3}; }
  bool in_chamber(double slack = 0.0) const;
};

std::ostream& operator<<(std::ostream& os, const CanonicalVector& c);

enum class GateClass { Local, SwapClass, Entangling };

std::string_view to_string(GateClass cls);

/// exp(i/2 (c1 σx⊗σx + c2 σy⊗σy + c3 σz⊗σz)).
Unitary4 interaction(const CanonicalVector& c);

/// The magic (Bell) basis as matrix columns. Conjugation by it maps
/// SU(2)⊗SU(2) onto SO(4) and diagonalises every interaction().
const Unitary4& magic_basis();

/// u == phase · k1.matrix() · interaction(c) · k2.matrix()
struct KakDecomposition {
  LocalPair k1;
  CanonicalVector c;
  LocalPair k2;
  cplx phase{1.0, 0.0};

  Unitary4 reconstruct() const;
};

/// interaction(raw) == phase · left.matrix() · interaction(c) · right.matrix()
struct ChamberReduction {
  CanonicalVector c;
  LocalPair left;
  LocalPair right;
  cplx phase{1.0, 0.0};
};

/// Moves an arbitrary coefficient triple into the chamber using shifts by π,
/// pairwise sign flips and permutations, each compensated by local Paulis or
/// Cliffords. Among equivalent chamber points (which only occur on its
/// boundary) the lexicographically smallest is returned; `slack` is the
/// tolerance used both for the chamber test and for tie comparison.
ChamberReduction canonicalize(const std::array<double, 3>& raw, double slack = 1e-10);

/// Cartan decomposition. Throws NonUnitaryError on bad input and
/// VerificationError if the reconstruction misses u by more than verify_tol.
KakDecomposition kak_decompose(const Unitary4& u, const ToleranceConfig& tol = {});

/// Writes a 4x4 matrix that is (up to a scalar) a ⊗ b as scale · (a ⊗ b) with
/// a, b ∈ SU(2).
struct LocalFactors {
  LocalPair pair;
  cplx scale;
};
LocalFactors factor_local(const Unitary4& k);

/// Snaps to the nearest of {0, π/4, π/2, π} when within `tol`.
double snap_angle(double angle, double tol);
CanonicalVector snap(const CanonicalVector& c, double tol);

GateClass classify(const CanonicalVector& c, const ToleranceConfig& tol = {});

/// True iff the canonical vectors agree componentwise within snap_tol.
bool locally_equivalent(const Unitary4& u, const Unitary4& v, const ToleranceConfig& tol = {});

}  // namespace twoq
