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

#include <string_view>

#include "twoq/cli/document.hpp"

namespace twoq::cli {

/// Resolves CNOT, CZ, SWAP, SQRT_SWAP, B, CPHASE(φ), ZZ(γ) or MATRIX(path).
/// Names are case-insensitive; angles use parse_angle(). Throws ParseError
/// for unknown names or bad arguments and NonUnitaryError for bad matrices.
GateDescriptor resolve_gate(std::string_view spec, const ToleranceConfig& tol = {});

}  // namespace twoq::cli
