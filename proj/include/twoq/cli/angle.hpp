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

namespace twoq::cli {

/// Evaluates an angle expression such as "pi/5", "2pi/3", "-3*pi/4", "0.25"
/// or "(pi+1)/2". `pi` is the double nearest π, so "2pi/3" equals
/// 2 * kPi / 3 bit for bit. Throws ParseError.
double parse_angle(std::string_view text);

}  // namespace twoq::cli
