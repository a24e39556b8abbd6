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

#include "twoq/gates.hpp"

#include "twoq/kak.hpp"

namespace twoq::gates {

Unitary4 cnot() {
  Unitary4 m = Unitary4::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

Unitary4 cz() {
  Unitary4 m = Unitary4::Identity();
  m(3, 3) = -1.0;
  return m;
}

Unitary4 swap() {
  Unitary4 m = Unitary4::Zero();
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
  return m;
}

Unitary4 sqrt_swap() {
  Unitary4 m = Unitary4::Zero();
  m(0, 0) = m(3, 3) = 1.0;
  m(1, 1) = m(2, 2) = cplx(0.5, -0.5);
  m(1, 2) = m(2, 1) = cplx(0.5, 0.5);
  return m;
}

Unitary4 b_gate() { return interaction({kPi / 2, kPi / 4, 0.0}); }

Unitary4 cphase(double phi) {
  Unitary4 m = Unitary4::Identity();
  m(3, 3) = std::polar(1.0, phi);
  return m;
}

Unitary4 zz(double gamma) { return zz_interaction(gamma); }

Unitary4 controlled(const Unitary2& u) {
  Unitary4 m = Unitary4::Identity();
  m.block<2, 2>(2, 2) = u;
  return m;
}

Unitary2 phase(double phi) {
  Unitary2 m = Unitary2::Identity();
  m(1, 1) = std::polar(1.0, phi);
  return m;
}

}  // namespace twoq::gates
