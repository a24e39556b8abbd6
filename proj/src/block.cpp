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

#include "twoq/block.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "twoq/errors.hpp"
#include "twoq/gates.hpp"
#include "twoq/kak.hpp"

namespace twoq {

namespace {

constexpr double kAngleEps = 1e-12;

// Below this transverse norm the axis is treated as a pole of the
// basis-change closed form; the induced error is of the same order.
constexpr double kPoleEps = 1e-12;

}  // namespace

BlockParams block_params(double c, double gamma) {
  if (!(c > 0.0 && c <= kPi / 2 + kAngleEps)) {
    std::ostringstream msg;
    msg << "block_params: block angle " << c << " outside (0, pi/2]";
    throw DomainError(msg.str());
  }
  if (c > 2 * gamma + kAngleEps) {
    std::ostringstream msg;
    msg << "block_params: block angle " << c << " exceeds 2*gamma = " << 2 * gamma
        << "; a resource angle of at least pi/4 is needed to reach it";
    throw DomainError(msg.str());
  }
  if (!(gamma >= kPi / 4 - kAngleEps && gamma <= kPi / 2 + kAngleEps)) {
    std::ostringstream msg;
    msg << "block_params: resource angle " << gamma << " outside [pi/4, pi/2]";
    throw DomainError(msg.str());
  }

  BlockParams out;
  out.c = c;
  out.gamma = gamma;
  const double s2 = std::sin(gamma) * std::sin(gamma);
  const double arg = (std::cos(c) - std::cos(gamma) * std::cos(gamma)) / s2;
  out.b = std::acos(std::clamp(arg, -1.0, 1.0));

  // tan(c/2) / tan(gamma) written as cot(gamma) tan(c/2), with cot(π/2) = 0.
  const double cot = std::abs(gamma - kPi / 2) <= kAngleEps ? 0.0 : std::cos(gamma) / std::sin(gamma);
  const double ratio = std::min(1.0, cot * std::tan(c / 2));
  out.p = std::sqrt(0.5 * (1 + ratio));
  out.q = std::sqrt(0.5 * (1 - ratio));
  return out;
}

std::pair<Unitary2, Unitary2> u1_u2(const BlockParams& params) {
  const cplx i(0.0, 1.0);
  const double p = params.p;
  const double q = params.q;
  Unitary2 u1, u2;
  u1 << i * p, i * q, -q, p;
  u2 << i * p, -q, -i * q, -p;
  return {u1, u2};
}

Circuit synth_zz_block(double c, const ZzResource& resource) {
  if (!(resource.gamma >= kPi / 4 - kAngleEps && resource.gamma <= kPi / 2 + kAngleEps)) {
    std::ostringstream msg;
    msg << "synth_zz_block: resource angle " << resource.gamma << " outside [pi/4, pi/2]";
    throw DomainError(msg.str());
  }
  if (!(c > 0.0 && c <= kPi)) {
    std::ostringstream msg;
    msg << "synth_zz_block: block angle " << c << " outside (0, pi]";
    throw DomainError(msg.str());
  }
  if (c >= kPi) {
    // ZZ(π) = i σz⊗σz
    Circuit local;
    local.add_local(pauli::z(), pauli::z());
    local.phase = cplx(0.0, 1.0);
    return local;
  }
  if (c > kPi / 2) return mirror_about_half_pi(synth_zz_block(kPi - c, resource));

  const BlockParams params = block_params(c, resource.gamma);
  const auto [u1, u2] = u1_u2(params);
  const Unitary2 id = Unitary2::Identity();

  Circuit out;
  out.add_local(id, u2);
  out.append(resource.circuit);
  out.add_local(id, pauli_exp((params.b + kPi) / 2, pauli::y()));
  out.append(resource.circuit);
  out.add_local(id, u1);
  return out;
}

Unitary2 axis_angle_unitary(const AxisAngle& spec) {
  const Eigen::Vector3d& n = spec.axis;
  const Unitary2 n_sigma = n.x() * pauli::x() + n.y() * pauli::y() + n.z() * pauli::z();
  return pauli_exp(spec.gamma, n_sigma);
}

Unitary2 controlled_u_basis_change(const Eigen::Vector3d& axis) {
  const double nx = axis.x();
  const double ny = axis.y();
  const double nz = axis.z();
  const double transverse2 = nx * nx + ny * ny;
  if (transverse2 < kPoleEps * kPoleEps) return nz > 0 ? Unitary2(pauli::x()) : Unitary2(pauli::identity());

  // 1 ∓ nz evaluated without cancellation near the poles.
  const double one_minus = nz > 0 ? transverse2 / (1 + nz) : 1 - nz;
  const double one_plus = nz < 0 ? transverse2 / (1 - nz) : 1 + nz;
  const cplx i(0.0, 1.0);
  Unitary2 u1;
  u1 << i * std::sqrt(one_minus / 2), std::sqrt(one_plus / 2),
        cplx(ny, -nx) / std::sqrt(2 * one_minus), cplx(nx, ny) / std::sqrt(2 * one_plus);
  return u1;
}

ControlledUCircuit controlled_u_circuit(const AxisAngle& spec) {
  if (std::abs(spec.axis.norm() - 1.0) > kAngleEps) {
    std::ostringstream msg;
    msg << "controlled_u_circuit: axis norm " << spec.axis.norm() << " is not 1";
    throw DomainError(msg.str());
  }
  if (!(spec.gamma > 0.0) || !std::isfinite(spec.gamma)) throw DomainError("controlled_u_circuit: gamma must be positive");

  const Unitary2 u1 = controlled_u_basis_change(spec.axis);
  const Unitary2 id = Unitary2::Identity();
  ControlledUCircuit out;
  out.circuit.add_local(id, pauli_exp(-spec.gamma / 2, pauli::z()) * u1.adjoint());
  out.circuit.add_entangler();
  out.circuit.add_local(id, u1);
  out.interaction = zz_interaction(spec.gamma);
  return out;
}

double controlled_u_gamma(const Unitary2& u, const ToleranceConfig& tol) {
  require_unitary(u, tol.unitarity_tol, "controlled gate");
  const double c1 = kak_decompose(gates::controlled(u), tol).c.c1;
  return std::clamp(c1 > kPi / 2 ? kPi - c1 : c1, 0.0, kPi / 2);
}

}  // namespace twoq
