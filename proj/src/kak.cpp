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

#include "twoq/kak.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "twoq/errors.hpp"

namespace twoq {

namespace {

using Vec4c = Eigen::Matrix<cplx, 4, 1>;

struct MagicTables {
  Unitary4 basis;
  // Eigenvalues (±1) of σx⊗σx, σy⊗σy, σz⊗σz on each magic basis vector.
  std::array<Eigen::Vector4d, 3> signs;
};

const MagicTables& magic() {
  static const MagicTables tables = [] {
    MagicTables t;
    const double r = 1.0 / std::sqrt(2.0);
    const cplx i(0.0, 1.0);
    t.basis << r, 0, 0, i * r,
               0, i * r, r, 0,
               0, i * r, -r, 0,
               r, 0, 0, -i * r;
    const std::array<Unitary2, 3> paulis = {pauli::x(), pauli::y(), pauli::z()};
    for (int j = 0; j < 3; ++j) {
      const Unitary4 d = t.basis.adjoint() * tensor(paulis[j], paulis[j]) * t.basis;
      for (int k = 0; k < 4; ++k) t.signs[j](k) = std::round(d(k, k).real());
    }
    return t;
  }();
  return tables;
}

Unitary2 pauli_by_index(int j) {
  switch (j) {
    case 0: return pauli::x();
    case 1: return pauli::y();
    default: return pauli::z();
  }
}

// Single-qubit Clifford C with C† σ_i C = ±σ_j and C† σ_j C = ±σ_i, fixing
// the third Pauli up to sign.
Unitary2 transposition_clifford(int i, int j) {
  const int missing = 3 - i - j;
  switch (missing) {
    case 2: {  // x <-> y
      Unitary2 s = Unitary2::Identity();
      s(1, 1) = cplx(0.0, 1.0);
      return s;
    }
    case 1: {  // x <-> z
      const double r = 1.0 / std::sqrt(2.0);
      Unitary2 h;
      h << r, r, r, -r;
      return h;
    }
    default:  // y <-> z
      return pauli_exp(kPi / 4, pauli::x());
  }
}

// Running state for interaction(raw) == phase · left · interaction(c) · right.
struct ChamberState {
  std::array<double, 3> c{};
  LocalPair left;
  LocalPair right;
  cplx phase{1.0, 0.0};

  // Negate every coordinate except `keep` by conjugating with σ_keep on
  // qubit 1.
  void flip_all_but(int keep) {
    const LocalPair p{pauli_by_index(keep), Unitary2::Identity()};
    left = left * p;
    right = p * right;
    for (int j = 0; j < 3; ++j)
      if (j != keep) c[j] = -c[j];
  }

  // c[j] += shifts·π. Uses interaction(c) = interaction(c + π e_j) · (∓i) σ_j⊗σ_j.
  void shift(int j, int shifts) {
    const LocalPair pp{pauli_by_index(j), pauli_by_index(j)};
    const cplx step = shifts > 0 ? cplx(0.0, -1.0) : cplx(0.0, 1.0);
    for (int k = 0; k < std::abs(shifts); ++k) {
      right = pp * right;
      phase *= step;
    }
    c[j] += shifts * kPi;
  }

  // Exchange coordinates i and j: interaction(c) = (C⊗C) interaction(c') (C⊗C)†.
  void transpose(int i, int j) {
    const Unitary2 cl = transposition_clifford(i, j);
    left = left * LocalPair{cl, cl};
    right = LocalPair{cl.adjoint(), cl.adjoint()} * right;
    std::swap(c[i], c[j]);
  }
};

// A candidate is identified by which coordinate survives the sign flip
// (-1 for none), integer π-shifts per coordinate, and a permutation.
struct Move {
  int keep = -1;
  std::array<int, 3> shifts{};
  std::array<int, 3> perm{0, 1, 2};
};

ChamberState apply_move(const std::array<double, 3>& raw, const Move& move) {
  ChamberState s;
  s.c = raw;
  if (move.keep >= 0) s.flip_all_but(move.keep);
  for (int j = 0; j < 3; ++j)
    if (move.shifts[j] != 0) s.shift(j, move.shifts[j]);
  // Realise c' = (c[perm[0]], c[perm[1]], c[perm[2]]) by transpositions.
  std::array<int, 3> where{0, 1, 2};  // where[k]: original index now at slot k
  for (int k = 0; k < 3; ++k) {
    int slot = k;
    while (where[slot] != move.perm[k]) ++slot;
    if (slot != k) {
      s.transpose(k, slot);
      std::swap(where[k], where[slot]);
    }
  }
  return s;
}

std::array<double, 3> permuted(const std::array<double, 3>& v, const std::array<int, 3>& perm) {
  return {v[perm[0]], v[perm[1]], v[perm[2]]};
}

bool chamber_ok(const std::array<double, 3>& c, double slack) {
  return CanonicalVector{c[0], c[1], c[2]}.in_chamber(slack);
}

bool lex_less(const std::array<double, 3>& a, const std::array<double, 3>& b, double tol) {
  for (int j = 0; j < 3; ++j) {
    if (a[j] < b[j] - tol) return true;
    if (a[j] > b[j] + tol) return false;
  }
  return false;
}

// Real orthogonal E (det +1) and eigenvalues with E^T M E = diag(lambda) for
// a complex symmetric unitary M. Re M and Im M commute, so a generic real
// combination of them shares their eigenvectors; degenerate eigenspaces of
// the combination are eigenspaces of M itself unless the draw is unlucky,
// which the residual check catches.
void diagonalize_symmetric_unitary(const Unitary4& m, Eigen::Matrix4d& e, Vec4c& lambda) {
  std::mt19937_64 rng(0x5eedc0ffee5eedULL);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  const Eigen::Matrix4d re = m.real();
  const Eigen::Matrix4d im = m.imag();
  double best = std::numeric_limits<double>::infinity();
  Eigen::Matrix4d best_e = Eigen::Matrix4d::Identity();
  for (int attempt = 0; attempt < 32; ++attempt) {
    const double t = angle(rng);
    const Eigen::Matrix4d mix = std::cos(t) * re + std::sin(t) * im;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(mix);
    const Eigen::Matrix4d cand = solver.eigenvectors();
    Unitary4 d = cand.transpose().cast<cplx>() * m * cand.cast<cplx>();
    d.diagonal().setZero();
    const double off = d.cwiseAbs().maxCoeff();
    if (off < best) {
      best = off;
      best_e = cand;
    }
    if (off < 1e-13) break;
  }
  e = best_e;
  const Unitary4 d = e.transpose().cast<cplx>() * m * e.cast<cplx>();
  lambda = d.diagonal();

  std::array<int, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return std::arg(lambda(a)) < std::arg(lambda(b)); });
  Eigen::Matrix4d sorted_e;
  Vec4c sorted_l;
  for (int k = 0; k < 4; ++k) {
    sorted_e.col(k) = e.col(order[k]);
    sorted_l(k) = lambda(order[k]);
  }
  if (sorted_e.determinant() < 0) sorted_e.col(0) = -sorted_e.col(0);
  e = sorted_e;
  lambda = sorted_l;
}

}  // namespace

bool CanonicalVector::in_chamber(double slack) const {
  return kPi - c2 + slack >= c1 && c1 + slack >= c2 && c2 + slack >= c3 && c3 + slack >= 0.0;
}

std::ostream& operator<<(std::ostream& os, const CanonicalVector& c) {
  return os << '(' << c.c1 + 0.0 << ", " << c.c2 + 0.0 << ", " << c.c3 + 0.0 << ')';
}

std::string_view to_string(GateClass cls) {
  switch (cls) {
    case GateClass::Local: return "Local";
    case GateClass::SwapClass: return "SwapClass";
    case GateClass::Entangling: return "Entangling";
  }
  return "?";
}

const Unitary4& magic_basis() { return magic().basis; }

Unitary4 interaction(const CanonicalVector& c) {
  const auto& t = magic();
  Vec4c phases;
  for (int k = 0; k < 4; ++k)
    phases(k) = std::polar(1.0, 0.5 * (c.c1 * t.signs[0](k) + c.c2 * t.signs[1](k) + c.c3 * t.signs[2](k)));
  return t.basis * phases.asDiagonal() * t.basis.adjoint();
}

Unitary4 KakDecomposition::reconstruct() const {
  return phase * k1.matrix() * interaction(c) * k2.matrix();
}

ChamberReduction canonicalize(const std::array<double, 3>& raw, double slack) {
  static constexpr std::array<std::array<int, 3>, 6> kPerms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

  Move best_move;
  std::array<double, 3> best{};
  bool found = chamber_ok(raw, slack);
  if (found) best = raw;

  for (int keep = -1; keep < 3; ++keep) {
    std::array<double, 3> flipped = raw;
    for (int j = 0; j < 3; ++j)
      if (keep >= 0 && j != keep) flipped[j] = -flipped[j];
    std::array<int, 3> base{};
    for (int j = 0; j < 3; ++j) base[j] = -static_cast<int>(std::floor(flipped[j] / kPi));
    for (int s0 = -1; s0 <= 1; ++s0)
      for (int s1 = -1; s1 <= 1; ++s1)
        for (int s2 = -1; s2 <= 1; ++s2) {
          const std::array<int, 3> shifts{base[0] + s0, base[1] + s1, base[2] + s2};
          std::array<double, 3> shifted;
          for (int j = 0; j < 3; ++j) shifted[j] = flipped[j] + shifts[j] * kPi;
          for (const auto& perm : kPerms) {
            const auto cand = permuted(shifted, perm);
            if (!chamber_ok(cand, slack)) continue;
            if (!found || lex_less(cand, best, slack)) {
              found = true;
              best = cand;
              best_move = Move{keep, shifts, perm};
            }
          }
        }
  }
  if (!found) {
    // The 24 images of any point tile the chamber, so this means NaN input.
    throw DomainError("cannot canonicalize non-finite interaction coefficients");
  }

  const ChamberState s = apply_move(raw, best_move);
  return {{s.c[0], s.c[1], s.c[2]}, s.left, s.right, s.phase};
}

LocalFactors factor_local(const Unitary4& k) {
  // Rearrange so that a ⊗ b becomes the rank-one matrix vec(a) vec(b)^T.
  Unitary4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) r(2 * i + j, 2 * p + q) = k(2 * i + p, 2 * j + q);
  Eigen::JacobiSVD<Unitary4> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vec4c u = svd.matrixU().col(0);
  const Vec4c v = svd.matrixV().col(0).conjugate();
  Unitary2 a, b;
  a << u(0), u(1), u(2), u(3);
  b << v(0), v(1), v(2), v(3);
  a /= std::sqrt(a.determinant());
  b /= std::sqrt(b.determinant());
  const LocalPair pair{a, b};
  const cplx scale = (pair.matrix().adjoint() * k).trace() / 4.0;
  return {pair, scale};
}

KakDecomposition kak_decompose(const Unitary4& u, const ToleranceConfig& tol) {
  const auto& t = magic();
  const auto [v, det_phase] = project_special(u, tol.unitarity_tol);
  const Unitary4 vm = t.basis.adjoint() * v * t.basis;
  const Unitary4 m = vm.transpose() * vm;

  Eigen::Matrix4d e;
  Vec4c lambda;
  diagonalize_symmetric_unitary(m, e, lambda);

  Vec4c d = lambda.cwiseSqrt();
  if (d.prod().real() < 0) d(0) = -d(0);

  // vm = o1 · diag(d) · e^T with o1 real orthogonal, det +1.
  const Unitary4 o1 = vm * e.cast<cplx>() * d.cwiseInverse().asDiagonal();
  const Unitary4 left = t.basis * o1 * t.basis.adjoint();
  const Unitary4 right = t.basis * e.transpose().cast<cplx>() * t.basis.adjoint();

  // arg d_k = c0 + (c1 x_k + c2 y_k + c3 z_k)/2 with orthogonal sign vectors.
  Eigen::Vector4d theta;
  for (int k = 0; k < 4; ++k) theta(k) = std::arg(d(k));
  const double c0 = theta.sum() / 4;
  std::array<double, 3> raw{};
  for (int j = 0; j < 3; ++j) raw[j] = theta.dot(t.signs[j]) / 2;

  const ChamberReduction red = canonicalize(raw, tol.unitarity_tol);
  const LocalFactors lf = factor_local(left);
  const LocalFactors rf = factor_local(right);

  KakDecomposition out;
  out.k1 = lf.pair * red.left;
  out.c = red.c;
  out.k2 = red.right * rf.pair;
  out.phase = det_phase * std::polar(1.0, c0) * red.phase * lf.scale * rf.scale;

  const double err = (out.reconstruct() - u).norm();
  if (!(err < tol.verify_tol)) {
    std::ostringstream msg;
    msg << "KAK reconstruction error " << err << " exceeds verify_tol " << tol.verify_tol;
    throw VerificationError(msg.str());
  }
  return out;
}

double snap_angle(double angle, double tol) {
  for (double target : {0.0, kPi / 4, kPi / 2, kPi})
    if (std::abs(angle - target) <= tol) return target;
  return angle;
}

CanonicalVector snap(const CanonicalVector& c, double tol) {
  return {snap_angle(c.c1, tol), snap_angle(c.c2, tol), snap_angle(c.c3, tol)};
}

GateClass classify(const CanonicalVector& c, const ToleranceConfig& tol) {
  const CanonicalVector s = snap(c, tol.snap_tol);
  if (s.c2 == 0.0 && s.c3 == 0.0 && (s.c1 == 0.0 || s.c1 == kPi)) return GateClass::Local;
  if (s.c1 == kPi / 2 && s.c2 == kPi / 2 && s.c3 == kPi / 2) return GateClass::SwapClass;
  return GateClass::Entangling;
}

bool locally_equivalent(const Unitary4& u, const Unitary4& v, const ToleranceConfig& tol) {
  const CanonicalVector a = kak_decompose(u, tol).c;
  const CanonicalVector b = kak_decompose(v, tol).c;
  return std::abs(a.c1 - b.c1) <= tol.snap_tol && std::abs(a.c2 - b.c2) <= tol.snap_tol &&
         std::abs(a.c3 - b.c3) <= tol.snap_tol;
}

}  // namespace twoq
