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

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <variant>
#include <vector>

namespace twoq {

template <typename Scalar>
using Matrix2 = Eigen::Matrix<std::complex<Scalar>, 2, 2>;
template <typename Scalar>
using Matrix4 = Eigen::Matrix<std::complex<Scalar>, 4, 4>;

using cplx = std::complex<double>;
using Unitary2 = Matrix2<double>;
using Unitary4 = Matrix4<double>;

inline constexpr double kPi = std::numbers::pi;

struct ToleranceConfig {
  double unitarity_tol = 1e-10;
  double snap_tol = 1e-9;
  double verify_tol = 1e-8;

  /// Throws DomainError unless all tolerances are positive and
  /// snap_tol >= unitarity_tol.
  void validate() const;
};

namespace pauli {

template <typename Scalar = double>
Matrix2<Scalar> identity() {
  return Matrix2<Scalar>::Identity();
}

template <typename Scalar = double>
Matrix2<Scalar> x() {
  Matrix2<Scalar> m;
  m << 0, 1, 1, 0;
  return m;
}

template <typename Scalar = double>
Matrix2<Scalar> y() {
  using C = std::complex<Scalar>;
  Matrix2<Scalar> m;
  m << C(0), C(0, -1), C(0, 1), C(0);
  return m;
}

template <typename Scalar = double>
Matrix2<Scalar> z() {
  Matrix2<Scalar> m;
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace pauli

/// exp(i * angle * sigma) for a Pauli (or any involutory) 2x2 matrix.
template <typename Derived>
Matrix2<typename Derived::RealScalar> pauli_exp(
    typename Derived::RealScalar angle, const Eigen::MatrixBase<Derived>& sigma) {
  using Scalar = typename Derived::RealScalar;
  using C = std::complex<Scalar>;
  return Matrix2<Scalar>::Identity() * C(std::cos(angle)) +
         C(0, std::sin(angle)) * sigma.derived();
}

/// Kronecker product a ⊗ b; `a` acts on the first (most significant) qubit.
template <typename DA, typename DB>
Matrix4<typename DA::RealScalar> tensor(const Eigen::MatrixBase<DA>& a,
                                        const Eigen::MatrixBase<DB>& b) {
  EIGEN_STATIC_ASSERT_MATRIX_SPECIFIC_SIZE(DA, 2, 2);
  EIGEN_STATIC_ASSERT_MATRIX_SPECIFIC_SIZE(DB, 2, 2);
  Matrix4<typename DA::RealScalar> out;
  // Scalar loop: GCC 11 miscompiles the vectorized block<2,2> assignment for
  // complex<float> at -O3.
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = a(r / 2, c / 2) * b(r % 2, c % 2);
  return out;
}

/// Largest entry of |m m† - I|.
template <typename Derived>
typename Derived::RealScalar unitarity_error(const Eigen::MatrixBase<Derived>& m) {
  const auto n = m.rows();
  return (m * m.adjoint() - Derived::PlainObject::Identity(n, n)).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m, double tol) {
  if (m.rows() != m.cols() || !m.allFinite()) return false;
  return unitarity_error(m) <= tol;
}

/// min over unit phases φ of ‖a - φ b‖_F. For n×n unitaries this equals
/// sqrt(2n - 2|tr(a† b)|); it is evaluated at the optimal phase
/// φ = tr(b† a)/|tr(b† a)| instead, which keeps full precision near zero.
template <typename DA, typename DB>
typename DA::RealScalar phase_distance(const Eigen::MatrixBase<DA>& a,
                                       const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::RealScalar;
  using C = std::complex<Scalar>;
  const C overlap = (b.adjoint() * a).trace();
  const Scalar mag = std::abs(overlap);
  const C phase = mag > Scalar(0) ? overlap / mag : C(1);
  return (a - phase * b).norm();
}

/// exp(i (γ/2) σz⊗σz), the ZZ interaction.
template <typename Scalar = double>
Matrix4<Scalar> zz_interaction(Scalar gamma) {
  using C = std::complex<Scalar>;
  const C plus = std::polar(Scalar(1), gamma / 2);
  const C minus = std::conj(plus);
  return Eigen::Matrix<C, 4, 1>(plus, minus, minus, plus).asDiagonal();
}

struct SpecialProjection {
  Unitary4 special;
  cplx phase;
};

/// Splits U = phase · V with det V = 1; phase is the principal fourth root of
/// det U. Throws NonUnitaryError.
SpecialProjection project_special(const Unitary4& u, double unitarity_tol = 1e-10);

/// Throws NonUnitaryError naming `what` if the matrix fails the check.
void require_unitary(const Unitary2& u, double tol, const char* what);
void require_unitary(const Unitary4& u, double tol, const char* what);

/// A layer of single-qubit gates: `a` on the first qubit, `b` on the second.
struct LocalPair {
  Unitary2 a = Unitary2::Identity();
  Unitary2 b = Unitary2::Identity();

  Unitary4 matrix() const { return tensor(a, b); }
  LocalPair adjoint() const { return {a.adjoint(), b.adjoint()}; }
};

/// Per-qubit product: (lhs * rhs).matrix() == lhs.matrix() * rhs.matrix().
inline LocalPair operator*(const LocalPair& lhs, const LocalPair& rhs) {
  return {lhs.a * rhs.a, lhs.b * rhs.b};
}

/// One application of the circuit's fixed entangling gate.
struct EntanglerApp {};

using CircuitElement = std::variant<LocalPair, EntanglerApp>;

/// Elements in application order: elements[0] acts on the state first and is
/// the rightmost factor of the matrix product. The overall matrix is
/// phase · M_{k-1} ··· M_1 M_0.
struct Circuit {
  std::vector<CircuitElement> elements;
  cplx phase{1.0, 0.0};

  void add_local(const Unitary2& a, const Unitary2& b) { elements.emplace_back(LocalPair{a, b}); }
  void add_local(const LocalPair& layer) { elements.emplace_back(layer); }
  void add_entangler() { elements.emplace_back(EntanglerApp{}); }

  /// Appends `next` so that it acts after this circuit.
  void append(const Circuit& next);

  std::size_t entangler_count() const;
  std::size_t local_count() const;
};

/// `first` followed by `second`.
Circuit concat(const Circuit& first, const Circuit& second);

Unitary4 evaluate(const Circuit& circuit, const Unitary4& entangler);

}  // namespace twoq
