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

#include <complex>
#include <random>

#include <Eigen/Dense>

#include "twoq/matcore.hpp"

namespace twoq::testing {

// Haar measure via QR of a complex Ginibre matrix with the R-diagonal phase
// removed.
template <int N>
Eigen::Matrix<cplx, N, N> haar(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Matrix<cplx, N, N> z;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) z(r, c) = cplx(g(rng), g(rng)) / std::sqrt(2.0);
  Eigen::HouseholderQR<Eigen::Matrix<cplx, N, N>> qr(z);
  Eigen::Matrix<cplx, N, N> q = qr.householderQ();
  const Eigen::Matrix<cplx, N, N> r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (int k = 0; k < N; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
  return q;
}

inline Unitary4 haar4(std::mt19937_64& rng) { return haar<4>(rng); }
inline Unitary2 haar2(std::mt19937_64& rng) { return haar<2>(rng); }

inline LocalPair random_local(std::mt19937_64& rng) { return {haar2(rng), haar2(rng)}; }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline cplx random_phase(std::mt19937_64& rng) { return std::polar(1.0, uniform(rng, -kPi, kPi)); }

template <typename DA, typename DB>
double max_abs_diff(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace twoq::testing
