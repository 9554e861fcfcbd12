// Copyright 2026 The rfient Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "rfient/state_algebra.hpp"

namespace rfient::testing {

using cd = std::complex<double>;

// Pauli matrices written out by hand; index 2 follows the [[0, i], [-i, 0]]
// convention used throughout the library.
inline Matrix2c hand_pauli(int k) {
  const cd i(0, 1);
  Matrix2c m;
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, i, -i, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

// Brute-force table: explicit Kronecker product and trace.
inline PauliTable brute_table(const Matrix4c& rho) {
  PauliTable t;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Matrix4c k;
      const Matrix2c pa = hand_pauli(a), pb = hand_pauli(b);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) k(r, c) = pa(r / 2, c / 2) * pb(r % 2, c % 2);
      t(a, b) = (k * rho).trace().real();
    }
  return t;
}

inline PauliTable bell_table() {
  PauliTable t;
  t(0, 0) = 1;
  t(1, 1) = -1;
  t(2, 2) = 1;
  t(3, 3) = 1;
  return t;
}

inline PauliTable zero_zero_table() {
  PauliTable t;
  t(0, 0) = t(0, 3) = t(3, 0) = t(3, 3) = 1;
  return t;
}

inline double max_abs_diff(const PauliTable& a, const PauliTable& b) {
  double r = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r = std::max(r, std::abs(a(i, j) - b(i, j)));
  return r;
}

// Isotropic-noise state with Bell fidelity f.
inline DensityMatrix fidelity_state(double f) { return werner((4 * f - 1) / 3); }

}  // namespace rfient::testing
