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

// Exact linear algebra for two-qubit states.
//
// Basis ordering is |ab> -> index 2a + b with qubit A first. Pauli operators
// follow sigma_1 = |0><1| + |1><0|, sigma_2 = i|0><1| - i|1><0|,
// sigma_3 = |0><0| - |1><1| (note sigma_2 = -Y in the usual convention).

#include <array>
#include <cstdint>

#include <Eigen/Dense>

#include "rfient/random.hpp"

namespace rfient {

using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr int kMaxMomentOrder = 8;

enum class Subsystem { A, B };

const Matrix2c& pauli(int i);

// 4x4 Hermitian, unit-trace, PSD matrix. Only constructible through
// from_matrix(), which enforces the invariants.
class DensityMatrix {
 public:
  // Throws std::invalid_argument when the matrix is not Hermitian, not unit
  // trace, or has an eigenvalue below -kPsdTol.
  static DensityMatrix from_matrix(const Matrix4c& m);

  const Matrix4c& matrix() const { return m_; }
  // Descending.
  std::array<double, 4> eigenvalues() const;

 private:
  explicit DensityMatrix(const Matrix4c& m) : m_(m) {}
  Matrix4c m_;
};

// Single-qubit reduced state.
class QubitState {
 public:
  static QubitState from_matrix(const Matrix2c& m);
  static QubitState from_bloch(const std::array<double, 3>& r);

  const Matrix2c& matrix() const { return m_; }
  // (<sigma_1>, <sigma_2>, <sigma_3>).
  std::array<double, 3> bloch() const;
  double purity() const;

 private:
  explicit QubitState(const Matrix2c& m) : m_(m) {}
  Matrix2c m_;
};

// t(i, j) = <sigma_i sigma_j>, i for qubit A, j for qubit B.
struct PauliTable {
  std::array<std::array<double, 4>, 4> t{};

  double& operator()(int i, int j) { return t[i][j]; }
  double operator()(int i, int j) const { return t[i][j]; }

  // Table of I/4: t(0,0) = 1, everything else 0.
  static PauliTable maximally_mixed();
};

// Result of inverting the Pauli decomposition. Noisy tables legitimately give
// indefinite matrices, so they are flagged rather than rejected.
struct Reconstruction {
  Matrix4c matrix;
  double min_eigenvalue = 0.0;
  bool unphysical = false;
};

struct LocalRotation {
  Matrix2c a = Matrix2c::Identity();
  Matrix2c b = Matrix2c::Identity();

  static LocalRotation identity() { return {}; }
  // Throws if either factor is not unitary to 1e-12.
  static LocalRotation from_factors(const Matrix2c& a, const Matrix2c& b);
  Matrix4c kron() const;
  double unitarity_residual() const;
};

Matrix4c kron(const Matrix2c& a, const Matrix2c& b);

PauliTable pauli_table(const DensityMatrix& rho);
Reconstruction from_pauli_table(const PauliTable& table);
QubitState partial_trace(const DensityMatrix& rho, Subsystem keep);
DensityMatrix tensor(const QubitState& a, const QubitState& b);

// tr(rho^n) for 1 <= n <= kMaxMomentOrder.
double trace_moment(const DensityMatrix& rho, int n);
double trace_moment(const Matrix4c& m, int n);
double purity_from_table(const PauliTable& table);

DensityMatrix apply_rotation(const DensityMatrix& rho, const LocalRotation& rot);

// Haar SU(2) from a normalized Gaussian quaternion.
Matrix2c random_su2(Rng& rng);
LocalRotation random_rotation(Rng& rng);
LocalRotation random_rotation(std::uint64_t seed);

// Ginibre-induced state: G is 4 x rank complex Gaussian, rho = GG^dag/tr.
// With mix > 0 the result is (1 - mix) rho + mix I/4.
DensityMatrix random_state(Rng& rng, int rank, double mix = 0.0);
DensityMatrix random_state(std::uint64_t seed, int rank, double mix = 0.0);
QubitState random_qubit_state(Rng& rng);
DensityMatrix random_product_state(Rng& rng);
// Convex mixture of 1..max_terms Haar-random product pure states with
// Dirichlet(1) weights.
DensityMatrix random_separable_state(Rng& rng, int max_terms = 16);

DensityMatrix pure_state(const Vector4c& psi);
// (|00> - |11>)/sqrt2
DensityMatrix bell_phi_minus();
// (|00> + |11>)/sqrt2
DensityMatrix bell_phi_plus();
DensityMatrix maximally_mixed();
DensityMatrix basis_state(int a, int b);
// p |phi-><phi-| + (1 - p) I/4.
DensityMatrix werner(double p);

}  // namespace rfient
