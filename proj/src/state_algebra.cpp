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

#include "rfient/state_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace rfient {
namespace {

using cd = std::complex<double>;

const std::array<Matrix2c, 4>& pauli_set() {
  static const std::array<Matrix2c, 4> set = [] {
    std::array<Matrix2c, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, cd(0, 1), cd(0, -1), 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  return set;
}

const std::array<std::array<Matrix4c, 4>, 4>& pauli_products() {
  static const auto products = [] {
    std::array<std::array<Matrix4c, 4>, 4> p;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) p[i][j] = kron(pauli_set()[i], pauli_set()[j]);
    return p;
  }();
  return products;
}

// tr(a * b) without forming the product.
cd trace_of_product(const Matrix4c& a, const Matrix4c& b) {
  cd acc = 0;
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l) acc += a(k, l) * b(l, k);
  return acc;
}

cd complex_gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

}  // namespace

const Matrix2c& pauli(int i) {
  if (i < 0 || i > 3) throw std::out_of_range("pauli index must be in 0..3");
  return pauli_set()[static_cast<std::size_t>(i)];
}

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

DensityMatrix DensityMatrix::from_matrix(const Matrix4c& m) {
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (!(herm <= kHermitianTol))
    throw std::invalid_argument("density matrix is not Hermitian (residual " +
                                std::to_string(herm) + ")");
  const cd tr = m.trace();
  if (!(std::abs(tr - cd(1.0, 0.0)) <= kTraceTol))
    throw std::invalid_argument("density matrix trace is " + std::to_string(tr.real()) +
                                ", expected 1");
  const Matrix4c h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(h, Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -kPsdTol)
    throw std::invalid_argument("density matrix is not positive semidefinite (min eigenvalue " +
                                std::to_string(es.eigenvalues()(0)) + ")");
  return DensityMatrix(h);
}

std::array<double, 4> DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(m_, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev(3), ev(2), ev(1), ev(0)};
}

QubitState QubitState::from_matrix(const Matrix2c& m) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
    throw std::invalid_argument("qubit state is not Hermitian");
  if (std::abs(m.trace() - cd(1.0, 0.0)) > kTraceTol)
    throw std::invalid_argument("qubit state trace is not 1");
  const Matrix2c h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix2c> es(h, Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -kPsdTol)
    throw std::invalid_argument("qubit state is not positive semidefinite");
  return QubitState(h);
}

QubitState QubitState::from_bloch(const std::array<double, 3>& r) {
  Matrix2c m = 0.5 * pauli(0);
  for (int i = 0; i < 3; ++i) m += 0.5 * r[static_cast<std::size_t>(i)] * pauli(i + 1);
  return from_matrix(m);
}

std::array<double, 3> QubitState::bloch() const {
  std::array<double, 3> r{};
  for (int i = 0; i < 3; ++i) r[static_cast<std::size_t>(i)] = (pauli(i + 1) * m_).trace().real();
  return r;
}

double QubitState::purity() const { return (m_ * m_).trace().real(); }

PauliTable PauliTable::maximally_mixed() {
  PauliTable t;
  t(0, 0) = 1.0;
  return t;
}

LocalRotation LocalRotation::from_factors(const Matrix2c& a, const Matrix2c& b) {
  LocalRotation r{a, b};
  if (r.unitarity_residual() > 1e-12) throw std::invalid_argument("rotation factor is not unitary");
  return r;
}

Matrix4c LocalRotation::kron() const { return rfient::kron(a, b); }

double LocalRotation::unitarity_residual() const {
  const double ra = (a * a.adjoint() - Matrix2c::Identity()).cwiseAbs().maxCoeff();
  const double rb = (b * b.adjoint() - Matrix2c::Identity()).cwiseAbs().maxCoeff();
  return std::max(ra, rb);
}

PauliTable pauli_table(const DensityMatrix& rho) {
  PauliTable t;
  const auto& p = pauli_products();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      t(i, j) = trace_of_product(p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                 rho.matrix())
                    .real();
  return t;
}

Reconstruction from_pauli_table(const PauliTable& table) {
  Reconstruction r;
  r.matrix = Matrix4c::Zero();
  const auto& p = pauli_products();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      r.matrix += (0.25 * table(i, j)) * p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(r.matrix, Eigen::EigenvaluesOnly);
  r.min_eigenvalue = es.eigenvalues()(0);
  r.unphysical = r.min_eigenvalue < -kPsdTol;
  return r;
}

QubitState partial_trace(const DensityMatrix& rho, Subsystem keep) {
  const Matrix4c& m = rho.matrix();
  Matrix2c out = Matrix2c::Zero();
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int k = 0; k < 2; ++k) {
        if (keep == Subsystem::A)
          out(x, y) += m(2 * x + k, 2 * y + k);
        else
          out(x, y) += m(2 * k + x, 2 * k + y);
      }
  return QubitState::from_matrix(out);
}

DensityMatrix tensor(const QubitState& a, const QubitState& b) {
  return DensityMatrix::from_matrix(kron(a.matrix(), b.matrix()));
}

double trace_moment(const Matrix4c& m, int n) {
  if (n < 1 || n > kMaxMomentOrder)
    throw std::out_of_range("trace moment order must be in 1.." + std::to_string(kMaxMomentOrder));
  Matrix4c p = m;
  for (int k = 1; k < n; ++k) p = p * m;
  return p.trace().real();
}

double trace_moment(const DensityMatrix& rho, int n) { return trace_moment(rho.matrix(), n); }

double purity_from_table(const PauliTable& table) {
  double s = 0.0;
  for (const auto& row : table.t)
    for (double v : row) s += v * v;
  return 0.25 * s;
}

DensityMatrix apply_rotation(const DensityMatrix& rho, const LocalRotation& rot) {
  const Matrix4c u = rot.kron();
  Matrix4c out = u * rho.matrix() * u.adjoint();
  return DensityMatrix::from_matrix(0.5 * (out + out.adjoint()));
}

Matrix2c random_su2(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  double q[4];
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double& x : q) {
      x = n(rng);
      norm += x * x;
    }
  } while (norm < 1e-300);
  norm = std::sqrt(norm);
  for (double& x : q) x /= norm;
  Matrix2c u;
  u << cd(q[0], q[1]), cd(q[2], q[3]), cd(-q[2], q[3]), cd(q[0], -q[1]);
  return u;
}

LocalRotation random_rotation(Rng& rng) {
  LocalRotation r;
  r.a = random_su2(rng);
  r.b = random_su2(rng);
  return r;
}

LocalRotation random_rotation(std::uint64_t seed) {
  Rng rng = make_stream(seed, 0);
  return random_rotation(rng);
}

DensityMatrix random_state(Rng& rng, int rank, double mix) {
  if (rank < 1 || rank > 4) throw std::invalid_argument("rank must be in 1..4");
  if (mix < 0.0 || mix > 1.0) throw std::invalid_argument("mix weight must be in [0,1]");
  Eigen::Matrix<cd, 4, Eigen::Dynamic> g(4, rank);
  for (int c = 0; c < rank; ++c)
    for (int r = 0; r < 4; ++r) g(r, c) = complex_gaussian(rng);
  Matrix4c m = g * g.adjoint();
  m /= m.trace().real();
  if (mix > 0.0) m = (1.0 - mix) * m + (mix / 4.0) * Matrix4c::Identity();
  return DensityMatrix::from_matrix(0.5 * (m + m.adjoint()));
}

DensityMatrix random_state(std::uint64_t seed, int rank, double mix) {
  Rng rng = make_stream(seed, 0);
  return random_state(rng, rank, mix);
}

QubitState random_qubit_state(Rng& rng) {
  Matrix2c g;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) g(r, c) = complex_gaussian(rng);
  Matrix2c m = g * g.adjoint();
  m /= m.trace().real();
  return QubitState::from_matrix(0.5 * (m + m.adjoint()));
}

DensityMatrix random_product_state(Rng& rng) {
  const QubitState a = random_qubit_state(rng);
  const QubitState b = random_qubit_state(rng);
  return tensor(a, b);
}

DensityMatrix random_separable_state(Rng& rng, int max_terms) {
  if (max_terms < 1) throw std::invalid_argument("max_terms must be >= 1");
  std::uniform_int_distribution<int> count_dist(1, max_terms);
  std::exponential_distribution<double> weight_dist(1.0);
  const int terms = count_dist(rng);
  Matrix4c m = Matrix4c::Zero();
  double total = 0.0;
  for (int k = 0; k < terms; ++k) {
    const Eigen::Vector2cd a = random_su2(rng).col(0);
    const Eigen::Vector2cd b = random_su2(rng).col(0);
    Vector4c psi;
    psi << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
    const double w = weight_dist(rng);
    total += w;
    m += w * (psi * psi.adjoint());
  }
  m /= total;
  return DensityMatrix::from_matrix(0.5 * (m + m.adjoint()));
}

DensityMatrix pure_state(const Vector4c& psi) {
  const double n = psi.norm();
  if (n == 0.0) throw std::invalid_argument("zero state vector");
  const Vector4c v = psi / n;
  return DensityMatrix::from_matrix(v * v.adjoint());
}

DensityMatrix bell_phi_minus() {
  Vector4c psi(1.0, 0.0, 0.0, -1.0);
  return pure_state(psi);
}

DensityMatrix bell_phi_plus() {
  Vector4c psi(1.0, 0.0, 0.0, 1.0);
  return pure_state(psi);
}

DensityMatrix maximally_mixed() { return DensityMatrix::from_matrix(0.25 * Matrix4c::Identity()); }

DensityMatrix basis_state(int a, int b) {
  if (a < 0 || a > 1 || b < 0 || b > 1) throw std::invalid_argument("basis labels must be 0 or 1");
  Vector4c psi = Vector4c::Zero();
  psi(2 * a + b) = 1.0;
  return pure_state(psi);
}

DensityMatrix werner(double p) {
  if (p < -1.0 / 3.0 || p > 1.0) throw std::invalid_argument("werner weight out of range");
  Matrix4c m = p * bell_phi_minus().matrix() + ((1.0 - p) / 4.0) * Matrix4c::Identity();
  return DensityMatrix::from_matrix(m);
}

}  // namespace rfient
