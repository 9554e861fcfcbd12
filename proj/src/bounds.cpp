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

#include "rfient/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rfient/rfi_quantities.hpp"

namespace rfient {

double concurrence(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(rho.matrix());
  Matrix4c w = es.eigenvectors();
  for (int k = 0; k < 4; ++k) w.col(k) *= std::sqrt(std::max(es.eigenvalues()(k), 0.0));
  const Matrix4c flip = kron(pauli(2), pauli(2));
  const Matrix4c tau = w.transpose() * flip * w;
  Eigen::JacobiSVD<Matrix4c> svd(tau);
  const auto& s = svd.singularValues();  // descending
  return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

DensityMatrix mems_state(const MemsParams& p) {
  if (p.x < 0 || p.y < 0 || p.alpha < 0 || p.beta < 0 || p.gamma < 0)
    throw std::invalid_argument("MEMS parameters must be non-negative");
  const double total = p.x + p.y + p.alpha + p.beta + p.gamma;
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("MEMS parameters must sum to 1");
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = p.x + p.gamma / 2;
  m(1, 1) = p.alpha;
  m(2, 2) = p.beta;
  m(3, 3) = p.y + p.gamma / 2;
  m(0, 3) = p.gamma / 2;
  m(3, 0) = p.gamma / 2;
  // Rescale away the <= 1e-12 normalization slack.
  m /= m.trace().real();
  return DensityMatrix::from_matrix(m);
}

double mems_concurrence(const MemsParams& p) {
  return std::max(0.0, p.gamma - 2.0 * std::sqrt(p.alpha * p.beta));
}

double q2_lower_envelope(double c) { return c <= 0.5 ? 2 * c * c : 1 - 4 * c + 6 * c * c; }

namespace {

// Q2 of the MEMS state with concurrence c and incoherent weights (alpha,
// beta); the remaining weight is split evenly between x and y. +inf when
// infeasible.
double mems_q2_at(double c, double alpha, double beta, MemsParams* out) {
  if (alpha < 0 || beta < 0) return std::numeric_limits<double>::infinity();
  const double gamma = c + 2 * std::sqrt(alpha * beta);
  const double phi = 1.0 - gamma - alpha - beta;
  if (phi < -1e-15) return std::numeric_limits<double>::infinity();
  MemsParams p{std::max(phi, 0.0) / 2, std::max(phi, 0.0) / 2, alpha, beta, gamma};
  const double total = p.x + p.y + p.alpha + p.beta + p.gamma;
  p.x += (1.0 - total) / 2;
  p.y += (1.0 - total) / 2;
  if (p.x < 0 || p.y < 0) return std::numeric_limits<double>::infinity();
  if (out) *out = p;
  return q2(pauli_table(mems_state(p)));
}

}  // namespace

MemsMinimum minimize_mems_q2(double c) {
  if (c < 0 || c > 1) throw std::invalid_argument("concurrence must be in [0,1]");
  // Coarse grid over the feasible (alpha, beta) triangle, then a compass
  // search with shrinking step from the best grid point.
  const int n = 80;
  const double span = 1.0 - c;
  double best = std::numeric_limits<double>::infinity();
  double ba = 0, bb = 0;
  for (int ia = 0; ia <= n; ++ia)
    for (int ib = 0; ib <= n; ++ib) {
      const double a = span * ia / n, b = span * ib / n;
      const double v = mems_q2_at(c, a, b, nullptr);
      if (v < best) {
        best = v;
        ba = a;
        bb = b;
      }
    }
  double step = std::max(span / n, 1e-3);
  static constexpr double kDirs[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1},
                                         {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
  while (step > 1e-13) {
    bool improved = false;
    for (const auto& d : kDirs) {
      const double a = std::max(0.0, ba + d[0] * step);
      const double b = std::max(0.0, bb + d[1] * step);
      const double v = mems_q2_at(c, a, b, nullptr);
      if (v < best) {
        best = v;
        ba = a;
        bb = b;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
  MemsMinimum out;
  out.q2 = mems_q2_at(c, ba, bb, &out.params);
  return out;
}

ConcurrenceInterval concurrence_interval_from_q2(const Measured& q2m) {
  const double slack = 3 * q2m.sigma + 1e-9;
  if (!(q2m.value >= -slack && q2m.value <= kQ2Max + slack))
    throw std::domain_error("Q2 outside the physical range [0,3]");
  const double v = std::clamp(q2m.value, 0.0, kQ2Max);
  ConcurrenceInterval out;
  out.upper_proven = false;

  const double lower_sq = (v - 1.0) / 2.0;
  if (lower_sq > 0) {
    const double lo = std::sqrt(lower_sq);
    out.lower = {lo, q2m.sigma / (4 * lo)};
  } else {
    out.lower = {0.0, 0.0};
  }

  if (v <= 0.5) {
    const double up = std::sqrt(v / 2);
    out.upper = {up, up > 0 ? q2m.sigma / (4 * up) : 0.0};
  } else {
    const double root = std::sqrt(4.0 - 6.0 * (1.0 - v));
    out.upper = {(2.0 + root) / 6.0, q2m.sigma / (2 * root)};
  }
  return out;
}

ConcurrenceInterval concurrence_interval_from_purities(const Measured& purity,
                                                       const Measured& purity_a,
                                                       const Measured& purity_b) {
  ConcurrenceInterval out;
  out.upper_proven = true;

  const Measured& lo_ref = (purity_a.value <= purity_b.value) ? purity_a : purity_b;
  const double lower_sq = 2 * (purity.value - lo_ref.value);
  if (lower_sq > 0) {
    const double lo = std::sqrt(lower_sq);
    out.lower = {lo, std::hypot(purity.sigma, lo_ref.sigma) / lo};
  } else {
    out.lower = {0.0, 0.0};
  }

  const Measured& up_ref = (purity_a.value >= purity_b.value) ? purity_a : purity_b;
  const double upper_sq = 2 * (1 - up_ref.value);
  if (upper_sq > 0) {
    const double up = std::sqrt(upper_sq);
    out.upper = {up, up_ref.sigma / up};
  } else {
    out.upper = {0.0, 0.0};
  }
  return out;
}

std::string_view to_string(Verdict v) {
  return v == Verdict::kEntangled ? "entangled" : "inconclusive";
}

Verdict purity_separability_test(const Measured& purity, const Measured& purity_a,
                                 const Measured& purity_b, double z) {
  for (const Measured* r : {&purity_a, &purity_b}) {
    const double excess = purity.value - r->value;
    const double sigma = std::hypot(purity.sigma, r->sigma);
    if (excess > z * sigma && excess > 1e-12) return Verdict::kEntangled;
  }
  return Verdict::kInconclusive;
}

}  // namespace rfient
