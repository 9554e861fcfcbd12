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

#include "rfient/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "rfient/bounds.hpp"
#include "rfient/entropy.hpp"
#include "rfient/rfi_quantities.hpp"

namespace rfient {

Reconstruction linear_inversion(const MeasuredTable& table) {
  return from_pauli_table(table.values());
}

std::array<double, 4> project_to_simplex(const std::array<double, 4>& v) {
  std::array<double, 4> u = v;
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0, theta = 0;
  for (int k = 0; k < 4; ++k) {
    cumulative += u[static_cast<std::size_t>(k)];
    const double t = (cumulative - 1.0) / (k + 1);
    if (u[static_cast<std::size_t>(k)] - t > 0) theta = t;
  }
  std::array<double, 4> out{};
  for (std::size_t k = 0; k < 4; ++k) out[k] = std::max(v[k] - theta, 0.0);
  return out;
}

Projection project_physical(const Matrix4c& candidate) {
  const Matrix4c h = 0.5 * (candidate + candidate.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(h);
  std::array<double, 4> ev{};
  for (int k = 0; k < 4; ++k) ev[static_cast<std::size_t>(k)] = es.eigenvalues()(k);
  const auto p = project_to_simplex(ev);
  Eigen::Vector4d pv(p[0], p[1], p[2], p[3]);
  Matrix4c m = es.eigenvectors() * pv.cast<std::complex<double>>().asDiagonal() *
               es.eigenvectors().adjoint();
  m = 0.5 * (m + m.adjoint());
  m /= m.trace().real();
  Projection out{DensityMatrix::from_matrix(m), (candidate - m).norm()};
  return out;
}

TomographyResult reconstruct(const MeasuredTable& table) {
  TomographyResult r;
  r.linear = linear_inversion(table);
  const Projection proj = project_physical(r.linear.matrix);
  r.physical = proj.state;
  r.projection_distance = proj.distance;
  const PauliTable t = pauli_table(r.physical);
  r.concurrence = concurrence(r.physical);
  r.q2 = q2(t);
  r.q3 = q3(t);
  r.q4 = q4(t);
  r.q5 = q5(t);
  r.purity = trace_moment(r.physical, 2);
  r.purity_a = partial_trace(r.physical, Subsystem::A).purity();
  r.purity_b = partial_trace(r.physical, Subsystem::B).purity();
  r.s1 = von_neumann(r.physical);
  r.s2 = renyi(r.physical, 2.0);
  return r;
}

namespace {

double marginal_purity(const PauliTable& t, Subsystem s) {
  double r2 = 0.0;
  for (int k = 1; k < 4; ++k) {
    const double v = s == Subsystem::A ? t(k, 0) : t(0, k);
    r2 += v * v;
  }
  return 0.5 * (1.0 + r2);
}

ComparisonRow make_row(std::string name, Measured direct, double tomo) {
  ComparisonRow r{std::move(name), direct, tomo, tomo - direct.value, 0.0};
  const double d = std::abs(r.difference);
  if (direct.sigma > 0)
    r.discrepancy_sigmas = d / direct.sigma;
  else if (d > 1e-12)
    r.discrepancy_sigmas = std::numeric_limits<double>::infinity();
  return r;
}

bool inside(const ConcurrenceInterval& ci, double c) {
  const double slack = 1e-9;
  return c >= ci.lower.value - slack && c <= ci.upper.value + slack;
}

}  // namespace

Comparison compare_direct_vs_tomography(const MeasuredTable& table) {
  const TomographyResult tomo = reconstruct(table);
  Comparison out;
  out.projection_distance = tomo.projection_distance;
  out.linear_unphysical = tomo.linear.unphysical;
  out.linear_min_eigenvalue = tomo.linear.min_eigenvalue;

  const Measured d_q2 = propagate([](const PauliTable& t) { return q2(t); }, table);
  const Measured d_q3 = propagate([](const PauliTable& t) { return q3(t); }, table);
  const Measured d_q4 = propagate([](const PauliTable& t) { return q4(t); }, table);
  const Measured d_q5 = propagate([](const PauliTable& t) { return q5(t); }, table);
  const Measured d_p = propagate([](const PauliTable& t) { return purity_from_table(t); }, table);
  const Measured d_pa =
      propagate([](const PauliTable& t) { return marginal_purity(t, Subsystem::A); }, table);
  const Measured d_pb =
      propagate([](const PauliTable& t) { return marginal_purity(t, Subsystem::B); }, table);
  const Measured d_s2 =
      propagate([](const PauliTable& t) { return s2_from_purity(purity_from_table(t)); }, table);

  out.rows.push_back(make_row("Q2", d_q2, tomo.q2));
  out.rows.push_back(make_row("Q3", d_q3, tomo.q3));
  out.rows.push_back(make_row("Q4", d_q4, tomo.q4));
  out.rows.push_back(make_row("Q5", d_q5, tomo.q5));
  out.rows.push_back(make_row("purity", d_p, tomo.purity));
  out.rows.push_back(make_row("purity_A", d_pa, tomo.purity_a));
  out.rows.push_back(make_row("purity_B", d_pb, tomo.purity_b));
  out.rows.push_back(make_row("S2", d_s2, tomo.s2));

  const ConcurrenceInterval from_q2 = concurrence_interval_from_q2(d_q2);
  const ConcurrenceInterval from_p = concurrence_interval_from_purities(d_p, d_pa, d_pb);
  out.intervals.push_back({"C_from_Q2", from_q2, tomo.concurrence, inside(from_q2, tomo.concurrence)});
  out.intervals.push_back(
      {"C_from_purities", from_p, tomo.concurrence, inside(from_p, tomo.concurrence)});
  return out;
}

Comparison compare_direct_vs_tomography(std::span<const CountRecord> records) {
  return compare_direct_vs_tomography(estimate_table(records));
}

std::string format_comparison(const Comparison& c) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-16s %12s %10s %12s %12s %10s\n", "quantity", "direct",
                "sigma", "tomographic", "difference", "n_sigma");
  out += line;
  for (const auto& r : c.rows) {
    std::snprintf(line, sizeof line, "%-16s %12.6f %10.6f %12.6f %12.3e %10.2f\n",
                  r.name.c_str(), r.direct.value, r.direct.sigma, r.tomographic, r.difference,
                  r.discrepancy_sigmas);
    out += line;
  }
  std::snprintf(line, sizeof line, "%-16s %12s %12s %12s %10s\n", "interval", "lower", "upper",
                "C(tomog)", "inside");
  out += line;
  for (const auto& r : c.intervals) {
    std::snprintf(line, sizeof line, "%-16s %12.6f %12.6f %12.6f %10s\n", r.name.c_str(),
                  r.direct.lower.value, r.direct.upper.value, r.tomographic,
                  r.contains ? "yes" : "no");
    out += line;
  }
  std::snprintf(line, sizeof line, "projection distance %.6e, linear min eigenvalue %.6e%s\n",
                c.projection_distance, c.linear_min_eigenvalue,
                c.linear_unphysical ? " (unphysical)" : "");
  out += line;
  return out;
}

}  // namespace rfient
