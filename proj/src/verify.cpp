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

#include "rfient/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rfient/bounds.hpp"
#include "rfient/entropy.hpp"
#include "rfient/montecarlo.hpp"
#include "rfient/rfi_quantities.hpp"

namespace rfient {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t salted(std::uint64_t seed, std::uint64_t salt) {
  return splitmix64(seed ^ splitmix64(salt));
}

SuiteCheck make(std::string suite, std::string name, double tol, const Reduction& r,
                bool proven = true) {
  return {std::move(suite), std::move(name), r.max_residual, tol, r.samples, r.violations, proven};
}

double pa(const PauliTable& t) { return 0.5 * (1.0 + q1_a(t)); }
double pb(const PauliTable& t) { return 0.5 * (1.0 + q1_b(t)); }

std::vector<SuiteCheck> state_algebra_suite(const VerifyOptions& o) {
  const char* s = "state_algebra";
  const std::uint64_t n = o.identity_samples;
  std::vector<SuiteCheck> out;

  const std::uint64_t s1 = salted(o.seed, 11);
  out.push_back(make(s, "purity_from_table", 1e-12,
                     reduce_residuals(n, 1e-12, [&](std::uint64_t k) {
                       const auto rho = sample_state(Ensemble::kGinibre, s1, k);
                       return std::abs(purity_from_table(pauli_table(rho)) - trace_moment(rho, 2));
                     }, o.exec)));

  const std::uint64_t s2 = salted(o.seed, 12);
  out.push_back(make(s, "table_round_trip", 1e-12,
                     reduce_residuals(n, 1e-12, [&](std::uint64_t k) {
                       const auto t = pauli_table(sample_state(Ensemble::kGinibre, s2, k));
                       const auto back = pauli_table(DensityMatrix::from_matrix(
                           from_pauli_table(t).matrix));
                       double r = 0.0;
                       for (int i = 0; i < 4; ++i)
                         for (int j = 0; j < 4; ++j) r = std::max(r, std::abs(back(i, j) - t(i, j)));
                       return r;
                     }, o.exec)));

  const std::uint64_t s3 = salted(o.seed, 13);
  out.push_back(make(s, "spectrum_rotation_invariance", 1e-10,
                     reduce_residuals(n, 1e-10, [&](std::uint64_t k) {
                       Rng rng = make_stream(s3, k);
                       const auto rho = random_state(rng, 4);
                       const auto rot = random_rotation(rng);
                       const auto a = rho.eigenvalues();
                       const auto b = apply_rotation(rho, rot).eigenvalues();
                       double r = 0.0;
                       for (std::size_t i = 0; i < 4; ++i) r = std::max(r, std::abs(a[i] - b[i]));
                       return r;
                     }, o.exec)));

  const std::uint64_t s4 = salted(o.seed, 14);
  out.push_back(make(s, "partial_trace_of_product", 1e-12,
                     reduce_residuals(n, 1e-12, [&](std::uint64_t k) {
                       Rng rng = make_stream(s4, k);
                       const auto a = random_qubit_state(rng);
                       const auto b = random_qubit_state(rng);
                       const auto rho = tensor(a, b);
                       return std::max(
                           (partial_trace(rho, Subsystem::A).matrix() - a.matrix()).cwiseAbs().maxCoeff(),
                           (partial_trace(rho, Subsystem::B).matrix() - b.matrix()).cwiseAbs().maxCoeff());
                     }, o.exec)));
  return out;
}

std::vector<SuiteCheck> identity_suite(const VerifyOptions& o) {
  const char* s = "identities";
  const std::uint64_t n = o.identity_samples;
  const std::uint64_t seed = salted(o.seed, 21);
  const auto q3f = o.q3 ? o.q3 : std::function<double(const PauliTable&)>(q3);
  std::vector<SuiteCheck> out;

  out.push_back(make(s, "q2_from_purities", 1e-10,
                     reduce_residuals(n, 1e-10, [&](std::uint64_t k) {
                       const auto rho = sample_state(Ensemble::kGinibre, seed, k);
                       const auto t = pauli_table(rho);
                       const double rhs = 4 * trace_moment(rho, 2) - 2 * (pa(t) + pb(t)) + 1;
                       return std::abs(q2(t) - rhs);
                     }, o.exec)));

  out.push_back(make(s, "q3_from_cubic_moment", 1e-10,
                     reduce_residuals(n, 1e-10, [&](std::uint64_t k) {
                       const auto rho = sample_state(Ensemble::kGinibre, seed, k);
                       const auto t = pauli_table(rho);
                       const double a = pa(t), b = pb(t);
                       const double rhs = 16 * trace_moment(rho, 3) - 24 * trace_moment(rho, 2) +
                                          3 * g(t) + 12 * (a + b - a * b) - 4;
                       return std::abs(6 * q3f(t) - rhs);
                     }, o.exec)));

  out.push_back(make(s, "q4_from_quartic_moment", 1e-9,
                     reduce_residuals(n, 1e-9, [&](std::uint64_t k) {
                       const auto rho = sample_state(Ensemble::kGinibre, seed, k);
                       const auto t = pauli_table(rho);
                       const double qa = q1_a(t), qb = q1_b(t), v2 = q2(t);
                       const double rhs = 64 * trace_moment(rho, 4) + 12 * g(t) -
                                          2 * v2 * (qa + qb) - 18 * qa * qb - 6 * (qa + qb) -
                                          (qa * qa + qb * qb) - v2 * v2 - 18 * v2 + 4 * y(t) -
                                          4 * (z1(t) + z2(t)) - 24 * q3f(t) - 1;
                       return std::abs(2 * q4(t) - rhs);
                     }, o.exec)));

  const std::uint64_t sp = salted(o.seed, 22);
  out.push_back(make(s, "q2_partial_monotone", 0.0,
                     reduce_residuals(n, 0.0, [&](std::uint64_t k) {
                       Rng rng = make_stream(sp, k);
                       const auto t = pauli_table(random_state(rng, 4));
                       std::array<int, 9> order{};
                       for (int i = 0; i < 9; ++i) order[static_cast<std::size_t>(i)] = i;
                       std::shuffle(order.begin(), order.end(), rng);
                       std::vector<SettingValue> sub;
                       double prev = 0.0, worst = 0.0;
                       for (int idx : order) {
                         const int i = idx / 3 + 1, j = idx % 3 + 1;
                         sub.push_back({i, j, t(i, j)});
                         const double v = q2_partial(sub);
                         worst = std::max(worst, prev - v);
                         prev = v;
                       }
                       return std::max(worst, std::abs(prev - q2(t)) - 1e-12);
                     }, o.exec)));

  const std::uint64_t spr = salted(o.seed, 23);
  out.push_back(make(s, "product_state_q2_at_most_1", 1e-9,
                     reduce_residuals(n, 1e-9, [&](std::uint64_t k) {
                       return q2(pauli_table(sample_state(Ensemble::kProduct, spr, k))) - 1.0;
                     }, o.exec)));
  return out;
}

std::vector<SuiteCheck> rotation_suite(const VerifyOptions& o) {
  const std::uint64_t seed = salted(o.seed, 31);
  return {make("rotation", "rfi_rotation_invariance", 1e-9,
               reduce_residuals(o.rotation_samples, 1e-9, [&](std::uint64_t k) {
                 Rng rng = make_stream(seed, k);
                 std::uniform_int_distribution<int> rank(1, 4);
                 const auto rho = random_state(rng, rank(rng));
                 const auto rot = random_rotation(rng);
                 const auto a = rfi_report(pauli_table(rho)).as_array();
                 const auto b = rfi_report(pauli_table(apply_rotation(rho, rot))).as_array();
                 double r = 0.0;
                 for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
                 return r;
               }, o.exec))};
}

std::vector<SuiteCheck> bound_suite(const VerifyOptions& o) {
  const char* s = "bounds";
  std::vector<SuiteCheck> out;
  const auto rows = scatter(Ensemble::kGinibre, salted(o.seed, 41), o.bound_samples, o.exec);
  const std::uint64_t n = rows.size();

  out.push_back(make(s, "concurrence_lower_bound", kBoundTol,
                     reduce_residuals(n, kBoundTol, [&](std::uint64_t k) {
                       return lower_bound_residual(rows[k].q2, rows[k].concurrence);
                     }, o.exec)));
  out.push_back(make(s, "mems_envelope_upper_bound", kBoundTol,
                     reduce_residuals(n, kBoundTol, [&](std::uint64_t k) {
                       return envelope_residual(rows[k].q2, rows[k].concurrence);
                     }, o.exec),
                     false));
  out.push_back(make(s, "purity_sandwich", kBoundTol,
                     reduce_residuals(n, kBoundTol, [&](std::uint64_t k) {
                       const auto& r = rows[k];
                       return sandwich_residual(r.purity, r.purity_a, r.purity_b, r.concurrence);
                     }, o.exec)));

  const int grid = std::max(o.mems_grid, 2);
  out.push_back(make(s, "mems_minimum_matches_envelope", 1e-6,
                     reduce_residuals(static_cast<std::uint64_t>(grid), 1e-6, [&](std::uint64_t k) {
                       const double c = static_cast<double>(k) / (grid - 1);
                       return std::abs(minimize_mems_q2(c).q2 - q2_lower_envelope(c));
                     }, o.exec)));

  out.push_back(make(s, "upper_inversion_continuity", 1e-12,
                     reduce_residuals(1, 1e-12, [](std::uint64_t) {
                       const double below = concurrence_interval_from_q2({0.5 - 1e-13, 0}).upper.value;
                       const double above = concurrence_interval_from_q2({0.5 + 1e-13, 0}).upper.value;
                       const double at = concurrence_interval_from_q2({0.5, 0}).upper.value;
                       return std::max(std::abs(below - above), std::abs(at - 0.5));
                     }, o.exec)));

  const std::uint64_t ss = salted(o.seed, 42);
  out.push_back(make(s, "separable_purity_criterion", kBoundTol,
                     reduce_residuals(o.bound_samples, kBoundTol, [&](std::uint64_t k) {
                       const auto rho = sample_state(Ensemble::kSeparable, ss, k);
                       const auto t = pauli_table(rho);
                       return trace_moment(rho, 2) - std::min(pa(t), pb(t));
                     }, o.exec)));
  return out;
}

std::vector<SuiteCheck> entropy_suite(const VerifyOptions& o) {
  const char* s = "entropy";
  const std::uint64_t n = o.entropy_samples;
  const std::uint64_t seed = salted(o.seed, 51);
  std::vector<SuiteCheck> out;

  out.push_back(make(s, "renyi_hierarchy", 1e-10,
                     reduce_residuals(n, 1e-10, [&](std::uint64_t k) {
                       const auto rho = sample_state(Ensemble::kGinibre, seed, k);
                       double prev = von_neumann(rho), worst = -kInf;
                       for (double a : {2.0, 3.0, 4.0, 5.0, kInf}) {
                         const double v = renyi(rho, a);
                         worst = std::max(worst, v - prev);
                         prev = v;
                       }
                       return worst;
                     }, o.exec)));

  out.push_back(make(s, "mercator_below_von_neumann", 1e-10,
                     reduce_residuals(n, 1e-10, [&](std::uint64_t k) {
                       const auto rho = sample_state(Ensemble::kGinibre, seed, k);
                       const auto m = trace_moments(rho, kMaxMomentOrder);
                       const double s1 = von_neumann(rho);
                       double prev = -kInf, worst = -kInf;
                       for (int d = 1; d < kMaxMomentOrder; ++d) {
                         const double b = mercator_lower_bound(m, d);
                         worst = std::max({worst, b - s1, prev - b});
                         prev = b;
                       }
                       return worst;
                     }, o.exec)));

  out.push_back(make(s, "s2_subset_bound", 1e-10,
                     reduce_residuals(n, 1e-10, [&](std::uint64_t k) {
                       const auto rho = sample_state(Ensemble::kGinibre, seed, k);
                       const auto t = pauli_table(rho);
                       const double s2 = renyi(rho, 2.0);
                       std::vector<SettingValue> sub;
                       double prev = kInf, worst = -kInf;
                       for (const auto& e : largest_entries(t, 16)) {
                         sub.push_back(e);
                         const double b = s2_upper_bound(sub);
                         worst = std::max({worst, s2 - b, b - prev});
                         prev = b;
                       }
                       return std::max(worst, std::abs(prev - s2) - 1e-10);
                     }, o.exec)));

  out.push_back(make(s, "eigenvalues_from_moments", 1e-8,
                     reduce_residuals(n, 1e-8, [&](std::uint64_t k) {
                       const auto rho = sample_state(Ensemble::kGinibre, seed, k);
                       const auto want = rho.eigenvalues();
                       const auto got = eigenvalues_from_moments(trace_moments(rho, 4));
                       double r = 0.0;
                       for (std::size_t i = 0; i < 4; ++i) r = std::max(r, std::abs(want[i] - got[i]));
                       return r;
                     }, o.exec)));
  return out;
}

}  // namespace

std::vector<SuiteCheck> run_suite(Suite suite, const VerifyOptions& options) {
  switch (suite) {
    case Suite::kStateAlgebra: return state_algebra_suite(options);
    case Suite::kIdentities: return identity_suite(options);
    case Suite::kRotation: return rotation_suite(options);
    case Suite::kBounds: return bound_suite(options);
    case Suite::kEntropy: return entropy_suite(options);
  }
  return {};
}

std::vector<SuiteCheck> run_all(const VerifyOptions& options) {
  std::vector<SuiteCheck> out;
  for (Suite s : {Suite::kStateAlgebra, Suite::kIdentities, Suite::kRotation, Suite::kBounds,
                  Suite::kEntropy}) {
    auto part = run_suite(s, options);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool all_passed(const std::vector<SuiteCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed(); });
}

}  // namespace rfient
