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

#include "rfient/measurement.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "rfient/rfi_quantities.hpp"
#include "test_support.hpp"

namespace rfient {
namespace {

SourceModel model_for(const DensityMatrix& rho, std::uint64_t budget, std::uint64_t seed,
                      const LocalRotation& rot = LocalRotation::identity()) {
  SourceModel m;
  m.target = rho;
  m.rotation = rot;
  m.pairs_per_setting = budget;
  m.seed = seed;
  return m;
}

// Expected counts rounded from a very large budget; stands in for the
// infinite-budget limit.
std::vector<CountRecord> analytic_records(const DensityMatrix& rho, double budget = 1e12) {
  std::vector<CountRecord> out;
  for (int k = 0; k < 9; ++k) {
    CountRecord r;
    r.setting = setting_from_index(k);
    const auto p = outcome_probabilities(rho, r.setting);
    for (std::size_t o = 0; o < 4; ++o) r.counts[o] = static_cast<std::uint64_t>(std::llround(budget * p[o]));
    out.push_back(r);
  }
  return out;
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxy += (x[k] - mx) * (y[k] - my);
    sxx += (x[k] - mx) * (x[k] - mx);
  }
  return sxy / sxx;
}

TEST(SettingTest, IndexRoundTrip) {
  for (int k = 0; k < 9; ++k) EXPECT_EQ(setting_index(setting_from_index(k)), k);
  EXPECT_THROW(setting_index({0, 3}), std::invalid_argument);
  EXPECT_THROW(setting_from_index(9), std::out_of_range);
}

TEST(SimulateCountsTest, BellZZHasNoAnticorrelatedCounts) {
  const auto r = simulate_counts(model_for(bell_phi_minus(), 1000000, 1), {3, 3});
  EXPECT_EQ(r.counts[kPM] + r.counts[kMP], 0u);
  EXPECT_NEAR(static_cast<double>(r.total()), 1e6, 5 * 1e3);
}

TEST(SimulateCountsTest, MaximallyMixedIsUniform) {
  const std::uint64_t budget = 400000;
  for (int k = 0; k < 9; ++k) {
    const auto r = simulate_counts(model_for(maximally_mixed(), budget, 7), setting_from_index(k));
    const double mean = budget / 4.0;
    for (auto n : r.counts) EXPECT_NEAR(static_cast<double>(n), mean, 5 * std::sqrt(mean));
  }
}

TEST(SimulateCountsTest, FixedSeedIsBitIdentical) {
  const auto m = model_for(testing::fidelity_state(0.91), 100000, 1234, random_rotation(5));
  const auto a = simulate_all(m), b = simulate_all(m);
  for (std::size_t k = 0; k < 9; ++k) EXPECT_EQ(a[k].counts, b[k].counts);
}

TEST(SimulateCountsTest, InvalidSettingThrows) {
  EXPECT_THROW(simulate_counts(model_for(maximally_mixed(), 10, 1), {0, 1}), std::invalid_argument);
}

TEST(EstimateExpectationTest, Examples) {
  CountRecord perfect{{3, 3}, {500, 0, 0, 500}, 1000};
  auto m = estimate_expectation(perfect);
  EXPECT_DOUBLE_EQ(m.value, 1.0);
  EXPECT_DOUBLE_EQ(m.sigma, 0.0);

  CountRecord flat{{1, 1}, {250, 250, 250, 250}, 1000};
  m = estimate_expectation(flat);
  EXPECT_DOUBLE_EQ(m.value, 0.0);
  EXPECT_NEAR(m.sigma, 1 / std::sqrt(1000.0), 1e-15);

  CountRecord empty{{1, 1}, {0, 0, 0, 0}, 0};
  EXPECT_THROW(estimate_expectation(empty), std::invalid_argument);
}

TEST(EstimateExpectationTest, SigmaMatchesBinomialForm) {
  // With N fixed, var(E) = (1 - E^2)/N to first order.
  CountRecord r{{1, 2}, {400, 100, 200, 300}, 1000};
  const auto m = estimate_expectation(r);
  EXPECT_NEAR(m.value, 0.4, 1e-15);
  EXPECT_NEAR(m.sigma, std::sqrt((1 - 0.16) / 1000), 1e-15);
}

TEST(EstimateTableTest, BellLimitIsDiagonal) {
  const auto t = estimate_table(analytic_records(bell_phi_minus())).values();
  EXPECT_LT(testing::max_abs_diff(t, testing::bell_table()), 1e-9);
}

TEST(EstimateTableTest, ExactTableInLargeBudgetLimit) {
  const auto rho = apply_rotation(testing::fidelity_state(0.91), random_rotation(9));
  const auto t = estimate_table(analytic_records(rho)).values();
  EXPECT_LT(testing::max_abs_diff(t, pauli_table(rho)), 1e-9);
}

TEST(EstimateTableTest, MissingAndDuplicateSettingsThrow) {
  auto recs = analytic_records(maximally_mixed(), 1000);
  auto missing = recs;
  missing.pop_back();
  EXPECT_THROW(estimate_table(missing), std::invalid_argument);
  auto dup = recs;
  dup[8] = dup[0];
  try {
    estimate_table(dup);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("record 8"), std::string::npos);
  }
}

TEST(EstimateTableTest, PurityMatchesSourceModel) {
  const auto rho = testing::fidelity_state(0.91);
  const auto table = estimate_table(simulate_all(model_for(rho, 100000, 3)));
  const auto p = propagate([](const PauliTable& t) { return purity_from_table(t); }, table);
  EXPECT_NEAR(p.value, trace_moment(rho, 2), 5 * p.sigma);
}

TEST(EstimateTableTest, MarginalEstimatesAgreeAcrossSettings) {
  const auto rho = apply_rotation(random_state(4, 2), random_rotation(4));
  const auto recs = simulate_all(model_for(rho, 100000, 21));
  for (int a = 1; a <= 3; ++a) {
    std::vector<Measured> est;
    for (int o = 1; o <= 3; ++o) est.push_back(estimate_marginal(recs[static_cast<std::size_t>(setting_index({a, o}))], Subsystem::A));
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = x + 1; y < 3; ++y) EXPECT_LT(separation_sigmas(est[x], est[y]), 5.0);
  }
}

TEST(PropagateTest, LinearSingleEntry) {
  MeasuredTable t = MeasuredTable::exact(testing::bell_table());
  t(1, 2) = {0.3, 0.02};
  t(2, 3) = {-0.1, 0.05};
  const auto m = propagate([](const PauliTable& p) { return p(1, 2); }, t);
  EXPECT_DOUBLE_EQ(m.value, 0.3);
  EXPECT_NEAR(m.sigma, 0.02, 0.02 * 1e-9);
}

TEST(PropagateTest, LinearCombinationExact) {
  MeasuredTable t = MeasuredTable::exact(PauliTable::maximally_mixed());
  t(1, 1) = {0.5, 0.01};
  t(2, 2) = {0.2, 0.03};
  const auto m = propagate([](const PauliTable& p) { return 2 * p(1, 1) - 3 * p(2, 2) + 1; }, t);
  EXPECT_NEAR(m.value, 1.4, 1e-15);
  const double want = std::hypot(0.02, 0.09);
  EXPECT_NEAR(m.sigma, want, want * 1e-9);
}

TEST(PropagateTest, NonFiniteRejected) {
  MeasuredTable t = MeasuredTable::exact(PauliTable::maximally_mixed());
  t(1, 1) = {0.0, 0.1};
  EXPECT_THROW(propagate([](const PauliTable& p) { return std::log(p(1, 1)); }, t), std::domain_error);
}

TEST(PropagateTest, AgreesWithBootstrapSpread) {
  const auto rho = apply_rotation(testing::fidelity_state(0.91), random_rotation(77));
  const double truth = q2(pauli_table(rho));
  std::vector<double> q2s, q3s;
  double sigma_q2 = 0, sigma_q3 = 0;
  const int runs = 1000;
  for (int k = 0; k < runs; ++k) {
    const auto table = estimate_table(simulate_all(model_for(rho, 20000, 1000 + k)));
    const auto a = propagate([](const PauliTable& p) { return q2(p); }, table);
    const auto b = propagate([](const PauliTable& p) { return q3(p); }, table);
    q2s.push_back(a.value);
    q3s.push_back(b.value);
    sigma_q2 += a.sigma / runs;
    sigma_q3 += b.sigma / runs;
  }
  auto sd = [](const std::vector<double>& v) {
    const double m = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
    double s = 0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / (v.size() - 1));
  };
  EXPECT_NEAR(sigma_q2 / sd(q2s), 1.0, 0.15);
  EXPECT_NEAR(sigma_q3 / sd(q3s), 1.0, 0.15);
  EXPECT_NEAR(std::accumulate(q2s.begin(), q2s.end(), 0.0) / runs, truth, 5 * sd(q2s) / std::sqrt(runs) + 1e-3);
}

TEST(ConsistencyTest, TableErrorScalesAsInverseSqrtBudget) {
  const auto rho = apply_rotation(random_state(5, 4), random_rotation(5));
  const auto exact = pauli_table(rho);
  std::vector<double> lx, ly;
  for (double budget : {1e4, 1e5, 1e6}) {
    double sq = 0;
    const int seeds = 30;
    for (int s = 0; s < seeds; ++s) {
      const auto t = estimate_table(simulate_all(model_for(rho, static_cast<std::uint64_t>(budget), 50 + s))).values();
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) sq += std::pow(t(i, j) - exact(i, j), 2);
    }
    lx.push_back(std::log(budget));
    ly.push_back(0.5 * std::log(sq / seeds));
  }
  EXPECT_NEAR(slope(lx, ly), -0.5, 0.1);
}

TEST(ConsistencyTest, BellQ2IsThreeWithinFiveSigma) {
  const std::uint64_t budget = 1000000;
  const auto table = estimate_table(simulate_all(model_for(bell_phi_minus(), budget, 8)));
  const auto m = propagate([](const PauliTable& p) { return q2(p); }, table);
  // Squares of the six zero-mean entries add a bias of about 6/N that
  // first-order propagation does not see.
  EXPECT_NEAR(m.value, 3.0, 5 * m.sigma + 20.0 / budget);
}

}  // namespace
}  // namespace rfient
