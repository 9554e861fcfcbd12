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

#include "rfient/entropy.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "test_support.hpp"

namespace rfient {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Correlation table with purities 0.9066, 0.5081, 0.5044: the diagonal
// carries 2.5519 of Q2, the rest is spread over smaller entries.
PauliTable high_purity_table() {
  PauliTable t;
  t(0, 0) = 1;
  const double d = std::sqrt(2.5519 / 3);
  t(1, 1) = -d;
  t(2, 2) = d;
  t(3, 3) = d;
  const double off = std::sqrt(0.0495 / 6);
  t(1, 2) = off;
  t(1, 3) = -off;
  t(2, 1) = off;
  t(2, 3) = off;
  t(3, 1) = -off;
  t(3, 2) = off;
  const double a = std::sqrt(0.0162 / 3), b = std::sqrt(0.0088 / 3);
  for (int k = 1; k <= 3; ++k) {
    t(k, 0) = a;
    t(0, k) = -b;
  }
  return t;
}

TEST(RenyiTest, MaximallyMixedIsLn4ForAllOrders) {
  for (double a : {0.5, 2.0, 3.0, 7.5, kInf}) EXPECT_NEAR(renyi(maximally_mixed(), a), std::log(4.0), 1e-14);
  EXPECT_NEAR(von_neumann(maximally_mixed()), std::log(4.0), 1e-14);
}

TEST(RenyiTest, PureStateIsZero) {
  const auto rho = random_state(3, 1);
  for (double a : {2.0, 4.0, kInf}) EXPECT_NEAR(renyi(rho, a), 0.0, 1e-12);
  EXPECT_NEAR(von_neumann(rho), 0.0, 1e-9);
}

TEST(RenyiTest, OrderOneAndNonPositiveRejected) {
  EXPECT_THROW(renyi(maximally_mixed(), 1.0), std::invalid_argument);
  EXPECT_THROW(renyi(maximally_mixed(), 0.0), std::invalid_argument);
  EXPECT_THROW(renyi(maximally_mixed(), -2.0), std::invalid_argument);
}

TEST(RenyiTest, S2FromHighPurity) {
  EXPECT_NEAR(s2_from_purity(0.9066), 0.0981, 1e-4);
  EXPECT_NEAR(renyi(werner(0.5), 2.0), s2_from_purity(trace_moment(werner(0.5), 2)), 1e-14);
}

TEST(VonNeumannTest, WernerClosedForm) {
  const double p = 0.88;
  const double l0 = (1 + 3 * p) / 4, l1 = (1 - p) / 4;
  EXPECT_NEAR(von_neumann(werner(p)), -l0 * std::log(l0) - 3 * l1 * std::log(l1), 1e-13);
}

TEST(VonNeumannTest, SpectrumClampAndRejection) {
  const std::array<double, 4> tiny_negative{1.0, -1e-12, 0, 0};
  EXPECT_NEAR(von_neumann_of_spectrum(tiny_negative), 0.0, 1e-15);
  const std::array<double, 4> negative{1.1, -0.1, 0, 0};
  EXPECT_THROW(von_neumann_of_spectrum(negative), std::domain_error);
}

TEST(S2BoundTest, FullTableGivesS2) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto rho = random_state(s, 4);
    const auto all = largest_entries(pauli_table(rho), 16);
    EXPECT_NEAR(s2_upper_bound(all), renyi(rho, 2.0), 1e-12);
  }
}

TEST(S2BoundTest, IdentityOnlyIsLn4) {
  const std::vector<SettingValue> only{{0, 0, 1.0}};
  EXPECT_NEAR(s2_upper_bound(only), std::log(4.0), 1e-15);
  EXPECT_NEAR(s2_upper_bound({}), std::log(4.0), 1e-15);
}

TEST(S2BoundTest, FourLargestAtHighPurity) {
  const auto t = high_purity_table();
  EXPECT_NEAR(purity_from_table(t), 0.9066, 1e-12);
  const auto top = largest_entries(t, 4);
  EXPECT_EQ(top[0].i, 0);
  EXPECT_EQ(top[0].j, 0);
  const double bound = s2_upper_bound(top);
  EXPECT_NEAR(bound, 0.1188, 1e-4);
  EXPECT_GE(bound, s2_from_purity(purity_from_table(t)));
}

TEST(S2BoundTest, RejectsRepeatsAndBadIndices) {
  const std::vector<SettingValue> repeat{{1, 1, 0.2}, {1, 1, 0.2}};
  const std::vector<SettingValue> bad{{4, 0, 0.2}};
  EXPECT_THROW(s2_upper_bound(repeat), std::invalid_argument);
  EXPECT_THROW(s2_upper_bound(bad), std::invalid_argument);
}

TEST(MercatorTest, DepthThreeCoefficients) {
  const auto c = mercator_coefficients(3);
  EXPECT_NEAR(c[1], 11.0 / 6.0, 1e-15);
  EXPECT_NEAR(c[2], -3.0, 1e-15);
  EXPECT_NEAR(c[3], 1.5, 1e-15);
  EXPECT_NEAR(c[4], -1.0 / 3.0, 1e-15);
}

TEST(MercatorTest, PureStateIsZero) {
  const TraceMoments ones{{1, 1, 1, 1}};
  EXPECT_NEAR(mercator_lower_bound(ones, 3), 0.0, 1e-15);
}

TEST(MercatorTest, MaximallyMixedExactFraction) {
  const TraceMoments m{{1, 0.25, 1.0 / 16, 1.0 / 64}};
  EXPECT_NEAR(mercator_lower_bound(m, 3), 1.171875, 1e-15);
  EXPECT_LE(mercator_lower_bound(m, 3), std::log(4.0));
}

TEST(MercatorTest, MonotoneInDepthAndBelowS1) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto rho = random_state(s, 1 + static_cast<int>(s % 4));
    const auto m = trace_moments(rho, kMaxMomentOrder);
    const double s1 = von_neumann(rho);
    double prev = -1;
    for (int d = 1; d < kMaxMomentOrder; ++d) {
      const double b = mercator_lower_bound(m, d);
      EXPECT_GE(b, prev - 1e-12);
      EXPECT_LE(b, s1 + 1e-10);
      prev = b;
    }
  }
}

TEST(MercatorTest, NeedsEnoughMoments) {
  const TraceMoments m{{1, 0.5}};
  EXPECT_THROW(mercator_lower_bound(m, 3), std::invalid_argument);
  EXPECT_THROW(mercator_coefficients(0), std::invalid_argument);
}

TEST(TraceMomentsTest, TableRouteMatchesMatrixRoute) {
  const auto rho = random_state(12, 3);
  const auto a = trace_moments(rho, 6);
  const auto b = trace_moments_from_table(pauli_table(rho), 6);
  for (int n = 1; n <= 6; ++n) EXPECT_NEAR(a(n), b(n), 1e-13);
}

TEST(EigenvaluesFromMomentsTest, MaximallyMixed) {
  const auto ev = eigenvalues_from_moments({{1, 0.25, 1.0 / 16, 1.0 / 64}});
  for (double l : ev) EXPECT_NEAR(l, 0.25, 1e-8);
}

TEST(EigenvaluesFromMomentsTest, PureState) {
  const auto ev = eigenvalues_from_moments({{1, 1, 1, 1}});
  EXPECT_NEAR(ev[0], 1.0, 1e-8);
  for (std::size_t k = 1; k < 4; ++k) EXPECT_NEAR(ev[k], 0.0, 1e-8);
}

TEST(EigenvaluesFromMomentsTest, MatchesEigensolver) {
  for (std::uint64_t s = 0; s < 2000; ++s) {
    const auto rho = random_state(s, 1 + static_cast<int>(s % 4));
    const auto want = rho.eigenvalues();
    const auto got = eigenvalues_from_moments(trace_moments(rho, 4));
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(got[k], want[k], 1e-8) << "seed " << s;
  }
}

TEST(EigenvaluesFromMomentsTest, WernerDegenerateTriple) {
  const auto got = eigenvalues_from_moments(trace_moments(werner(0.88), 4));
  EXPECT_NEAR(got[0], (1 + 3 * 0.88) / 4, 1e-8);
  for (std::size_t k = 1; k < 4; ++k) EXPECT_NEAR(got[k], 0.03, 1e-8);
}

TEST(EigenvaluesFromMomentsTest, InconsistentMomentsThrow) {
  // No real spectrum has these moments.
  EXPECT_THROW(eigenvalues_from_moments({{1, 0.25, 0.5, 0.01}}), std::domain_error);
}

}  // namespace
}  // namespace rfient
