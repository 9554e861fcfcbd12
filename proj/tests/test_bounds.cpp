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

#include <gtest/gtest.h>

#include <cmath>

#include "rfient/rfi_quantities.hpp"
#include "test_support.hpp"

namespace rfient {
namespace {

// Concurrence from the sqrt of the eigenvalues of rho * rho~; an independent
// (less accurate) route used only as an oracle.
double concurrence_via_eigenvalues(const DensityMatrix& rho) {
  const Matrix4c yy = kron(testing::hand_pauli(2), testing::hand_pauli(2));
  const Matrix4c tilde = yy * rho.matrix().conjugate() * yy;
  Eigen::ComplexEigenSolver<Matrix4c> es(rho.matrix() * tilde);
  std::array<double, 4> l{};
  for (int k = 0; k < 4; ++k) l[static_cast<std::size_t>(k)] = std::sqrt(std::max(es.eigenvalues()(k).real(), 0.0));
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

TEST(ConcurrenceTest, KnownStates) {
  EXPECT_NEAR(concurrence(bell_phi_minus()), 1.0, 1e-12);
  EXPECT_NEAR(concurrence(basis_state(0, 1)), 0.0, 1e-12);
  EXPECT_NEAR(concurrence(maximally_mixed()), 0.0, 1e-12);
  // Werner: C = max(0, (3p - 1)/2).
  for (double p : {0.2, 1.0 / 3.0, 0.5, 0.88, 1.0})
    EXPECT_NEAR(concurrence(werner(p)), std::max(0.0, (3 * p - 1) / 2), 1e-12);
}

TEST(ConcurrenceTest, PureStateMatchesMarginalPurity) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto rho = random_state(s, 1);
    const double pa = partial_trace(rho, Subsystem::A).purity();
    EXPECT_NEAR(concurrence(rho), std::sqrt(std::max(0.0, 2 * (1 - pa))), 1e-10);
  }
}

TEST(ConcurrenceTest, AgreesWithEigenvalueRouteOnFullRankStates) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto rho = random_state(s, 4);
    EXPECT_NEAR(concurrence(rho), concurrence_via_eigenvalues(rho), 1e-7);
  }
}

TEST(MemsTest, StateAndConcurrence) {
  const MemsParams bell{0, 0, 0, 0, 1};
  const auto rho = mems_state(bell);
  EXPECT_LT((partial_trace(rho, Subsystem::A).matrix() - Matrix2c::Identity() / 2.0).norm(), 1e-14);
  EXPECT_NEAR(mems_concurrence(bell), 1.0, 1e-15);
  EXPECT_NEAR(concurrence(rho), 1.0, 1e-12);

  const MemsParams mixed{0.1, 0.1, 0.05, 0.05, 0.7};
  EXPECT_NEAR(mems_concurrence(mixed), 0.6, 1e-15);
  EXPECT_NEAR(concurrence(mems_state(mixed)), 0.6, 1e-12);
}

TEST(MemsTest, RejectsBadParameters) {
  EXPECT_THROW(mems_state({-0.1, 0.1, 0, 0, 1.0}), std::invalid_argument);
  EXPECT_THROW(mems_state({0.1, 0.1, 0, 0, 0.5}), std::invalid_argument);
}

TEST(MemsTest, Q2ClosedForm) {
  const MemsParams p{0.1, 0.2, 0.15, 0.05, 0.5};
  const double expect = 2 * p.gamma * p.gamma + std::pow(1 - 2 * p.alpha - 2 * p.beta, 2);
  EXPECT_NEAR(q2(pauli_table(mems_state(p))), expect, 1e-14);
}

TEST(EnvelopeTest, PiecesAndContinuity) {
  EXPECT_DOUBLE_EQ(q2_lower_envelope(0.0), 0.0);
  EXPECT_DOUBLE_EQ(q2_lower_envelope(0.5), 0.5);
  EXPECT_DOUBLE_EQ(q2_lower_envelope(1.0), 3.0);
  EXPECT_NEAR(q2_lower_envelope(0.5 - 1e-12), q2_lower_envelope(0.5 + 1e-12), 1e-11);
}

TEST(EnvelopeTest, MemsMinimumTracesEnvelope) {
  for (int k = 0; k <= 100; k += 5) {
    const double c = k / 100.0;
    const auto m = minimize_mems_q2(c);
    EXPECT_NEAR(m.q2, q2_lower_envelope(c), 1e-6) << "C = " << c;
    EXPECT_NEAR(concurrence(mems_state(m.params)), c, 1e-6);
  }
}

TEST(IntervalFromQ2Test, HighQ2Value) {
  const auto ci = concurrence_interval_from_q2({2.60, 0.01});
  EXPECT_NEAR(ci.lower.value, std::sqrt(0.8), 1e-12);
  EXPECT_NEAR(ci.upper.value, (4 + std::sqrt(16 - 24 * (1 - 2.60))) / 12, 1e-12);
  EXPECT_NEAR(ci.lower.value, 0.895, 2e-3);
  EXPECT_NEAR(ci.upper.value, 0.948, 2e-3);
  EXPECT_FALSE(ci.upper_proven);
  EXPECT_NEAR(ci.lower.sigma, 0.01 / (4 * std::sqrt(0.8)), 1e-15);
}

TEST(IntervalFromQ2Test, Extremes) {
  const auto bell = concurrence_interval_from_q2({3.0, 0.0});
  EXPECT_DOUBLE_EQ(bell.lower.value, 1.0);
  EXPECT_DOUBLE_EQ(bell.upper.value, 1.0);
  const auto sep = concurrence_interval_from_q2({1.0, 0.0});
  EXPECT_DOUBLE_EQ(sep.lower.value, 0.0);
  EXPECT_NEAR(sep.upper.value, 2.0 / 3.0, 1e-15);
  const auto zero = concurrence_interval_from_q2({0.0, 0.0});
  EXPECT_DOUBLE_EQ(zero.upper.value, 0.0);
}

TEST(IntervalFromQ2Test, BranchesAgreeAtOneHalf) {
  EXPECT_NEAR(concurrence_interval_from_q2({0.5, 0}).upper.value, 0.5, 1e-15);
  EXPECT_NEAR(concurrence_interval_from_q2({0.5 - 1e-12, 0}).upper.value,
              concurrence_interval_from_q2({0.5 + 1e-12, 0}).upper.value, 1e-11);
}

TEST(IntervalFromQ2Test, OutOfRangeThrowsUnlessWithinNoise) {
  EXPECT_THROW(concurrence_interval_from_q2({3.2, 0.01}), std::domain_error);
  EXPECT_THROW(concurrence_interval_from_q2({-0.2, 0.01}), std::domain_error);
  const auto ci = concurrence_interval_from_q2({3.01, 0.01});
  EXPECT_DOUBLE_EQ(ci.lower.value, 1.0);
}

TEST(IntervalFromQ2Test, BracketsTrueConcurrence) {
  for (std::uint64_t s = 0; s < 2000; ++s) {
    const auto rho = random_state(s, 1 + static_cast<int>(s % 4));
    const double c = concurrence(rho);
    const auto ci = concurrence_interval_from_q2({q2(pauli_table(rho)), 0});
    EXPECT_LE(ci.lower.value, c + 1e-9);
    EXPECT_GE(ci.upper.value, c - 1e-9);
  }
}

TEST(IntervalFromPuritiesTest, NearPureValues) {
  const auto ci = concurrence_interval_from_purities({0.9066, 0.0008}, {0.5081, 0.0001},
                                                     {0.5044, 0.0001});
  EXPECT_NEAR(ci.lower.value, 0.8969, 1e-4);
  EXPECT_NEAR(ci.upper.value, 0.9919, 1e-4);
  EXPECT_NEAR(ci.lower.value, 0.8968, 2e-4);
  EXPECT_NEAR(ci.upper.value, 0.9918, 2e-4);
  EXPECT_NEAR(ci.lower.sigma, 0.0009, 1e-4);
  EXPECT_TRUE(ci.upper_proven);
}

TEST(IntervalFromPuritiesTest, SandwichOnRandomStates) {
  for (std::uint64_t s = 0; s < 2000; ++s) {
    const auto rho = random_state(s, 1 + static_cast<int>(s % 4));
    const double c = concurrence(rho);
    const auto ci = concurrence_interval_from_purities(
        Measured::exact(trace_moment(rho, 2)),
        Measured::exact(partial_trace(rho, Subsystem::A).purity()),
        Measured::exact(partial_trace(rho, Subsystem::B).purity()));
    EXPECT_LE(ci.lower.value, c + 1e-9);
    EXPECT_GE(ci.upper.value, c - 1e-9);
  }
}

TEST(PurityTest, HighPurityRegimeIsEntangled) {
  EXPECT_EQ(purity_separability_test({0.9066, 0.0008}, {0.5081, 0.0001}, {0.5044, 0.0001}),
            Verdict::kEntangled);
}

TEST(PurityTest, SeparableStatesNeverFlagged) {
  Rng rng = make_stream(31, 0);
  for (int k = 0; k < 2000; ++k) {
    const auto rho = random_separable_state(rng);
    EXPECT_EQ(purity_separability_test(Measured::exact(trace_moment(rho, 2)),
                                       Measured::exact(partial_trace(rho, Subsystem::A).purity()),
                                       Measured::exact(partial_trace(rho, Subsystem::B).purity())),
              Verdict::kInconclusive);
  }
}

TEST(PurityTest, MaximallyMixedIsInconclusive) {
  EXPECT_EQ(purity_separability_test({0.25, 0}, {0.5, 0}, {0.5, 0}), Verdict::kInconclusive);
  EXPECT_EQ(to_string(Verdict::kEntangled), "entangled");
}

}  // namespace
}  // namespace rfient
