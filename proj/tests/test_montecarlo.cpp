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

#include "rfient/montecarlo.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "rfient/bounds.hpp"

namespace rfient {
namespace {

bool same(const ScatterRow& a, const ScatterRow& b) {
  return a.purity == b.purity && a.purity_a == b.purity_a && a.purity_b == b.purity_b &&
         a.band == b.band && a.concurrence == b.concurrence && a.q2 == b.q2 &&
         a.normalized.q2 == b.normalized.q2 && a.normalized.q3 == b.normalized.q3 &&
         a.normalized.q4 == b.normalized.q4 && a.normalized.q5 == b.normalized.q5;
}

TEST(PurityBandTest, Boundaries) {
  EXPECT_EQ(purity_band(0.25), 0);
  EXPECT_EQ(purity_band(0.5), 0);
  EXPECT_EQ(purity_band(0.5000001), 1);
  EXPECT_EQ(purity_band(0.6), 1);
  EXPECT_EQ(purity_band(0.61), 2);
  EXPECT_EQ(purity_band(0.9), 4);
  EXPECT_EQ(purity_band(0.95), 5);
  EXPECT_EQ(purity_band(1.0), 5);
  EXPECT_EQ(purity_band_label(0), "<=0.5");
  EXPECT_EQ(purity_band_label(5), ">0.9");
}

TEST(EnsembleTest, ParseRoundTrip) {
  for (Ensemble e : {Ensemble::kGinibre, Ensemble::kPure, Ensemble::kProduct, Ensemble::kSeparable})
    EXPECT_EQ(parse_ensemble(to_string(e)), e);
  EXPECT_FALSE(parse_ensemble("bogus").has_value());
}

TEST(EnsembleTest, SampleDependsOnlyOnSeedAndIndex) {
  EXPECT_EQ(sample_state(Ensemble::kGinibre, 4, 17).matrix(), sample_state(Ensemble::kGinibre, 4, 17).matrix());
  EXPECT_NE(sample_state(Ensemble::kGinibre, 4, 17).matrix(), sample_state(Ensemble::kGinibre, 4, 18).matrix());
}

TEST(EnsembleTest, ProductAndSeparableAreUnentangled) {
  for (std::uint64_t k = 0; k < 300; ++k) {
    EXPECT_LT(concurrence(sample_state(Ensemble::kProduct, 2, k)), 1e-7);
    EXPECT_LT(concurrence(sample_state(Ensemble::kSeparable, 2, k)), 1e-7);
  }
}

TEST(ScatterTest, ParallelMatchesSerial) {
  for (Ensemble e : {Ensemble::kGinibre, Ensemble::kSeparable}) {
    const auto a = scatter(e, 11, 3000, Execution::kSerial);
    const auto b = scatter(e, 11, 3000, Execution::kParallel);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) ASSERT_TRUE(same(a[k], b[k])) << k;
  }
}

TEST(ScatterTest, PureStatesLieOnTheCurve) {
  for (const auto& r : scatter(Ensemble::kPure, 5, 5000)) {
    EXPECT_NEAR(r.q2, 1 + 2 * r.concurrence * r.concurrence, 1e-9);
    EXPECT_EQ(r.band, 5);
  }
}

TEST(ReduceResidualsTest, ParallelMatchesSerial) {
  auto f = [](std::uint64_t k) { return std::sin(static_cast<double>(k) * 0.37) - 0.9; };
  const auto a = reduce_residuals(100000, 0.0, f, Execution::kSerial);
  const auto b = reduce_residuals(100000, 0.0, f, Execution::kParallel);
  EXPECT_EQ(a.violations, b.violations);
  EXPECT_EQ(a.max_residual, b.max_residual);
  EXPECT_EQ(a.samples, 100000u);
  EXPECT_GT(a.violations, 0u);
}

TEST(ReduceResidualsTest, NanCountsAsViolation) {
  const auto r = reduce_residuals(3, 1.0, [](std::uint64_t k) { return k == 1 ? NAN : 0.0; });
  EXPECT_EQ(r.violations, 1u);
  EXPECT_TRUE(std::isinf(r.max_residual));
}

TEST(TallyTest, GinibreSampleHasNoProvenBoundViolations) {
  const auto rows = scatter(Ensemble::kGinibre, 3, 20000);
  const auto t = tally_bounds(rows);
  EXPECT_EQ(t.samples, 20000u);
  EXPECT_EQ(t.lower_violations, 0u);
  EXPECT_EQ(t.sandwich_violations, 0u);
  EXPECT_EQ(t.envelope_violations, 0u);
}

TEST(TallyTest, ResidualSigns) {
  EXPECT_GT(lower_bound_residual(3.0, 0.5), 0.0);
  EXPECT_LT(lower_bound_residual(3.0, 1.0), 1e-15);
  EXPECT_GT(envelope_residual(0.1, 0.9), 0.0);
  EXPECT_LT(envelope_residual(3.0, 1.0), 1e-15);
  EXPECT_GT(sandwich_residual(1.0, 0.5, 0.5, 0.2), 0.0);
}

}  // namespace
}  // namespace rfient
