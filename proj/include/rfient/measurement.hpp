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

// Simulated Pauli-setting coincidence counts, estimation of the Pauli table
// with Poisson error bars, and first-order error propagation.

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rfient/measured.hpp"
#include "rfient/state_algebra.hpp"

namespace rfient {

// Correlation setting: sigma_i on qubit A, sigma_j on qubit B, i,j in 1..3.
struct Setting {
  int i = 3;
  int j = 3;

  friend bool operator==(const Setting&, const Setting&) = default;
};

bool is_valid(const Setting& s);
// Row-major index 0..8 of a valid setting.
int setting_index(const Setting& s);
Setting setting_from_index(int index);

enum Outcome : int { kPP = 0, kPM = 1, kMP = 2, kMM = 3 };

struct CountRecord {
  Setting setting;
  // n_pp, n_pm, n_mp, n_mm.
  std::array<std::uint64_t, 4> counts{};
  // Pairs sent for this setting; informational.
  std::uint64_t budget = 0;

  std::uint64_t total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
};

struct SourceModel {
  DensityMatrix target = maximally_mixed();
  LocalRotation rotation;
  std::uint64_t pairs_per_setting = 100000;
  std::uint64_t seed = 0;
};

// Outcome probabilities tr((P_a^i x P_b^j) rho) for the ±1 eigenprojectors.
std::array<double, 4> outcome_probabilities(const DensityMatrix& rho, const Setting& s);

// Poisson counts with mean pairs_per_setting * p_ab. Each setting draws from
// its own stream of the model seed, so the result does not depend on the
// order in which settings are simulated.
CountRecord simulate_counts(const SourceModel& model, const Setting& s);
std::vector<CountRecord> simulate_all(const SourceModel& model);

// Correlation estimate (n_pp - n_pm - n_mp + n_mm)/N with Poisson
// propagation. Throws std::invalid_argument when N = 0.
Measured estimate_expectation(const CountRecord& r);
Measured estimate_marginal(const CountRecord& r, Subsystem which);

struct MeasuredTable {
  std::array<std::array<Measured, 4>, 4> t{};

  Measured& operator()(int i, int j) { return t[i][j]; }
  const Measured& operator()(int i, int j) const { return t[i][j]; }
  PauliTable values() const;

  static MeasuredTable exact(const PauliTable& table);
};

// Needs exactly one record per correlation setting. Marginals are the mean of
// the three outcome-marginalized estimates from compatible settings; t(0,0)
// is exactly 1.
MeasuredTable estimate_table(std::span<const CountRecord> records);

using TableFunction = std::function<double(const PauliTable&)>;

// value = f(values); sigma^2 = sum (df/dt_ij)^2 sigma_ij^2 with central
// differences of the given step, entries treated as independent. Throws
// std::domain_error on a non-finite result.
Measured propagate(const TableFunction& f, const MeasuredTable& table, double step = 1e-6);

}  // namespace rfient
