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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rfient/execution.hpp"
#include "rfient/rfi_quantities.hpp"
#include "rfient/state_algebra.hpp"

namespace rfient {

enum class Ensemble {
  kGinibre,    // rank drawn uniformly from 1..4
  kPure,
  kProduct,    // rho_A (x) rho_B, mixed factors
  kSeparable,  // convex mixtures of up to 16 pure product states
};

std::string_view to_string(Ensemble e);
std::optional<Ensemble> parse_ensemble(std::string_view name);

// Sample `index` of the ensemble; depends only on (seed, index).
DensityMatrix sample_state(Ensemble e, std::uint64_t seed, std::uint64_t index);

inline constexpr int kPurityBands = 6;
// 0: <= 0.5, 1: (0.5, 0.6], ..., 4: (0.8, 0.9], 5: > 0.9.
int purity_band(double purity);
std::string_view purity_band_label(int band);

struct ScatterRow {
  double purity = 0.0;
  double purity_a = 0.0;
  double purity_b = 0.0;
  int band = 0;
  double concurrence = 0.0;
  double q2 = 0.0;
  RfiNormalized normalized;
};

ScatterRow scatter_row(const DensityMatrix& rho);

std::vector<ScatterRow> scatter(Ensemble e, std::uint64_t seed, std::uint64_t count,
                                Execution exec = Execution::kParallel);

struct Reduction {
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  double max_residual = 0.0;
};

// Evaluates residual(k) for k in [0, count); a violation is residual > tol.
// The result does not depend on the execution mode.
Reduction reduce_residuals(std::uint64_t count, double tol,
                           const std::function<double(std::uint64_t)>& residual,
                           Execution exec = Execution::kParallel);

struct BoundTally {
  std::uint64_t samples = 0;
  // C^2 >= (Q2 - 1)/2; proven, must be zero.
  std::uint64_t lower_violations = 0;
  double lower_worst = 0.0;
  // Q2 above the MEMS envelope; conjectured.
  std::uint64_t envelope_violations = 0;
  double envelope_worst = 0.0;
  // Purity sandwich on C.
  std::uint64_t sandwich_violations = 0;
  double sandwich_worst = 0.0;
};

inline constexpr double kBoundTol = 1e-9;

BoundTally tally_bounds(std::span<const ScatterRow> rows);

// Residual helpers; positive means the bound is violated by that amount.
double lower_bound_residual(double q2, double c);
double envelope_residual(double q2, double c);
double sandwich_residual(double purity, double purity_a, double purity_b, double c);

}  // namespace rfient
