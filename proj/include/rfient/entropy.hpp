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

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "rfient/rfi_quantities.hpp"
#include "rfient/state_algebra.hpp"

namespace rfient {

// m[n-1] = tr(rho^n), n = 1..size().
struct TraceMoments {
  std::vector<double> m;

  double operator()(int n) const { return m.at(static_cast<std::size_t>(n - 1)); }
  int max_order() const { return static_cast<int>(m.size()); }
};

TraceMoments trace_moments(const DensityMatrix& rho, int max_order = 4);
// Same moments, evaluated on the matrix rebuilt from a (possibly noisy) table.
TraceMoments trace_moments_from_table(const PauliTable& table, int max_order = 4);

// S_alpha = ln(tr rho^alpha) / (1 - alpha) from the spectrum. alpha may be
// +infinity (min-entropy). Throws std::invalid_argument for alpha == 1 or
// alpha <= 0.
double renyi(const DensityMatrix& rho, double alpha);
double von_neumann(const DensityMatrix& rho);
// -sum lambda ln lambda; eigenvalues in [-1e-10, 0) count as 0, anything
// more negative throws std::domain_error.
double von_neumann_of_spectrum(std::span<const double> eigenvalues);
double s2_from_purity(double purity);

// -ln(1/4 sum_{(i,j) in subset} t(i,j)^2) >= S_2. Indices range over 0..3;
// the (0,0) entry equals 1 and is added when absent.
double s2_upper_bound(std::span<const SettingValue> subset);

// The k entries of largest magnitude (ties by lowest (i,j)), (0,0) included.
std::vector<SettingValue> largest_entries(const PauliTable& table, int k);

// Truncated Mercator series sum_{n=1}^{depth} tr(rho (1-rho)^n)/n, a lower
// bound on S_1. Needs moments up to order depth + 1.
double mercator_lower_bound(const TraceMoments& moments, int depth = 3);
// Coefficients c[k] of tr(rho^k), k = 1..depth+1, in the series above.
std::vector<double> mercator_coefficients(int depth);

// Spectrum of a 4x4 Hermitian matrix from tr nu .. tr nu^4 via Newton's
// identities and a companion-matrix eigensolve. Descending; each value
// clamped to [-1e-10, 1]. Throws std::domain_error when the moments imply
// complex roots.
std::array<double, 4> eigenvalues_from_moments(const TraceMoments& moments);

}  // namespace rfient
