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

// Baseline tomographic reconstruction from the same counts, for comparison
// against directly estimated quantities.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "rfient/bounds.hpp"

#include "rfient/measurement.hpp"
#include "rfient/state_algebra.hpp"

namespace rfient {

// Linear inversion of the measured table (values only).
Reconstruction linear_inversion(const MeasuredTable& table);

// Euclidean projection of a vector onto the probability simplex
// (sort-and-threshold rule).
std::array<double, 4> project_to_simplex(const std::array<double, 4>& v);

struct Projection {
  DensityMatrix state;
  // Frobenius distance between candidate and result.
  double distance = 0.0;
};

// Nearest unit-trace PSD matrix in Frobenius norm: keep the eigenvectors and
// project the spectrum onto the simplex. Idempotent on physical input.
Projection project_physical(const Matrix4c& candidate);

struct TomographyResult {
  Reconstruction linear;
  DensityMatrix physical = maximally_mixed();
  double projection_distance = 0.0;
  double concurrence = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;
  double q4 = 0.0;
  double q5 = 0.0;
  double purity = 0.0;
  double purity_a = 0.0;
  double purity_b = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
};

TomographyResult reconstruct(const MeasuredTable& table);

struct ComparisonRow {
  std::string name;
  Measured direct;
  double tomographic = 0.0;
  // tomographic - direct.value
  double difference = 0.0;
  // |difference| / direct.sigma; 0 when both are exact and equal.
  double discrepancy_sigmas = 0.0;
};

struct IntervalRow {
  std::string name;
  ConcurrenceInterval direct;
  double tomographic = 0.0;
  bool contains = false;
};

struct Comparison {
  std::vector<ComparisonRow> rows;
  std::vector<IntervalRow> intervals;
  double projection_distance = 0.0;
  bool linear_unphysical = false;
  double linear_min_eigenvalue = 0.0;
};

Comparison compare_direct_vs_tomography(const MeasuredTable& table);
Comparison compare_direct_vs_tomography(std::span<const CountRecord> records);

// Aligned-column text rendering.
std::string format_comparison(const Comparison& c);

}  // namespace rfient
