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

// Reference-frame-independent polynomials of a two-qubit Pauli table.

#include <array>
#include <span>

#include "rfient/state_algebra.hpp"

namespace rfient {

// One correlation entry t(i, j) with its value, used for partial sums over a
// subset of measurement settings.
struct SettingValue {
  int i = 0;
  int j = 0;
  double value = 0.0;
};

// Sum of squared Bloch components of a single-qubit state.
double q1(const std::array<double, 3>& bloch);
double q1_a(const PauliTable& t);
double q1_b(const PauliTable& t);

double q2(const PauliTable& t);
// Sum of t(i,j)^2 over a subset of the 3x3 correlation block. Throws
// std::invalid_argument for indices outside 1..3 or repeated pairs.
double q2_partial(std::span<const SettingValue> subset);
double q3(const PauliTable& t);
double q4(const PauliTable& t);
double q5(const PauliTable& t);
double g(const PauliTable& t);
double y(const PauliTable& t);
double z1(const PauliTable& t);
double z2(const PauliTable& t);

// Maxima on maximally entangled states.
inline constexpr double kQ2Max = 3.0;
inline constexpr double kQ3Max = 1.0;
inline constexpr double kQ4Max = 6.0;
inline constexpr double kQ5Max = 3.0;

struct RfiNormalized {
  double q2 = 0.0;
  double q3 = 0.0;
  double q4 = 0.0;
  double q5 = 0.0;
};

struct RfiReport {
  double q1_a = 0.0;
  double q1_b = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;
  double q4 = 0.0;
  double q5 = 0.0;
  double g = 0.0;
  double y = 0.0;
  double z1 = 0.0;
  double z2 = 0.0;

  RfiNormalized normalized() const {
    return {q2 / kQ2Max, q3 / kQ3Max, q4 / kQ4Max, q5 / kQ5Max};
  }
  // Fields in declaration order, for invariance checks.
  std::array<double, 10> as_array() const { return {q1_a, q1_b, q2, q3, q4, q5, g, y, z1, z2}; }
};

RfiReport rfi_report(const PauliTable& t);

}  // namespace rfient
