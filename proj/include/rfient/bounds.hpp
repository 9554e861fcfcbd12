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

// Concurrence, the maximally-entangled-mixed-state family and concurrence
// bounds from rfi quantities and purities.

#include <string_view>

#include "rfient/measured.hpp"
#include "rfient/state_algebra.hpp"

namespace rfient {

// Spin-flip concurrence, computed from the singular values of
// W^T (sigma_y x sigma_y) W with rho = W W^dag.
double concurrence(const DensityMatrix& rho);

struct MemsParams {
  double x = 0.0;
  double y = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  double phi() const { return x + y; }
};

// Throws std::invalid_argument for negative parameters or when they do not
// sum to 1 within 1e-12.
DensityMatrix mems_state(const MemsParams& p);
// gamma - 2 sqrt(alpha beta), clamped at 0.
double mems_concurrence(const MemsParams& p);

// Lower envelope of Q2 at fixed concurrence over the MEMS family:
// 2C^2 for C <= 1/2, 1 - 4C + 6C^2 above.
double q2_lower_envelope(double c);

struct MemsMinimum {
  double q2 = 0.0;
  MemsParams params;
};

// Numerically minimizes Q2(mems_state(p)) over all MEMS parameters with
// concurrence c, evaluating Q2 through the Pauli table of the state.
MemsMinimum minimize_mems_q2(double c);

struct ConcurrenceInterval {
  Measured lower;
  Measured upper;
  // False when the upper bound rests on the MEMS saturation assumption.
  bool upper_proven = false;
};

// Lower: C^2 >= (Q2 - 1)/2. Upper: inversion of the MEMS envelope.
// Throws std::domain_error when q2 lies outside [0,3] beyond 3 sigma.
ConcurrenceInterval concurrence_interval_from_q2(const Measured& q2);

// 2 max_r (tr rho^2 - tr rho_r^2) <= C^2 <= 2 min_r (1 - tr rho_r^2).
ConcurrenceInterval concurrence_interval_from_purities(const Measured& purity,
                                                       const Measured& purity_a,
                                                       const Measured& purity_b);

enum class Verdict { kEntangled, kInconclusive };
std::string_view to_string(Verdict v);

// "entangled" when tr rho^2 exceeds either marginal purity by more than
// z combined sigmas; separable states never do.
Verdict purity_separability_test(const Measured& purity, const Measured& purity_a,
                                 const Measured& purity_b, double z = 3.0);

}  // namespace rfient
