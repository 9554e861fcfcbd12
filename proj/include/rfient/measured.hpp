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

#include <cmath>

namespace rfient {

// A value with a one-standard-deviation uncertainty.
struct Measured {
  double value = 0.0;
  double sigma = 0.0;

  static constexpr Measured exact(double v) { return {v, 0.0}; }
};

// |a - b| in units of their combined sigma; +inf if both are exact and differ.
inline double separation_sigmas(const Measured& a, const Measured& b) {
  const double s = std::hypot(a.sigma, b.sigma);
  const double d = std::abs(a.value - b.value);
  if (s == 0.0) return d == 0.0 ? 0.0 : INFINITY;
  return d / s;
}

}  // namespace rfient
