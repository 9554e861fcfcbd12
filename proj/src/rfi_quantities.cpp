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

#include "rfient/rfi_quantities.hpp"

#include <cmath>
#include <stdexcept>

namespace rfient {

double q1(const std::array<double, 3>& bloch) {
  return bloch[0] * bloch[0] + bloch[1] * bloch[1] + bloch[2] * bloch[2];
}

double q1_a(const PauliTable& t) { return q1({t(1, 0), t(2, 0), t(3, 0)}); }
double q1_b(const PauliTable& t) { return q1({t(0, 1), t(0, 2), t(0, 3)}); }

double q2(const PauliTable& t) {
  double s = 0.0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) s += t(i, j) * t(i, j);
  return s;
}

double q2_partial(std::span<const SettingValue> subset) {
  bool seen[4][4] = {};
  double s = 0.0;
  for (const auto& e : subset) {
    if (e.i < 1 || e.i > 3 || e.j < 1 || e.j > 3)
      throw std::invalid_argument("q2_partial: setting indices must be in 1..3");
    if (seen[e.i][e.j]) throw std::invalid_argument("q2_partial: repeated setting");
    seen[e.i][e.j] = true;
    s += e.value * e.value;
  }
  return s;
}

double q3(const PauliTable& t) {
  return t(1, 3) * t(2, 2) * t(3, 1) - t(1, 2) * t(2, 3) * t(3, 1) -
         t(1, 3) * t(2, 1) * t(3, 2) + t(1, 1) * t(2, 3) * t(3, 2) +
         t(1, 2) * t(2, 1) * t(3, 3) - t(1, 1) * t(2, 2) * t(3, 3);
}

double q4(const PauliTable& t) {
  double s = 0.0;
  for (int i = 1; i <= 3; ++i)
    for (int k = 1; k <= 3; ++k) {
      if (i == k) continue;
      for (int j = 1; j <= 3; ++j)
        for (int l = 1; l <= 3; ++l) {
          if (j == l) continue;
          s += t(i, j) * t(i, j) * t(k, l) * t(k, l) - t(i, j) * t(k, l) * t(i, l) * t(k, j);
        }
    }
  return s;
}

double q5(const PauliTable& t) {
  const double t11 = t(1, 1), t12 = t(1, 2), t13 = t(1, 3);
  const double t21 = t(2, 1), t22 = t(2, 2), t23 = t(2, 3);
  const double t31 = t(3, 1), t32 = t(3, 2), t33 = t(3, 3);
  const auto sq = [](double v) { return v * v; };
  const auto cube = [](double v) { return v * v * v; };
  double s = 0.0;
  s += sq(t11) * t13 * t22 * t31;
  s += sq(t12) * t13 * t22 * t31;
  s += cube(t13) * t22 * t31;
  s += t13 * sq(t21) * t22 * t31;
  s += t13 * cube(t22) * t31;
  s -= sq(t11) * t12 * t23 * t31;
  s -= cube(t12) * t23 * t31;
  s -= t12 * sq(t13) * t23 * t31;
  s -= t12 * sq(t21) * t23 * t31;
  s -= t12 * sq(t22) * t23 * t31;
  s += t13 * t22 * sq(t23) * t31;
  s -= t12 * cube(t23) * t31;
  s += t13 * t22 * cube(t31);
  s -= t12 * t23 * cube(t31);
  s -= sq(t11) * t13 * t21 * t32;
  s -= sq(t12) * t13 * t21 * t32;
  s -= cube(t13) * t21 * t32;
  s -= t13 * cube(t21) * t32;
  s -= t13 * t21 * sq(t22) * t32;
  s += cube(t11) * t23 * t32;
  s += t11 * sq(t12) * t23 * t32;
  s += t11 * sq(t13) * t23 * t32;
  s += t11 * sq(t21) * t23 * t32;
  s += t11 * sq(t22) * t23 * t32;
  s -= t13 * t21 * sq(t23) * t32;
  s += t11 * cube(t23) * t32;
  s -= t13 * t21 * sq(t31) * t32;
  s += t11 * t23 * sq(t31) * t32;
  s += t13 * t22 * t31 * sq(t32);
  s -= t12 * t23 * t31 * sq(t32);
  s -= t13 * t21 * cube(t32);
  s += t11 * t23 * cube(t32);
  s += sq(t11) * t12 * t21 * t33;
  s += cube(t12) * t21 * t33;
  s += t12 * sq(t13) * t21 * t33;
  s += t12 * cube(t21) * t33;
  s -= cube(t11) * t22 * t33;
  s -= t11 * sq(t12) * t22 * t33;
  s -= t11 * sq(t13) * t22 * t33;
  s -= t11 * sq(t21) * t22 * t33;
  s += t12 * t21 * sq(t22) * t33;
  s -= t11 * cube(t22) * t33;
  s += t12 * t21 * sq(t23) * t33;
  s -= t11 * t22 * sq(t23) * t33;
  s += t12 * t21 * sq(t31) * t33;
  s -= t11 * t22 * sq(t31) * t33;
  s += t12 * t21 * sq(t32) * t33;
  s -= t11 * t22 * sq(t32) * t33;
  s += t13 * t22 * t31 * sq(t33);
  s -= t12 * t23 * t31 * sq(t33);
  s -= t13 * t21 * t32 * sq(t33);
  s += t11 * t23 * t32 * sq(t33);
  s += t12 * t21 * cube(t33);
  s -= t11 * t22 * cube(t33);
  return s;
}

double g(const PauliTable& t) {
  double s = 0.0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      const double d = t(i, j) - t(i, 0) * t(0, j);
      s += d * d;
    }
  return s;
}

namespace {

// (-1)^((b - a) mod 3) with a non-negative modulus.
int cyclic_sign(int a, int b) { return (((b - a) % 3 + 3) % 3) % 2 == 0 ? 1 : -1; }

}  // namespace

double y(const PauliTable& t) {
  static constexpr int kPerms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                       {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  double s = 0.0;
  for (const auto& p : kPerms) {
    const int i = p[0], j = p[1], k = p[2];
    for (const auto& q : kPerms) {
      const int l = q[0], m = q[1], n = q[2];
      s += cyclic_sign(i, k) * cyclic_sign(l, n) * t(0, l) * t(i, 0) * t(j, m) * t(k, n);
    }
  }
  return s;
}

double z1(const PauliTable& t) {
  double s = 0.0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) s += t(0, j) * t(0, k) * t(i, j) * t(i, k);
  return s;
}

double z2(const PauliTable& t) {
  double s = 0.0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) s += t(j, 0) * t(k, 0) * t(j, i) * t(k, i);
  return s;
}

RfiReport rfi_report(const PauliTable& t) {
  RfiReport r;
  r.q1_a = q1_a(t);
  r.q1_b = q1_b(t);
  r.q2 = q2(t);
  r.q3 = q3(t);
  r.q4 = q4(t);
  r.q5 = q5(t);
  r.g = g(t);
  r.y = y(t);
  r.z1 = z1(t);
  r.z2 = z2(t);
  return r;
}

}  // namespace rfient
