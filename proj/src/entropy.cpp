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

#include "rfient/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rfient {
namespace {

TraceMoments moments_of(const Matrix4c& m, int max_order) {
  if (max_order < 1 || max_order > kMaxMomentOrder)
    throw std::out_of_range("moment order out of range");
  TraceMoments out;
  Matrix4c p = m;
  for (int n = 1; n <= max_order; ++n) {
    out.m.push_back(p.trace().real());
    p = p * m;
  }
  return out;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// p(x) = x^4 - e1 x^3 + e2 x^2 - e3 x + e4 and its derivative.
double char_poly(const std::array<double, 5>& e, double x) {
  return (((x - e[1]) * x + e[2]) * x - e[3]) * x + e[4];
}
double char_poly_deriv(const std::array<double, 5>& e, double x) {
  return ((4 * x - 3 * e[1]) * x + 2 * e[2]) * x - e[3];
}

}  // namespace

TraceMoments trace_moments(const DensityMatrix& rho, int max_order) {
  return moments_of(rho.matrix(), max_order);
}

TraceMoments trace_moments_from_table(const PauliTable& table, int max_order) {
  return moments_of(from_pauli_table(table).matrix, max_order);
}

double renyi(const DensityMatrix& rho, double alpha) {
  if (!(alpha > 0)) throw std::invalid_argument("Renyi order must be positive");
  if (alpha == 1.0) throw std::invalid_argument("alpha = 1 is the von Neumann entropy");
  const auto ev = rho.eigenvalues();
  if (std::isinf(alpha)) return -std::log(ev[0]);
  double s = 0.0;
  for (double l : ev)
    if (l > 0) s += std::pow(l, alpha);
  return std::log(s) / (1.0 - alpha);
}

double von_neumann_of_spectrum(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double l : eigenvalues) {
    if (l < -kPsdTol) throw std::domain_error("negative eigenvalue in entropy evaluation");
    if (l > 0) s -= l * std::log(l);
  }
  return s;
}

double von_neumann(const DensityMatrix& rho) {
  const auto ev = rho.eigenvalues();
  return von_neumann_of_spectrum(ev);
}

double s2_from_purity(double purity) { return -std::log(purity); }

double s2_upper_bound(std::span<const SettingValue> subset) {
  bool seen[4][4] = {};
  double s = 0.0;
  for (const auto& e : subset) {
    if (e.i < 0 || e.i > 3 || e.j < 0 || e.j > 3)
      throw std::invalid_argument("s2_upper_bound: indices must be in 0..3");
    if (seen[e.i][e.j]) throw std::invalid_argument("s2_upper_bound: repeated entry");
    seen[e.i][e.j] = true;
    s += e.value * e.value;
  }
  if (!seen[0][0]) s += 1.0;
  return -std::log(0.25 * s);
}

std::vector<SettingValue> largest_entries(const PauliTable& table, int k) {
  std::vector<SettingValue> all;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) all.push_back({i, j, table(i, j)});
  std::stable_sort(all.begin(), all.end(), [](const SettingValue& a, const SettingValue& b) {
    return std::abs(a.value) > std::abs(b.value);
  });
  all.resize(static_cast<std::size_t>(std::clamp(k, 0, 16)));
  return all;
}

std::vector<double> mercator_coefficients(int depth) {
  if (depth < 1) throw std::invalid_argument("Mercator depth must be >= 1");
  // tr(rho (1-rho)^n) = sum_k C(n,k) (-1)^k tr rho^{k+1}
  std::vector<double> c(static_cast<std::size_t>(depth + 2), 0.0);
  for (int n = 1; n <= depth; ++n)
    for (int k = 0; k <= n; ++k)
      c[static_cast<std::size_t>(k + 1)] += binomial(n, k) * ((k % 2) ? -1.0 : 1.0) / n;
  return c;
}

double mercator_lower_bound(const TraceMoments& moments, int depth) {
  if (moments.max_order() < depth + 1)
    throw std::invalid_argument("Mercator depth needs moments up to order depth + 1");
  const auto c = mercator_coefficients(depth);
  double s = 0.0;
  for (int k = 1; k <= depth + 1; ++k) s += c[static_cast<std::size_t>(k)] * moments(k);
  return s;
}

std::array<double, 4> eigenvalues_from_moments(const TraceMoments& moments) {
  if (moments.max_order() < 4) throw std::invalid_argument("need tr nu .. tr nu^4");
  const double p1 = moments(1), p2 = moments(2), p3 = moments(3), p4 = moments(4);
  // Newton's identities: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i.
  std::array<double, 5> e{};
  e[0] = 1.0;
  e[1] = p1;
  e[2] = (e[1] * p1 - p2) / 2.0;
  e[3] = (e[2] * p1 - e[1] * p2 + p3) / 3.0;
  e[4] = (e[3] * p1 - e[2] * p2 + e[1] * p3 - p4) / 4.0;

  Eigen::Matrix4d companion = Eigen::Matrix4d::Zero();
  companion(0, 0) = e[1];
  companion(0, 1) = -e[2];
  companion(0, 2) = e[3];
  companion(0, 3) = -e[4];
  companion(1, 0) = companion(2, 1) = companion(3, 2) = 1.0;
  Eigen::EigenSolver<Eigen::Matrix4d> es(companion, false);
  std::array<std::complex<double>, 4> z;
  for (int k = 0; k < 4; ++k) z[static_cast<std::size_t>(k)] = es.eigenvalues()(k);

  // A root of multiplicity m splits by ~eps^(1/m) on the companion matrix.
  // Candidate clusters are formed at kCluster; a cluster whose spread exceeds
  // what its size allows is re-split at the pair threshold.
  constexpr double kCluster = 1e-3;
  constexpr double kImagTol = 1e-8;
  auto allowed_spread = [](int m) {
    return 30.0 * std::pow(std::numeric_limits<double>::epsilon(), 1.0 / m);
  };
  std::array<int, 4> label{0, 1, 2, 3};
  auto link = [&](double threshold, auto&& in_scope) {
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (in_scope(a) && in_scope(b) && label[a] != label[b] &&
            std::abs(z[a] - z[b]) < threshold) {
          const int from = label[b], to = label[a];
          for (int& l : label)
            if (l == from) l = to;
        }
  };
  link(kCluster, [](int) { return true; });
  for (int c = 0; c < 4; ++c) {
    int m = 0;
    double spread = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        if (label[a] == c && label[b] == c) spread = std::max(spread, std::abs(z[a] - z[b]));
    for (int a = 0; a < 4; ++a) m += label[a] == c;
    if (m < 2 || spread <= allowed_spread(m)) continue;
    std::array<bool, 4> member{};
    for (int a = 0; a < 4; ++a) {
      member[a] = label[a] == c;
      if (member[a]) label[a] = a;
    }
    link(allowed_spread(2), [&](int a) { return member[a]; });
  }

  std::array<double, 4> out{};
  for (int a = 0; a < 4; ++a) {
    std::complex<double> sum = 0;
    int count = 0;
    for (int b = 0; b < 4; ++b)
      if (label[b] == label[a]) {
        sum += z[b];
        ++count;
      }
    double x = (sum / static_cast<double>(count)).real();
    if (count == 1) {
      if (std::abs(z[a].imag()) > kImagTol)
        throw std::domain_error("trace moments are inconsistent with a Hermitian spectrum");
      for (int it = 0; it < 3; ++it) {
        const double d = char_poly_deriv(e, x);
        if (d == 0.0) break;
        const double nx = x - char_poly(e, x) / d;
        if (!std::isfinite(nx) || std::abs(nx - x) > kCluster) break;
        x = nx;
      }
    }
    out[static_cast<std::size_t>(a)] = std::clamp(x, -kPsdTol, 1.0);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace rfient
