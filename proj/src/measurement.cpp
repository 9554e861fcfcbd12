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

#include "rfient/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rfient {

bool is_valid(const Setting& s) { return s.i >= 1 && s.i <= 3 && s.j >= 1 && s.j <= 3; }

int setting_index(const Setting& s) {
  if (!is_valid(s)) throw std::invalid_argument("setting indices must be in 1..3");
  return 3 * (s.i - 1) + (s.j - 1);
}

Setting setting_from_index(int index) {
  if (index < 0 || index > 8) throw std::out_of_range("setting index must be in 0..8");
  return {index / 3 + 1, index % 3 + 1};
}

std::array<double, 4> outcome_probabilities(const DensityMatrix& rho, const Setting& s) {
  if (!is_valid(s)) throw std::invalid_argument("setting indices must be in 1..3");
  const Matrix2c id = Matrix2c::Identity();
  const Matrix2c pa[2] = {0.5 * (id + pauli(s.i)), 0.5 * (id - pauli(s.i))};
  const Matrix2c pb[2] = {0.5 * (id + pauli(s.j)), 0.5 * (id - pauli(s.j))};
  std::array<double, 4> p{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      p[static_cast<std::size_t>(2 * a + b)] =
          std::max(0.0, (kron(pa[a], pb[b]) * rho.matrix()).trace().real());
  return p;
}

CountRecord simulate_counts(const SourceModel& model, const Setting& s) {
  const DensityMatrix rho = apply_rotation(model.target, model.rotation);
  const auto p = outcome_probabilities(rho, s);
  Rng rng = make_stream(model.seed, static_cast<std::uint64_t>(setting_index(s)));
  CountRecord r;
  r.setting = s;
  r.budget = model.pairs_per_setting;
  for (std::size_t k = 0; k < 4; ++k) {
    const double mean = static_cast<double>(model.pairs_per_setting) * p[k];
    if (mean <= 1e-300) continue;
    std::poisson_distribution<std::uint64_t> dist(mean);
    r.counts[k] = dist(rng);
  }
  return r;
}

std::vector<CountRecord> simulate_all(const SourceModel& model) {
  std::vector<CountRecord> out;
  out.reserve(9);
  for (int k = 0; k < 9; ++k) out.push_back(simulate_counts(model, setting_from_index(k)));
  return out;
}

namespace {

// sum s_k n_k / N with Poisson first-order propagation:
// d/dn_k = (s_k - E)/N, var = sum (s_k - E)^2 n_k / N^2.
Measured signed_ratio(const CountRecord& r, const std::array<int, 4>& sign) {
  const double n = static_cast<double>(r.total());
  if (n <= 0) throw std::invalid_argument("record has no counts");
  double num = 0;
  for (std::size_t k = 0; k < 4; ++k) num += sign[k] * static_cast<double>(r.counts[k]);
  const double e = num / n;
  double var = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const double d = (sign[k] - e) / n;
    var += d * d * static_cast<double>(r.counts[k]);
  }
  return {e, std::sqrt(var)};
}

}  // namespace

Measured estimate_expectation(const CountRecord& r) { return signed_ratio(r, {1, -1, -1, 1}); }

Measured estimate_marginal(const CountRecord& r, Subsystem which) {
  return which == Subsystem::A ? signed_ratio(r, {1, 1, -1, -1}) : signed_ratio(r, {1, -1, 1, -1});
}

PauliTable MeasuredTable::values() const {
  PauliTable out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = t[i][j].value;
  return out;
}

MeasuredTable MeasuredTable::exact(const PauliTable& table) {
  MeasuredTable out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = Measured::exact(table(i, j));
  return out;
}

MeasuredTable estimate_table(std::span<const CountRecord> records) {
  std::array<const CountRecord*, 9> by_setting{};
  for (std::size_t n = 0; n < records.size(); ++n) {
    const auto& r = records[n];
    if (!is_valid(r.setting))
      throw std::invalid_argument("record " + std::to_string(n) + ": invalid setting");
    auto& slot = by_setting[static_cast<std::size_t>(setting_index(r.setting))];
    if (slot) throw std::invalid_argument("record " + std::to_string(n) + ": duplicate setting");
    slot = &r;
  }
  for (int k = 0; k < 9; ++k)
    if (!by_setting[static_cast<std::size_t>(k)]) {
      const Setting s = setting_from_index(k);
      throw std::invalid_argument("missing setting (" + std::to_string(s.i) + "," +
                                  std::to_string(s.j) + ")");
    }
  const auto rec = [&](int i, int j) -> const CountRecord& {
    return *by_setting[static_cast<std::size_t>(setting_index({i, j}))];
  };

  MeasuredTable out;
  out(0, 0) = Measured::exact(1.0);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) out(i, j) = estimate_expectation(rec(i, j));

  for (int a = 1; a <= 3; ++a) {
    double va = 0, vara = 0, vb = 0, varb = 0;
    for (int o = 1; o <= 3; ++o) {
      const Measured ma = estimate_marginal(rec(a, o), Subsystem::A);
      const Measured mb = estimate_marginal(rec(o, a), Subsystem::B);
      va += ma.value;
      vara += ma.sigma * ma.sigma;
      vb += mb.value;
      varb += mb.sigma * mb.sigma;
    }
    out(a, 0) = {va / 3, std::sqrt(vara) / 3};
    out(0, a) = {vb / 3, std::sqrt(varb) / 3};
  }
  return out;
}

Measured propagate(const TableFunction& f, const MeasuredTable& table, double step) {
  const PauliTable base = table.values();
  const double value = f(base);
  if (!std::isfinite(value)) throw std::domain_error("propagate: function value is not finite");
  double var = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double sigma = table(i, j).sigma;
      if (sigma == 0.0) continue;
      PauliTable up = base, down = base;
      up(i, j) += step;
      down(i, j) -= step;
      const double d = (f(up) - f(down)) / (2 * step);
      if (!std::isfinite(d)) throw std::domain_error("propagate: non-finite gradient");
      var += d * d * sigma * sigma;
    }
  return {value, std::sqrt(var)};
}

}  // namespace rfient
