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

#include "rfient/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "rfient/bounds.hpp"

namespace rfient {

std::string_view to_string(Ensemble e) {
  switch (e) {
    case Ensemble::kGinibre: return "ginibre";
    case Ensemble::kPure: return "pure";
    case Ensemble::kProduct: return "product";
    case Ensemble::kSeparable: return "separable";
  }
  return "?";
}

std::optional<Ensemble> parse_ensemble(std::string_view name) {
  for (Ensemble e : {Ensemble::kGinibre, Ensemble::kPure, Ensemble::kProduct, Ensemble::kSeparable})
    if (to_string(e) == name) return e;
  return std::nullopt;
}

DensityMatrix sample_state(Ensemble e, std::uint64_t seed, std::uint64_t index) {
  Rng rng = make_stream(seed, index);
  switch (e) {
    case Ensemble::kGinibre: {
      std::uniform_int_distribution<int> rank(1, 4);
      const int k = rank(rng);
      return random_state(rng, k);
    }
    case Ensemble::kPure: return random_state(rng, 1);
    case Ensemble::kProduct: return random_product_state(rng);
    case Ensemble::kSeparable: return random_separable_state(rng, 16);
  }
  return maximally_mixed();
}

int purity_band(double purity) {
  if (purity <= 0.5) return 0;
  const int b = static_cast<int>(std::ceil((purity - 0.5) * 10.0 - 1e-12));
  return std::clamp(b, 1, kPurityBands - 1);
}

std::string_view purity_band_label(int band) {
  static constexpr std::string_view kLabels[kPurityBands] = {
      "<=0.5", "0.5-0.6", "0.6-0.7", "0.7-0.8", "0.8-0.9", ">0.9"};
  return kLabels[std::clamp(band, 0, kPurityBands - 1)];
}

ScatterRow scatter_row(const DensityMatrix& rho) {
  const PauliTable t = pauli_table(rho);
  const RfiReport r = rfi_report(t);
  ScatterRow row;
  row.purity = trace_moment(rho, 2);
  row.purity_a = 0.5 * (1.0 + r.q1_a);
  row.purity_b = 0.5 * (1.0 + r.q1_b);
  row.band = purity_band(row.purity);
  row.concurrence = concurrence(rho);
  row.q2 = r.q2;
  row.normalized = r.normalized();
  return row;
}

std::vector<ScatterRow> scatter(Ensemble e, std::uint64_t seed, std::uint64_t count,
                                Execution exec) {
  std::vector<ScatterRow> rows(count);
  const auto n = static_cast<std::int64_t>(count);
  if (exec == Execution::kSerial) {
    for (std::int64_t k = 0; k < n; ++k)
      rows[static_cast<std::size_t>(k)] = scatter_row(sample_state(e, seed, static_cast<std::uint64_t>(k)));
  } else {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t k = 0; k < n; ++k)
      rows[static_cast<std::size_t>(k)] = scatter_row(sample_state(e, seed, static_cast<std::uint64_t>(k)));
  }
  return rows;
}

Reduction reduce_residuals(std::uint64_t count, double tol,
                           const std::function<double(std::uint64_t)>& residual,
                           Execution exec) {
  const auto n = static_cast<std::int64_t>(count);
  std::uint64_t violations = 0;
  double worst = 0.0;
  if (exec == Execution::kSerial) {
    for (std::int64_t k = 0; k < n; ++k) {
      const double r = residual(static_cast<std::uint64_t>(k));
      if (!(r <= tol)) ++violations;
      worst = std::max(worst, std::isnan(r) ? INFINITY : r);
    }
  } else {
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : violations) reduction(max : worst)
    for (std::int64_t k = 0; k < n; ++k) {
      const double r = residual(static_cast<std::uint64_t>(k));
      if (!(r <= tol)) ++violations;
      worst = std::max(worst, std::isnan(r) ? INFINITY : r);
    }
  }
  return {count, violations, worst};
}

double lower_bound_residual(double q2, double c) { return (q2 - 1.0) / 2.0 - c * c; }

double envelope_residual(double q2, double c) { return q2_lower_envelope(c) - q2; }

double sandwich_residual(double purity, double purity_a, double purity_b, double c) {
  const double lo2 = 2.0 * (purity - std::min(purity_a, purity_b));
  const double up2 = 2.0 * (1.0 - std::max(purity_a, purity_b));
  return std::max(lo2 - c * c, c * c - up2);
}

BoundTally tally_bounds(std::span<const ScatterRow> rows) {
  BoundTally t;
  t.samples = rows.size();
  for (const auto& r : rows) {
    const double lo = lower_bound_residual(r.q2, r.concurrence);
    const double env = envelope_residual(r.q2, r.concurrence);
    const double sw = sandwich_residual(r.purity, r.purity_a, r.purity_b, r.concurrence);
    if (lo > kBoundTol) ++t.lower_violations;
    if (env > kBoundTol) ++t.envelope_violations;
    if (sw > kBoundTol) ++t.sandwich_violations;
    t.lower_worst = std::max(t.lower_worst, lo);
    t.envelope_worst = std::max(t.envelope_worst, env);
    t.sandwich_worst = std::max(t.sandwich_worst, sw);
  }
  return t;
}

}  // namespace rfient
