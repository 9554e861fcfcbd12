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

#include "rfient/analysis.hpp"

#include <stdexcept>

#include "rfient/entropy.hpp"
#include "rfient/rfi_quantities.hpp"

namespace rfient {

namespace {

double marginal_purity(const PauliTable& t, bool a) {
  double r2 = 0.0;
  for (int k = 1; k < 4; ++k) {
    const double v = a ? t(k, 0) : t(0, k);
    r2 += v * v;
  }
  return 0.5 * (1.0 + r2);
}

}  // namespace

MeasuredRfi measured_rfi(const MeasuredTable& table) {
  auto p = [&](double (*f)(const PauliTable&)) {
    return propagate([f](const PauliTable& t) { return f(t); }, table);
  };
  return {p(q1_a), p(q1_b), p(q2), p(q3), p(q4), p(q5), p(g), p(y), p(z1), p(z2)};
}

AnalysisReport analyze(std::span<const CountRecord> records, const AnalysisOptions& options) {
  if (options.mercator_depth < 1 || options.mercator_depth + 1 > kMaxMomentOrder)
    throw std::invalid_argument("Mercator depth must be in 1.." +
                                std::to_string(kMaxMomentOrder - 1));
  AnalysisReport r;
  r.table = estimate_table(records);
  r.rfi = measured_rfi(r.table);

  r.purity = propagate([](const PauliTable& t) { return purity_from_table(t); }, r.table);
  r.purity_a = propagate([](const PauliTable& t) { return marginal_purity(t, true); }, r.table);
  r.purity_b = propagate([](const PauliTable& t) { return marginal_purity(t, false); }, r.table);
  r.purity_verdict = purity_separability_test(r.purity, r.purity_a, r.purity_b, options.z);

  r.c_from_q2 = concurrence_interval_from_q2(r.rfi.q2);
  r.c_from_purities = concurrence_interval_from_purities(r.purity, r.purity_a, r.purity_b);

  EntropyReport& e = r.entropy;
  e.s2 = propagate([](const PauliTable& t) { return s2_from_purity(purity_from_table(t)); },
                   r.table);
  const auto top = largest_entries(r.table.values(), 4);
  for (const auto& sv : top) e.s2_upper_subset.push_back({sv.i, sv.j});
  e.s2_upper = propagate(
      [&](const PauliTable& t) {
        std::vector<SettingValue> sub;
        for (const auto& s : e.s2_upper_subset) sub.push_back({s.i, s.j, t(s.i, s.j)});
        return s2_upper_bound(sub);
      },
      r.table);
  e.mercator_depth = options.mercator_depth;
  const int depth = options.mercator_depth;
  e.s1_lower = propagate(
      [depth](const PauliTable& t) {
        return mercator_lower_bound(trace_moments_from_table(t, depth + 1), depth);
      },
      r.table);

  if (options.run_adaptive) {
    AdaptiveOptions ao = options.adaptive;
    ao.z = options.z;
    r.adaptive = adaptive_q2_bound(
        oracle_from_records(std::vector<CountRecord>(records.begin(), records.end())), ao);
    r.has_adaptive = true;
  }

  r.tomography = compare_direct_vs_tomography(r.table);
  return r;
}

}  // namespace rfient
