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

#include <span>
#include <vector>

#include "rfient/adaptive.hpp"
#include "rfient/bounds.hpp"
#include "rfient/measured.hpp"
#include "rfient/measurement.hpp"
#include "rfient/tomography.hpp"

namespace rfient {

struct MeasuredRfi {
  Measured q1_a, q1_b, q2, q3, q4, q5, g, y, z1, z2;
};

MeasuredRfi measured_rfi(const MeasuredTable& table);

struct EntropyReport {
  // S2 = -ln tr(rho^2) from the measured purity.
  Measured s2;
  // Upper bound on S2 from the four largest |<sigma_i sigma_j>|; the subset
  // is recorded as (i, j) pairs.
  Measured s2_upper;
  std::vector<Setting> s2_upper_subset;
  // Truncated-series lower bound on S1 from trace moments of the table.
  Measured s1_lower;
  int mercator_depth = 3;
};

struct AnalysisOptions {
  double z = 3.0;
  int mercator_depth = 3;
  bool run_adaptive = true;
  AdaptiveOptions adaptive;
};

struct AnalysisReport {
  MeasuredTable table;
  MeasuredRfi rfi;
  Measured purity, purity_a, purity_b;
  Verdict purity_verdict = Verdict::kInconclusive;
  ConcurrenceInterval c_from_q2;
  ConcurrenceInterval c_from_purities;
  EntropyReport entropy;
  bool has_adaptive = false;
  AdaptiveResult adaptive;
  Comparison tomography;
};

// Throws std::invalid_argument on malformed records and std::domain_error when
// a measured value is outside the range where the bounds apply.
AnalysisReport analyze(std::span<const CountRecord> records, const AnalysisOptions& options = {});

}  // namespace rfient
