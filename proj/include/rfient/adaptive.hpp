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

// Adaptive few-setting lower bound on Q2.
//
// Settings are chosen one at a time: (3,3), then (1,1), then whichever of
// (2,2), (2,1), (1,2) is predicted to have the largest |correlation|, then
// the remaining settings in order of predicted magnitude. Predictions come
// from an ensemble of locally rotated maximally entangled correlation tensors
// weighted by how well they reproduce the entries measured so far.

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rfient/bounds.hpp"
#include "rfient/execution.hpp"
#include "rfient/measured.hpp"
#include "rfient/measurement.hpp"

namespace rfient {

using MeasurementOracle = std::function<Measured(const Setting&)>;

MeasurementOracle oracle_from_records(std::vector<CountRecord> records);
// Simulates counts for each requested setting.
MeasurementOracle oracle_from_model(SourceModel model);

// 3x3 SO(3) image of a qubit unitary: R_ij = tr(sigma_i U sigma_j U^dag)/2.
Eigen::Matrix3d bloch_rotation(const Matrix2c& u);

class SchmidtFrameEnsemble {
 public:
  SchmidtFrameEnsemble(int count, std::uint64_t seed);

  // Posterior mean of |t(i,j)| for all nine settings (row-major) given the
  // measured entries. Gaussian likelihood with variance sigma^2 + width^2.
  std::array<double, 9> predict(std::span<const Setting> settings,
                                std::span<const Measured> values, double width,
                                Execution exec = Execution::kParallel) const;

  std::size_t size() const { return tensors_.size(); }

 private:
  std::vector<std::array<double, 9>> tensors_;
};

struct AdaptiveOptions {
  int max_settings = 9;
  int min_settings = 3;
  double z = 3.0;
  int hypotheses = 4096;
  std::uint64_t ensemble_seed = 0x5c4d1d7aULL;
  double kernel_width = 0.05;
  Execution exec = Execution::kParallel;
};

struct AdaptiveResult {
  // Running sum of t(i,j)^2 over measured settings.
  Measured bound;
  std::vector<Setting> settings;
  std::vector<Measured> values;
  Verdict verdict = Verdict::kInconclusive;
  // Number of settings at which the verdict was reached, 0 if never.
  int settings_to_verdict = 0;
};

AdaptiveResult adaptive_q2_bound(const MeasurementOracle& oracle,
                                 const AdaptiveOptions& options = {});
AdaptiveResult adaptive_q2_bound(const MeasurementOracle& oracle,
                                 const SchmidtFrameEnsemble& ensemble,
                                 const AdaptiveOptions& options);

}  // namespace rfient
