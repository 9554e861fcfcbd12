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

#include "rfient/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace rfient {

MeasurementOracle oracle_from_records(std::vector<CountRecord> records) {
  return [records = std::move(records)](const Setting& s) -> Measured {
    for (const auto& r : records)
      if (r.setting == s) return estimate_expectation(r);
    throw std::runtime_error("no record for requested setting");
  };
}

MeasurementOracle oracle_from_model(SourceModel model) {
  return [model = std::move(model)](const Setting& s) -> Measured {
    return estimate_expectation(simulate_counts(model, s));
  };
}

Eigen::Matrix3d bloch_rotation(const Matrix2c& u) {
  Eigen::Matrix3d r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = 0.5 * (pauli(i + 1) * u * pauli(j + 1) * u.adjoint()).trace().real();
  return r;
}

SchmidtFrameEnsemble::SchmidtFrameEnsemble(int count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("ensemble needs at least one hypothesis");
  static constexpr double kScales[4] = {1.0, 0.9, 0.8, 0.7};
  const Eigen::Matrix3d schmidt = Eigen::Vector3d(-1.0, 1.0, 1.0).asDiagonal();
  tensors_.resize(static_cast<std::size_t>(count));
  for (int h = 0; h < count; ++h) {
    Rng rng = make_stream(seed, static_cast<std::uint64_t>(h));
    const Eigen::Matrix3d ra = bloch_rotation(random_su2(rng));
    const Eigen::Matrix3d rb = bloch_rotation(random_su2(rng));
    const Eigen::Matrix3d t = kScales[h % 4] * ra * schmidt * rb.transpose();
    auto& flat = tensors_[static_cast<std::size_t>(h)];
    for (int k = 0; k < 9; ++k) flat[static_cast<std::size_t>(k)] = t(k / 3, k % 3);
  }
}

std::array<double, 9> SchmidtFrameEnsemble::predict(std::span<const Setting> settings,
                                                    std::span<const Measured> values,
                                                    double width, Execution exec) const {
  if (settings.size() != values.size()) throw std::invalid_argument("settings/values mismatch");
  std::vector<int> idx;
  std::vector<double> obs, inv_var;
  for (std::size_t k = 0; k < settings.size(); ++k) {
    idx.push_back(setting_index(settings[k]));
    obs.push_back(values[k].value);
    inv_var.push_back(1.0 / (values[k].sigma * values[k].sigma + width * width));
  }
  const long n = static_cast<long>(tensors_.size());
  std::vector<double> logw(tensors_.size());

  const auto loglik = [&](long h) {
    const auto& t = tensors_[static_cast<std::size_t>(h)];
    double s = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const double d = t[static_cast<std::size_t>(idx[k])] - obs[k];
      s -= 0.5 * d * d * inv_var[k];
    }
    return s;
  };

  double max_logw = -std::numeric_limits<double>::infinity();
  if (exec == Execution::kParallel) {
#pragma omp parallel for reduction(max : max_logw) schedule(static)
    for (long h = 0; h < n; ++h) {
      logw[static_cast<std::size_t>(h)] = loglik(h);
      max_logw = std::max(max_logw, logw[static_cast<std::size_t>(h)]);
    }
  } else {
    for (long h = 0; h < n; ++h) {
      logw[static_cast<std::size_t>(h)] = loglik(h);
      max_logw = std::max(max_logw, logw[static_cast<std::size_t>(h)]);
    }
  }

  // Fixed-order accumulation keeps serial and parallel results identical.
  std::array<double, 9> acc{};
  double total = 0;
  for (long h = 0; h < n; ++h) {
    const double w = std::exp(logw[static_cast<std::size_t>(h)] - max_logw);
    total += w;
    const auto& t = tensors_[static_cast<std::size_t>(h)];
    for (std::size_t k = 0; k < 9; ++k) acc[k] += w * std::abs(t[k]);
  }
  for (double& a : acc) a /= total;
  return acc;
}

AdaptiveResult adaptive_q2_bound(const MeasurementOracle& oracle, const AdaptiveOptions& options) {
  const SchmidtFrameEnsemble ensemble(options.hypotheses, options.ensemble_seed);
  return adaptive_q2_bound(oracle, ensemble, options);
}

AdaptiveResult adaptive_q2_bound(const MeasurementOracle& oracle,
                                 const SchmidtFrameEnsemble& ensemble,
                                 const AdaptiveOptions& options) {
  if (options.max_settings < 1 || options.max_settings > 9)
    throw std::invalid_argument("max_settings must be in 1..9");
  AdaptiveResult res;
  std::array<bool, 9> used{};
  double sum = 0, var = 0;

  const auto pick_best = [&](std::span<const Setting> candidates) {
    const auto pred = ensemble.predict(res.settings, res.values, options.kernel_width, options.exec);
    Setting best = candidates.front();
    double best_v = -1;
    for (const auto& c : candidates) {
      const double v = pred[static_cast<std::size_t>(setting_index(c))];
      if (v > best_v) {
        best_v = v;
        best = c;
      }
    }
    return best;
  };

  while (static_cast<int>(res.settings.size()) < options.max_settings) {
    const std::size_t step = res.settings.size();
    Setting next;
    if (step == 0) {
      next = {3, 3};
    } else if (step == 1) {
      next = {1, 1};
    } else if (step == 2) {
      // Candidates in ascending setting index so ties go to the lowest.
      static constexpr Setting kThird[3] = {{1, 2}, {2, 1}, {2, 2}};
      next = pick_best(kThird);
    } else {
      std::vector<Setting> remaining;
      for (int k = 0; k < 9; ++k)
        if (!used[static_cast<std::size_t>(k)]) remaining.push_back(setting_from_index(k));
      next = pick_best(remaining);
    }
    const Measured m = oracle(next);
    used[static_cast<std::size_t>(setting_index(next))] = true;
    res.settings.push_back(next);
    res.values.push_back(m);
    sum += m.value * m.value;
    var += 4 * m.value * m.value * m.sigma * m.sigma;
    res.bound = {sum, std::sqrt(var)};

    const int n = static_cast<int>(res.settings.size());
    if (n >= options.min_settings && res.bound.value - options.z * res.bound.sigma > 1.0) {
      res.verdict = Verdict::kEntangled;
      res.settings_to_verdict = n;
      break;
    }
  }
  return res;
}

}  // namespace rfient
