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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rfient/execution.hpp"
#include "rfient/state_algebra.hpp"

namespace rfient {

struct SuiteCheck {
  std::string suite;
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  // False for checks of conjectured (unproven) bounds.
  bool proven = true;

  bool passed() const { return violations == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::uint64_t identity_samples = 10000;
  std::uint64_t rotation_samples = 1000;
  std::uint64_t bound_samples = 100000;
  std::uint64_t entropy_samples = 10000;
  int mems_grid = 101;
  Execution exec = Execution::kParallel;
  // Replaceable for mutation testing.
  std::function<double(const PauliTable&)> q3;
};

enum class Suite { kStateAlgebra, kIdentities, kRotation, kBounds, kEntropy };

std::vector<SuiteCheck> run_suite(Suite suite, const VerifyOptions& options = {});
std::vector<SuiteCheck> run_all(const VerifyOptions& options = {});

bool all_passed(const std::vector<SuiteCheck>& checks);

}  // namespace rfient
