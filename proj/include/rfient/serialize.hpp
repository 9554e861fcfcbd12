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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rfient/analysis.hpp"
#include "rfient/bounds.hpp"
#include "rfient/measurement.hpp"
#include "rfient/montecarlo.hpp"
#include "rfient/rfi_quantities.hpp"
#include "rfient/state_algebra.hpp"
#include "rfient/tomography.hpp"
#include "rfient/verify.hpp"

namespace rfient {

using Json = nlohmann::ordered_json;

Json to_json(const Measured& m);
Json to_json(const DensityMatrix& rho);
Json to_json(const Reconstruction& r);
Json to_json(const PauliTable& t);
Json to_json(const MeasuredTable& t);
Json to_json(const RfiReport& r);
Json to_json(const MeasuredRfi& r);
Json to_json(const ConcurrenceInterval& c);
Json to_json(const EntropyReport& e);
Json to_json(const AdaptiveResult& a);
Json to_json(const Comparison& c);
Json to_json(const AnalysisReport& r);
Json to_json(const SuiteCheck& c);
Json to_json(const BoundTally& t);

// Inverse of to_json(DensityMatrix); validates physicality.
DensityMatrix density_matrix_from_json(const Json& j);
PauliTable pauli_table_from_json(const Json& j);

// Raised when a count file fails validation; one entry per offending record.
class RecordError : public std::runtime_error {
 public:
  explicit RecordError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

enum class CountFormat { kJson, kCsv };

std::string records_to_json(const std::vector<CountRecord>& records);
std::string records_to_csv(const std::vector<CountRecord>& records);
std::string write_records(const std::vector<CountRecord>& records, CountFormat format);

std::vector<CountRecord> records_from_json(std::string_view text);
std::vector<CountRecord> records_from_csv(std::string_view text);
std::vector<CountRecord> read_records(std::string_view text, CountFormat format);

std::string scatter_to_csv(const std::vector<ScatterRow>& rows);
Json scatter_to_json(const std::vector<ScatterRow>& rows);

}  // namespace rfient
