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

#include "rfient/serialize.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace rfient {

Json to_json(const Measured& m) { return {{"value", m.value}, {"sigma", m.sigma}}; }

namespace {

Json matrix_json(const Matrix4c& m) {
  Json rows = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 4; ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Json setting_json(const Setting& s) { return Json::array({s.i, s.j}); }

}  // namespace

Json to_json(const DensityMatrix& rho) { return {{"rho", matrix_json(rho.matrix())}}; }

Json to_json(const Reconstruction& r) {
  return {{"rho", matrix_json(r.matrix)},
          {"min_eigenvalue", r.min_eigenvalue},
          {"unphysical_flag", r.unphysical}};
}

Json to_json(const PauliTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.t) rows.push_back(row);
  return rows;
}

Json to_json(const MeasuredTable& t) {
  Json values = Json::array(), sigmas = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json v = Json::array(), s = Json::array();
    for (int j = 0; j < 4; ++j) {
      v.push_back(t(i, j).value);
      s.push_back(t(i, j).sigma);
    }
    values.push_back(std::move(v));
    sigmas.push_back(std::move(s));
  }
  return {{"pauli_table", values}, {"pauli_table_sigma", sigmas}};
}

Json to_json(const RfiReport& r) {
  const auto n = r.normalized();
  return {{"raw",
           {{"q1_a", r.q1_a}, {"q1_b", r.q1_b}, {"q2", r.q2}, {"q3", r.q3}, {"q4", r.q4},
            {"q5", r.q5}, {"g", r.g}, {"y", r.y}, {"z1", r.z1}, {"z2", r.z2}}},
          {"normalized", {{"q2", n.q2}, {"q3", n.q3}, {"q4", n.q4}, {"q5", n.q5}}}};
}

Json to_json(const MeasuredRfi& r) {
  auto norm = [](const Measured& m, double k) { return to_json(Measured{m.value / k, m.sigma / k}); };
  return {{"raw",
           {{"q1_a", to_json(r.q1_a)}, {"q1_b", to_json(r.q1_b)}, {"q2", to_json(r.q2)},
            {"q3", to_json(r.q3)}, {"q4", to_json(r.q4)}, {"q5", to_json(r.q5)},
            {"g", to_json(r.g)}, {"y", to_json(r.y)}, {"z1", to_json(r.z1)}, {"z2", to_json(r.z2)}}},
          {"normalized",
           {{"q2", norm(r.q2, kQ2Max)}, {"q3", norm(r.q3, kQ3Max)}, {"q4", norm(r.q4, kQ4Max)},
            {"q5", norm(r.q5, kQ5Max)}}}};
}

Json to_json(const ConcurrenceInterval& c) {
  return {{"lower", to_json(c.lower)}, {"upper", to_json(c.upper)}, {"upper_proven", c.upper_proven}};
}

Json to_json(const EntropyReport& e) {
  Json subset = Json::array();
  for (const auto& s : e.s2_upper_subset) subset.push_back(setting_json(s));
  return {{"s2", {{"value", e.s2.value}, {"sigma", e.s2.sigma}, {"source", "purity"}}},
          {"s2_upper_bound",
           {{"value", e.s2_upper.value},
            {"sigma", e.s2_upper.sigma},
            {"source", "largest_entries"},
            {"subset", subset}}},
          {"s1_lower_bound",
           {{"value", e.s1_lower.value},
            {"sigma", e.s1_lower.sigma},
            {"source", "mercator"},
            {"depth", e.mercator_depth}}}};
}

Json to_json(const AdaptiveResult& a) {
  Json settings = Json::array(), values = Json::array();
  for (const auto& s : a.settings) settings.push_back(setting_json(s));
  for (const auto& v : a.values) values.push_back(to_json(v));
  return {{"bound", to_json(a.bound)},
          {"settings", settings},
          {"values", values},
          {"verdict", std::string(to_string(a.verdict))},
          {"settings_to_verdict", a.settings_to_verdict}};
}

Json to_json(const Comparison& c) {
  Json rows = Json::array(), intervals = Json::array();
  for (const auto& r : c.rows)
    rows.push_back({{"name", r.name},
                    {"direct", to_json(r.direct)},
                    {"tomographic", r.tomographic},
                    {"difference", r.difference},
                    {"discrepancy_sigmas", r.discrepancy_sigmas}});
  for (const auto& r : c.intervals)
    intervals.push_back({{"name", r.name},
                         {"direct", to_json(r.direct)},
                         {"tomographic_concurrence", r.tomographic},
                         {"contains", r.contains}});
  return {{"rows", rows},
          {"intervals", intervals},
          {"projection_distance", c.projection_distance},
          {"linear_min_eigenvalue", c.linear_min_eigenvalue},
          {"unphysical_flag", c.linear_unphysical}};
}

Json to_json(const AnalysisReport& r) {
  Json j = to_json(r.table);
  j["rfi"] = to_json(r.rfi);
  j["purity"] = {{"total", to_json(r.purity)},
                 {"a", to_json(r.purity_a)},
                 {"b", to_json(r.purity_b)},
                 {"separability_verdict", std::string(to_string(r.purity_verdict))}};
  j["concurrence"] = {{"from_q2", to_json(r.c_from_q2)},
                      {"from_purities", to_json(r.c_from_purities)}};
  j["entropy"] = to_json(r.entropy);
  j["adaptive"] = r.has_adaptive ? to_json(r.adaptive) : Json();
  j["tomography"] = to_json(r.tomography);
  return j;
}

Json to_json(const SuiteCheck& c) {
  return {{"suite", c.suite},         {"name", c.name},
          {"passed", c.passed()},     {"proven", c.proven},
          {"max_residual", c.max_residual}, {"tolerance", c.tolerance},
          {"violations", c.violations}, {"samples", c.samples}};
}

Json to_json(const BoundTally& t) {
  return {{"samples", t.samples},
          {"concurrence_lower_bound", {{"violations", t.lower_violations},
                                       {"max_residual", t.lower_worst},
                                       {"proven", true}}},
          {"mems_envelope", {{"violations", t.envelope_violations},
                             {"max_residual", t.envelope_worst},
                             {"proven", false}}},
          {"purity_sandwich", {{"violations", t.sandwich_violations},
                               {"max_residual", t.sandwich_worst},
                               {"proven", true}}}};
}

DensityMatrix density_matrix_from_json(const Json& j) {
  const Json& rows = j.contains("rho") ? j.at("rho") : j;
  if (!rows.is_array() || rows.size() != 4) throw std::invalid_argument("rho must be 4x4");
  Matrix4c m;
  for (int i = 0; i < 4; ++i) {
    const Json& row = rows.at(static_cast<std::size_t>(i));
    if (!row.is_array() || row.size() != 4) throw std::invalid_argument("rho must be 4x4");
    for (int j2 = 0; j2 < 4; ++j2) {
      const Json& z = row.at(static_cast<std::size_t>(j2));
      if (!z.is_array() || z.size() != 2) throw std::invalid_argument("entries must be [re, im]");
      m(i, j2) = {z.at(0).get<double>(), z.at(1).get<double>()};
    }
  }
  return DensityMatrix::from_matrix(m);
}

PauliTable pauli_table_from_json(const Json& j) {
  const Json& rows = j.contains("pauli_table") ? j.at("pauli_table") : j;
  if (!rows.is_array() || rows.size() != 4) throw std::invalid_argument("table must be 4x4");
  PauliTable t;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 4) throw std::invalid_argument("table must be 4x4");
    for (std::size_t k = 0; k < 4; ++k) t.t[i][k] = rows[i][k].get<double>();
  }
  return t;
}

RecordError::RecordError(std::vector<std::string> problems)
    : std::runtime_error([&] {
        std::string msg = "invalid count data:";
        for (const auto& p : problems) msg += "\n  " + p;
        return msg;
      }()),
      problems_(std::move(problems)) {}

std::string records_to_json(const std::vector<CountRecord>& records) {
  Json arr = Json::array();
  for (const auto& r : records)
    arr.push_back({{"setting", setting_json(r.setting)}, {"counts", r.counts}, {"budget", r.budget}});
  return arr.dump(2) + "\n";
}

std::string records_to_csv(const std::vector<CountRecord>& records) {
  std::ostringstream os;
  os << "i,j,n_pp,n_pm,n_mp,n_mm\n";
  for (const auto& r : records)
    os << r.setting.i << ',' << r.setting.j << ',' << r.counts[0] << ',' << r.counts[1] << ','
       << r.counts[2] << ',' << r.counts[3] << '\n';
  return os.str();
}

std::string write_records(const std::vector<CountRecord>& records, CountFormat format) {
  return format == CountFormat::kJson ? records_to_json(records) : records_to_csv(records);
}

namespace {

void check_record(const CountRecord& r, std::size_t index, std::vector<std::string>& problems) {
  const std::string where = "record " + std::to_string(index) + ": ";
  if (!is_valid(r.setting))
    problems.push_back(where + "setting (" + std::to_string(r.setting.i) + "," +
                       std::to_string(r.setting.j) + ") outside 1..3");
  if (r.total() == 0) problems.push_back(where + "total count is zero");
}

constexpr const char* kCountNames[4] = {"n_pp", "n_pm", "n_mp", "n_mm"};

}  // namespace

std::vector<CountRecord> records_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw RecordError({std::string("unparseable JSON: ") + e.what()});
  }
  if (!doc.is_array()) throw RecordError({"count file must be a JSON array of records"});
  std::vector<CountRecord> out;
  std::vector<std::string> problems;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const Json& e = doc[k];
    const std::string where = "record " + std::to_string(k) + ": ";
    const std::size_t before = problems.size();
    CountRecord r;
    if (!e.is_object()) {
      problems.push_back(where + "not an object");
      continue;
    }
    const auto integer = [&](const Json& v, const std::string& what, std::int64_t& dst) {
      if (!v.is_number_integer()) {
        problems.push_back(where + what + " is not an integer");
        return false;
      }
      dst = v.get<std::int64_t>();
      return true;
    };
    if (!e.contains("setting") || !e["setting"].is_array() || e["setting"].size() != 2) {
      problems.push_back(where + "\"setting\" must be [i, j]");
    } else {
      std::int64_t i = 0, j = 0;
      if (integer(e["setting"][0], "setting i", i) && integer(e["setting"][1], "setting j", j))
        r.setting = {static_cast<int>(i), static_cast<int>(j)};
    }
    if (!e.contains("counts") || !e["counts"].is_array() || e["counts"].size() != 4) {
      problems.push_back(where + "\"counts\" must have four entries");
    } else {
      for (std::size_t c = 0; c < 4; ++c) {
        std::int64_t v = 0;
        if (!integer(e["counts"][c], kCountNames[c], v)) continue;
        if (v < 0)
          problems.push_back(where + "negative count " + kCountNames[c]);
        else
          r.counts[c] = static_cast<std::uint64_t>(v);
      }
    }
    if (e.contains("budget")) {
      std::int64_t b = 0;
      if (integer(e["budget"], "budget", b)) {
        if (b < 0)
          problems.push_back(where + "negative budget");
        else
          r.budget = static_cast<std::uint64_t>(b);
      }
    }
    if (problems.size() == before) check_record(r, k, problems);
    out.push_back(r);
  }
  if (!problems.empty()) throw RecordError(std::move(problems));
  return out;
}

std::vector<CountRecord> records_from_csv(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::vector<CountRecord> out;
  std::vector<std::string> problems;
  bool header = false;
  std::size_t index = 0;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header) {
      if (line != "i,j,n_pp,n_pm,n_mp,n_mm")
        throw RecordError({"CSV header must be i,j,n_pp,n_pm,n_mp,n_mm"});
      header = true;
      continue;
    }
    const std::string where = "record " + std::to_string(index) + ": ";
    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    const std::size_t before = problems.size();
    CountRecord r;
    if (fields.size() != 6) {
      problems.push_back(where + "expected 6 fields, got " + std::to_string(fields.size()));
    } else {
      std::int64_t v[6];
      for (std::size_t c = 0; c < 6; ++c) {
        const auto& s = fields[c];
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v[c]);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
          problems.push_back(where + "field " + std::to_string(c) + " is not an integer");
          v[c] = 0;
        }
      }
      r.setting = {static_cast<int>(v[0]), static_cast<int>(v[1])};
      for (std::size_t c = 0; c < 4; ++c) {
        if (v[c + 2] < 0)
          problems.push_back(where + "negative count " + kCountNames[c]);
        else
          r.counts[c] = static_cast<std::uint64_t>(v[c + 2]);
      }
    }
    if (problems.size() == before) check_record(r, index, problems);
    out.push_back(r);
    ++index;
  }
  if (!header) throw RecordError({"empty CSV"});
  if (!problems.empty()) throw RecordError(std::move(problems));
  return out;
}

std::vector<CountRecord> read_records(std::string_view text, CountFormat format) {
  return format == CountFormat::kJson ? records_from_json(text) : records_from_csv(text);
}

std::string scatter_to_csv(const std::vector<ScatterRow>& rows) {
  std::string out = "purity_band,purity,concurrence,q2,q3,q4,q5\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  std::string(purity_band_label(r.band)).c_str(), r.purity, r.concurrence,
                  r.normalized.q2, r.normalized.q3, r.normalized.q4, r.normalized.q5);
    out += buf;
  }
  return out;
}

Json scatter_to_json(const std::vector<ScatterRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows)
    arr.push_back({{"purity_band", std::string(purity_band_label(r.band))},
                   {"purity", r.purity},
                   {"concurrence", r.concurrence},
                   {"q2", r.normalized.q2},
                   {"q3", r.normalized.q3},
                   {"q4", r.normalized.q4},
                   {"q5", r.normalized.q5}});
  return arr;
}

}  // namespace rfient
