// Copyright 2026 The Symgeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Report serialization. Key order is fixed, so two runs with the same
// configuration differ only in the elapsed_ms fields.

#ifndef SYMGEO_HARNESS_REPORT_HPP
#define SYMGEO_HARNESS_REPORT_HPP

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "symgeo/dyadic_mult.hpp"
#include "symgeo/harness/suite.hpp"

namespace symgeo::harness {

using json = nlohmann::ordered_json;

inline json to_json(const Gen::Bindings& bindings) {
  json out = json::object();
  for (const auto& [name, value] : bindings) out[name] = value;
  return out;
}

inline json to_json(const ModelConfig& c) {
  return json{{"dimension", c.dimension},
              {"coord_numerator_bound", c.coord_numerator_bound},
              {"coord_denominator_bound", c.coord_denominator_bound},
              {"cases_per_property", c.cases_per_property},
              {"seed", c.seed},
              {"degenerate_rate", c.degenerate_rate},
              {"mutant", std::string(to_string(c.mutant))},
              {"skip_redundant", c.skip_redundant}};
}

inline json to_json(const PropertyRecord& r) {
  json out{{"id", r.id},
           {"dim", r.dim},
           {"module", r.module},
           {"statement", r.statement},
           {"tags", r.tags},
           {"redundant", r.redundant},
           {"skipped", r.skipped},
           {"cases_run", r.cases_run},
           {"discarded", r.discarded},
           {"exhausted", r.exhausted},
           {"failures", r.failures}};
  if (r.first_counterexample) {
    const auto& c = *r.first_counterexample;
    out["first_counterexample"] = json{{"case_index", c.case_index},
                                       {"attempt", c.attempt},
                                       {"case_seed", c.case_seed},
                                       {"shrink_level", c.shrink_level},
                                       {"values", to_json(c.bindings)},
                                       {"message", c.message}};
  } else {
    out["first_counterexample"] = nullptr;
  }
  out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

inline json to_json(const SuiteReport& report) {
  json records = json::array();
  long run = 0, skipped = 0;
  for (const auto& r : report.records) {
    records.push_back(to_json(r));
    run += r.skipped ? 0 : 1;
    skipped += r.skipped ? 1 : 0;
  }
  json config = to_json(report.config);
  config.erase("dimension");
  std::vector<int> dims;
  for (const auto& r : report.records) {
    if (std::find(dims.begin(), dims.end(), r.dim) == dims.end()) dims.push_back(r.dim);
  }
  return json{{"schema", "symgeo.suite-report/1"},
              {"config", config},
              {"dimensions", dims},
              {"selection", report.selection},
              {"properties", records},
              {"summary", json{{"properties_run", run},
                               {"properties_skipped", skipped},
                               {"total_failures", report.total_failures()},
                               {"verdict", report.passed() ? "PASS" : "FAIL"}}},
              {"elapsed_ms", report.elapsed_ms}};
}

// Drops every elapsed_ms field, recursively.
inline json without_timing(json doc) {
  if (doc.is_object()) {
    doc.erase("elapsed_ms");
    for (auto& value : doc) value = without_timing(value);
  } else if (doc.is_array()) {
    for (auto& value : doc) value = without_timing(value);
  }
  return doc;
}

inline std::string to_text(const SuiteReport& report) {
  std::ostringstream os;
  for (const auto& r : report.records) {
    if (r.skipped) {
      os << "SKIP " << r.id << " d=" << r.dim << " (needs a plane)\n";
      continue;
    }
    os << (r.failures ? "FAIL " : "PASS ") << r.id << " d=" << r.dim << " cases=" << r.cases_run
       << " discarded=" << r.discarded << " failures=" << r.failures << " (" << std::fixed
       << std::setprecision(1) << r.elapsed_ms << " ms)\n";
    if (r.first_counterexample) {
      const auto& c = *r.first_counterexample;
      os << "  counterexample: case " << c.case_index << " seed " << c.case_seed << " shrink "
         << c.shrink_level << "\n";
      for (const auto& [name, value] : c.bindings) os << "    " << name << " = " << value << "\n";
      if (!c.message.empty()) os << "    error: " << c.message << "\n";
    }
  }
  os << (report.passed() ? "PASS" : "FAIL") << ": " << report.total_failures() << " failure(s) across "
     << report.records.size() << " record(s)\n";
  return os.str();
}

inline json to_json(const DyadicApproxTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    steps.push_back(json{{"depth", s.depth},
                         {"dyadic", s.dyadic.str()},
                         {"point", s.point.str()},
                         {"error_sq", s.error_sq.str()},
                         {"error_sq_approx", s.error_sq.to_double()}});
  }
  return json{{"lambda_target", trace.lambda_target.str()},
              {"steps", steps},
              {"final_error_sq", trace.final_error_sq.str()}};
}

// One row per depth: depth, dyadic, point, squared error (exact and approximate).
inline std::string to_text(const DyadicApproxTrace& trace) {
  std::ostringstream os;
  os << "depth\tdyadic\tpoint\terror_sq\terror_sq~\n";
  for (const auto& s : trace.steps) {
    os << s.depth << '\t' << s.dyadic << '\t' << s.point << '\t' << s.error_sq << '\t'
       << std::setprecision(6) << s.error_sq.to_double() << '\n';
  }
  os << "final_error_sq\t" << trace.final_error_sq << '\n';
  return os.str();
}

}  // namespace symgeo::harness

#endif  // SYMGEO_HARNESS_REPORT_HPP
