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

// Suite execution: run each selected property over its generated cases,
// shrink the first failure, and collect the results into a SuiteReport.

#ifndef SYMGEO_HARNESS_SUITE_HPP
#define SYMGEO_HARNESS_SUITE_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symgeo/harness/registry.hpp"

namespace symgeo::harness {

inline constexpr int kMaxAttempts = 64;      // regenerations per case before giving up
inline constexpr unsigned kMaxShrink = 8;    // numerators halved up to 2^8 times

enum class Outcome { kPass, kFail, kDiscard };

struct CaseResult {
  Outcome outcome = Outcome::kPass;
  Gen::Bindings bindings;
  std::string message;
};

struct Counterexample {
  long case_index = 0;
  int attempt = 0;
  std::uint64_t case_seed = 0;
  unsigned shrink_level = 0;
  Gen::Bindings bindings;
  std::string message;
};

struct PropertyRecord {
  std::string id;
  std::string statement;
  std::string module;
  std::vector<std::string> tags;
  int dim = 0;
  bool redundant = false;
  bool skipped = false;
  long cases_run = 0;
  long discarded = 0;  // attempts rejected by the hypothesis
  long exhausted = 0;  // cases with no accepted attempt
  long failures = 0;
  std::optional<Counterexample> first_counterexample;
  double elapsed_ms = 0;
};

struct SuiteReport {
  ModelConfig config;
  std::vector<std::string> selection;
  std::vector<PropertyRecord> records;
  double elapsed_ms = 0;

  long total_failures() const {
    long n = 0;
    for (const auto& r : records) n += r.failures;
    return n;
  }
  bool passed() const { return total_failures() == 0; }

  const PropertyRecord* find(const std::string& id, int dim) const {
    for (const auto& r : records) {
      if (r.id == id && r.dim == dim) return &r;
    }
    return nullptr;
  }
};

inline CaseResult evaluate(const Property& property, const ModelConfig& config, std::uint64_t seed,
                           unsigned shrink) {
  Gen g(config, seed, shrink);
  CaseResult result;
  try {
    result.outcome = property.check(g) ? Outcome::kPass : Outcome::kFail;
  } catch (const Discard&) {
    result.outcome = Outcome::kDiscard;
  } catch (const ModelError& e) {
    result.outcome = Outcome::kFail;
    result.message = e.what();
  }
  result.bindings = g.bindings();
  return result;
}

// Re-runs the failing case at increasing shrink levels and keeps the most
// shrunk one that still fails. The generator is re-run rather than its output
// edited, so constructed hypotheses stay intact.
inline Counterexample shrink_failure(const Property& property, const ModelConfig& config,
                                     Counterexample found) {
  for (unsigned level = 1; level <= kMaxShrink; ++level) {
    CaseResult r = evaluate(property, config, found.case_seed, level);
    if (r.outcome == Outcome::kFail) {
      found.shrink_level = level;
      found.bindings = std::move(r.bindings);
      found.message = std::move(r.message);
    }
  }
  return found;
}

inline PropertyRecord run_property(const Property& property, const ModelConfig& config) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  PropertyRecord rec;
  rec.id = property.id;
  rec.statement = property.statement;
  rec.module = property.module;
  rec.tags = property.tags;
  rec.dim = config.dimension;
  rec.redundant = property.redundant;
  if (config.dimension < property.min_dim) {
    rec.skipped = true;
    return rec;
  }
  for (long i = 0; i < config.cases_per_property; ++i) {
    bool accepted = false;
    for (int attempt = 0; attempt < kMaxAttempts && !accepted; ++attempt) {
      const std::uint64_t seed = case_seed(config.seed, property.id, config.dimension, i, attempt);
      CaseResult r = evaluate(property, config, seed, 0);
      if (r.outcome == Outcome::kDiscard) {
        ++rec.discarded;
        continue;
      }
      accepted = true;
      ++rec.cases_run;
      if (r.outcome == Outcome::kFail) {
        ++rec.failures;
        if (!rec.first_counterexample) {
          rec.first_counterexample = shrink_failure(
              property, config, Counterexample{i, attempt, seed, 0, std::move(r.bindings), std::move(r.message)});
        }
      }
    }
    if (!accepted) ++rec.exhausted;
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
  return rec;
}

namespace detail {

template <ModelBinding M>
const std::vector<Property>& registry_for() {
  static const std::vector<Property> registry = axiom_registry<M>();
  return registry;
}

inline void check_selection(const std::vector<Property>& registry,
                            const std::vector<std::string>& selection) {
  for (const auto& s : selection) {
    bool known = false;
    for (const auto& p : registry) known = known || selects(s, p.id);
    if (!known) throw ModelError("known_property", "unknown property id '" + s + "'");
  }
}

inline const Property& find_property(const std::vector<Property>& registry, const std::string& id) {
  for (const auto& p : registry) {
    if (p.id == id) return p;
  }
  throw ModelError("known_property", "unknown property id '" + id + "'");
}

template <ModelBinding M>
SuiteReport run_suite_with(const ModelConfig& config, const std::vector<std::string>& selection) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const auto& registry = registry_for<M>();
  check_selection(registry, selection);
  SuiteReport report{config, selection, {}, 0};
  for (const auto& property : registry) {
    bool chosen = false;
    for (const auto& s : selection) chosen = chosen || selects(s, property.id);
    if (!chosen || (config.skip_redundant && property.redundant)) continue;
    report.records.push_back(run_property(property, config));
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
  return report;
}

template <class F>
decltype(auto) with_model(Mutant mutant, F&& f) {
  switch (mutant) {
    case Mutant::kL1Metric: return f(TaxicabMetric{});
    case Mutant::kXOnlyEquiv: return f(FirstCoordinateEquivalence{});
    case Mutant::kNone: break;
  }
  return f(Euclidean{});
}

}  // namespace detail

// Runs the selected properties ("ALL", ids, or group prefixes) under the
// binding chosen by config.mutant, in config.dimension.
inline SuiteReport run_suite(const ModelConfig& config, const std::vector<std::string>& selection) {
  config.validate();
  return detail::with_model(config.mutant, [&](auto model) {
    return detail::run_suite_with<decltype(model)>(config, selection);
  });
}

// Concatenates per-dimension reports into one.
inline SuiteReport merge(std::vector<SuiteReport> parts) {
  SuiteReport out = parts.empty() ? SuiteReport{} : parts.front();
  out.records.clear();
  out.elapsed_ms = 0;
  for (auto& part : parts) {
    out.elapsed_ms += part.elapsed_ms;
    for (auto& r : part.records) out.records.push_back(std::move(r));
  }
  return out;
}

inline SuiteReport run_suite(ModelConfig config, const std::vector<int>& dimensions,
                             const std::vector<std::string>& selection) {
  std::vector<SuiteReport> parts;
  for (int d : dimensions) {
    config.dimension = d;
    parts.push_back(run_suite(config, selection));
  }
  return merge(std::move(parts));
}

// Regenerates and re-checks one case from its seed.
inline CaseResult replay(const ModelConfig& config, const std::string& property_id,
                         std::uint64_t seed, unsigned shrink) {
  config.validate();
  return detail::with_model(config.mutant, [&](auto model) {
    const auto& registry = detail::registry_for<decltype(model)>();
    return evaluate(detail::find_property(registry, property_id), config, seed, shrink);
  });
}

// The first `count` accepted cases of a property, as recorded bindings.
inline std::vector<Gen::Bindings> generate(const ModelConfig& config, const std::string& property_id,
                                           long count) {
  config.validate();
  return detail::with_model(config.mutant, [&](auto model) {
    const auto& property = detail::find_property(detail::registry_for<decltype(model)>(), property_id);
    std::vector<Gen::Bindings> cases;
    for (long i = 0; i < count; ++i) {
      for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        CaseResult r = evaluate(property, config, case_seed(config.seed, property_id, config.dimension, i, attempt), 0);
        if (r.outcome == Outcome::kDiscard) continue;
        cases.push_back(std::move(r.bindings));
        break;
      }
    }
    return cases;
  });
}

inline std::vector<std::string> registered_ids() {
  std::vector<std::string> ids;
  for (const auto& p : detail::registry_for<Euclidean>()) ids.push_back(p.id);
  return ids;
}

}  // namespace symgeo::harness

#endif  // SYMGEO_HARNESS_SUITE_HPP
