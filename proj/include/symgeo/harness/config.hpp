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

#ifndef SYMGEO_HARNESS_CONFIG_HPP
#define SYMGEO_HARNESS_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "symgeo/coords.hpp"
#include "symgeo/errors.hpp"

namespace symgeo::harness {

enum class Mutant { kNone, kL1Metric, kXOnlyEquiv };

inline std::string_view to_string(Mutant m) {
  switch (m) {
    case Mutant::kNone: return "NONE";
    case Mutant::kL1Metric: return "L1_METRIC";
    case Mutant::kXOnlyEquiv: return "X_ONLY_EQUIV";
  }
  return "?";
}

inline std::optional<Mutant> parse_mutant(std::string_view s) {
  if (s == "NONE") return Mutant::kNone;
  if (s == "L1_METRIC") return Mutant::kL1Metric;
  if (s == "X_ONLY_EQUIV") return Mutant::kXOnlyEquiv;
  return std::nullopt;
}

struct ModelConfig {
  int dimension = 2;
  long coord_numerator_bound = 100;
  long coord_denominator_bound = 10;
  long cases_per_property = 1000;
  std::uint64_t seed = 1;
  double degenerate_rate = 0.05;
  Mutant mutant = Mutant::kNone;
  // Leave out axioms that other axioms already imply (A1.1).
  bool skip_redundant = false;

  void validate() const {
    detail::check_dimension(static_cast<std::size_t>(dimension));
    if (coord_numerator_bound < 1 || coord_denominator_bound < 1) {
      throw ModelError("positive_bounds", "coordinate bounds must be positive");
    }
    if (cases_per_property < 0) throw ModelError("case_count", "case count must be nonnegative");
    if (!(degenerate_rate >= 0.0 && degenerate_rate <= 1.0)) {
      throw ModelError("degenerate_rate", "degenerate rate must lie in [0, 1]");
    }
  }
};

// Scalars (lambda, mu) are drawn as p/q with |p| <= this and q within the
// coordinate denominator bound.
inline constexpr long kScalarNumeratorBound = 20;

// Seed used when neither --seed nor the environment provides one.
inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr const char* kSeedEnvVar = "SYMGEO_SEED";

}  // namespace symgeo::harness

#endif  // SYMGEO_HARNESS_CONFIG_HPP
