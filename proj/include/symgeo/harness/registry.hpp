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

#ifndef SYMGEO_HARNESS_REGISTRY_HPP
#define SYMGEO_HARNESS_REGISTRY_HPP

#include <string>
#include <vector>

#include "symgeo/harness/affine_properties.hpp"
#include "symgeo/harness/metric_properties.hpp"
#include "symgeo/harness/vector_properties.hpp"

namespace symgeo::harness {

// Every property, in report order, bound to model M.
template <ModelBinding M>
std::vector<Property> axiom_registry() {
  std::vector<Property> out;
  add_affine_properties<M>(out);
  add_vector_properties<M>(out);
  add_metric_properties<M>(out);
  return out;
}

// Identifiers that must have an executable property: the full axiom list and
// every derived result the kernel claims.
inline const std::vector<std::string>& required_property_ids() {
  static const std::vector<std::string> ids = {
      "A1.1", "A1.2", "A1.3", "A2",   "A3.1",  "A3.2",  "A4",    "A5",    "A6.1", "A6.2",
      "A6.3", "A7",   "A8",   "A9.1", "A9.2",  "A9.3",  "A10",   "A11",   "A12",  "A13",
      "C1",   "C2",   "C5",   "A'4",  "A'5",   "A'6",   "T3",    "T4",    "Th7.1", "Th7.2",
      "Th8",  "Th9",  "Cor10", "Th11", "Th12", "Th13",  "Th14",  "Th15.1", "Th15.2", "Th15.3",
      "Th15.4", "W1", "W2",   "W3.1", "W3.2",  "W3.3",  "W3.4",  "W4.1",  "W4.2", "W4.3",
      "W4.4", "W5.1", "W5.2", "W5.3", "W5.4"};
  return ids;
}

// True when id names the property itself or a group containing it ("W5"
// selects W5.1 to W5.4).
inline bool selects(const std::string& selector, const std::string& id) {
  if (selector == "ALL" || selector == id) return true;
  return id.size() > selector.size() && id.compare(0, selector.size(), selector) == 0 &&
         id[selector.size()] == '.';
}

}  // namespace symgeo::harness

#endif  // SYMGEO_HARNESS_REGISTRY_HPP
