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

#ifndef SYMGEO_HARNESS_PROPERTY_HPP
#define SYMGEO_HARNESS_PROPERTY_HPP

#include <functional>
#include <string>
#include <vector>

#include "symgeo/harness/gen.hpp"

namespace symgeo::harness {

// One universally quantified statement, checked case by case. check() draws
// its instance from the Gen and returns whether the statement held.
struct Property {
  std::string id;
  std::string statement;
  std::string module;
  int min_dim = 1;
  bool redundant = false;  // implied by the other axioms
  std::vector<std::string> tags;
  std::function<bool(Gen&)> check;
};

// P => Q
inline bool implies(bool p, bool q) { return !p || q; }

}  // namespace symgeo::harness

#endif  // SYMGEO_HARNESS_PROPERTY_HPP
