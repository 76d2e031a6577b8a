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

#ifndef SYMGEO_ERRORS_HPP
#define SYMGEO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symgeo {

// Raised when an operation's precondition does not hold. contract() names the
// violated precondition (e.g. "dimension_match") so the CLI can report it.
class ModelError : public std::logic_error {
 public:
  ModelError(std::string contract, const std::string& what)
      : std::logic_error(contract + ": " + what), contract_(std::move(contract)) {}

  const std::string& contract() const noexcept { return contract_; }

 private:
  std::string contract_;
};

// Malformed literal text. position() is the 0-based offset of the offending
// character in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(position) +
                           ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace symgeo

#endif  // SYMGEO_ERRORS_HPP
