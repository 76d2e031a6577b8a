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

// Umbrella header.

#ifndef SYMGEO_SYMGEO_HPP
#define SYMGEO_SYMGEO_HPP

#include "symgeo/arrow.hpp"
#include "symgeo/coords.hpp"
#include "symgeo/dyadic_mult.hpp"
#include "symgeo/errors.hpp"
#include "symgeo/metric.hpp"
#include "symgeo/model.hpp"
#include "symgeo/rational.hpp"
#include "symgeo/scalar_arrows.hpp"
#include "symgeo/weyl.hpp"

#endif  // SYMGEO_SYMGEO_HPP
