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

#ifndef SYMGEO_SCALAR_ARROWS_HPP
#define SYMGEO_SCALAR_ARROWS_HPP

#include <vector>

#include "symgeo/arrow.hpp"

namespace symgeo {

// lambda * AB, anchored at the tail: the arrow AC with C = A + lambda (B - A).
inline Arrow scale(const Rational& lambda, const Arrow& a) {
  return Arrow(a.tail,
               detail::offset(a.tail, detail::scaled(lambda, detail::difference(a.tail, a.head))));
}

// The unique P with AP ~ PB.
inline Point midpoint(const Point& a, const Point& b) {
  detail::require_same_dim(a.dim(), b.dim(), "midpoint");
  std::vector<Rational> out;
  out.reserve(a.dim());
  const Rational half(mpz_class(1), mpz_class(2));
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back((a[i] + b[i]) * half);
  return Point(std::move(out));
}

}  // namespace symgeo

#endif  // SYMGEO_SCALAR_ARROWS_HPP
