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

// Multiplication of arrows rebuilt from addition, bisection and dyadic
// approximation, without the scalar multiplication primitive.

#ifndef SYMGEO_DYADIC_MULT_HPP
#define SYMGEO_DYADIC_MULT_HPP

#include <vector>

#include "symgeo/arrow.hpp"
#include "symgeo/scalar_arrows.hpp"

namespace symgeo {

// n * AB for n >= 1, from 1*AB = AB and (k+1)*AB = k*AB + AB. Evaluated by
// doubling (2*X = X + X) so the number of additions is logarithmic in n.
inline Arrow nat_mul(const mpz_class& n, const Arrow& a) {
  if (n < 1) throw ModelError("positive_multiplier", "nat_mul requires n >= 1");
  Arrow acc = a;
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = bits - 1; i-- > 0;) {
    acc = add(acc, acc);
    if (mpz_tstbit(n.get_mpz_t(), i)) acc = add(acc, a);
  }
  return acc;
}

// 0*AB = AA and (-n)*AB = n*(-AB), with -AB carried back to the tail A.
inline Arrow int_mul(const mpz_class& k, const Arrow& a) {
  if (k == 0) return Arrow::null_at(a.tail);
  if (k > 0) return nat_mul(k, a);
  return nat_mul(-k, translate(invert(a), a.tail));
}

// (m / 2^n) * AB: n successive bisections from the tail, then m-fold.
inline Arrow dyadic_mul(const Dyadic& d, const Arrow& a) {
  Arrow part = a;
  for (unsigned i = 0; i < d.exponent(); ++i) part = Arrow(a.tail, midpoint(part.tail, part.head));
  return int_mul(d.numerator(), part);
}

struct DyadicStep {
  unsigned depth;
  Dyadic dyadic;
  Point point;
  Rational error_sq;  // squared distance from point to the exact lambda * AB head
};

struct DyadicApproxTrace {
  Rational lambda_target;
  std::vector<DyadicStep> steps;
  Rational final_error_sq;
};

// Approximates lambda * AB by its dyadic floors at depths 0..n. Negative
// targets approximate |lambda| and invert each step back onto the tail.
inline DyadicApproxTrace real_mul_approx(const Rational& lambda, const Arrow& a, unsigned n) {
  const Point exact = scale(lambda, a).head;
  const bool negative = lambda.sign() < 0;
  const Rational magnitude = lambda.abs();

  DyadicApproxTrace trace{lambda, {}, Rational()};
  trace.steps.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    Dyadic d = dyadic_floor(magnitude, k);
    Arrow step = dyadic_mul(d, a);
    if (negative) {
      step = translate(invert(step), a.tail);
      d = -d;
    }
    const Vector miss = detail::difference(step.head, exact);
    trace.steps.push_back({k, std::move(d), step.head, detail::inner(miss, miss)});
  }
  trace.final_error_sq = trace.steps.back().error_sq;
  return trace;
}

}  // namespace symgeo

#endif  // SYMGEO_DYADIC_MULT_HPP
