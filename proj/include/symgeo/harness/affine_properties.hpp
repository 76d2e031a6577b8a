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

// Properties of arrows, scalar multiplication and its dyadic reconstruction.

#ifndef SYMGEO_HARNESS_AFFINE_PROPERTIES_HPP
#define SYMGEO_HARNESS_AFFINE_PROPERTIES_HPP

#include <vector>

#include "symgeo/dyadic_mult.hpp"
#include "symgeo/harness/property.hpp"
#include "symgeo/metric.hpp"
#include "symgeo/scalar_arrows.hpp"

namespace symgeo::harness {

namespace detail {

// An arrow equivalent to a (translated to a fresh point) with probability p,
// otherwise an unrelated random arrow.
inline Arrow maybe_equivalent(Gen& g, const Arrow& a, std::string_view tail, std::string_view head,
                              double p = 0.75) {
  if (g.chance(p)) {
    Arrow b = translate(a, g.point(tail));
    g.note(head, b.head);
    return b;
  }
  return g.arrow(tail, head);
}

// v with probability 1/2, otherwise v plus a random offset.
inline Point maybe_perturbed(Gen& g, const Point& p, std::string_view name) {
  if (g.chance(0.5)) return g.note(name, p);
  return g.note(name, point_add(p, g.vector(std::string(name) + ".offset")));
}

}  // namespace detail

template <ModelBinding M>
void add_affine_properties(std::vector<Property>& out) {
  const std::string arrows = "arrow_core";
  const std::string scalars = "scalar_arrows";
  const std::string dyadic = "dyadic_mult";

  out.push_back({"A1.1", "AB ~ AB", arrows, 1, true, {"equivalence"}, [](Gen& g) {
    const Arrow a = g.arrow("A", "B");
    return M::equivalent(a, a);
  }});

  out.push_back({"A1.2", "AB ~ A'B' -> A'B' ~ AB", arrows, 1, false, {"equivalence"}, [](Gen& g) {
    const Arrow a = g.arrow("A", "B");
    const Arrow b = detail::maybe_equivalent(g, a, "A'", "B'", 0.5);
    return implies(M::equivalent(a, b), M::equivalent(b, a));
  }});

  out.push_back({"A1.3", "AB ~ A'B' and A'B' ~ A''B'' -> AB ~ A''B''", arrows, 1, false,
                 {"equivalence"}, [](Gen& g) {
    const Arrow a = g.arrow("A", "B");
    const Arrow b = detail::maybe_equivalent(g, a, "A'", "B'");
    const Arrow c = detail::maybe_equivalent(g, b, "A''", "B''");
    return implies(M::equivalent(a, b) && M::equivalent(b, c), M::equivalent(a, c));
  }});

  out.push_back({"A2", "AB ~ AC -> B = C", arrows, 1, false, {"relative position"}, [](Gen& g) {
    const Point a = g.point("A");
    const Point b = g.point("B");
    Point c = b;
    if (g.chance(0.5)) {
      // Replace a random nonempty set of coordinates.
      std::vector<Rational> cc(b.coords().begin(), b.coords().end());
      const long forced = g.uniform(0, static_cast<long>(b.dim()) - 1);
      for (std::size_t i = 0; i < cc.size(); ++i) {
        if (static_cast<long>(i) == forced || g.chance(0.5)) cc[i] = g.coord();
      }
      c = Point(std::move(cc));
    }
    g.note("C", c);
    return implies(M::equivalent(Arrow(a, b), Arrow(a, c)), b == c);
  }});

  out.push_back({"A3.1", "AB ~ A'B' -> BA ~ B'A'", arrows, 1, false, {"homogeneity"}, [](Gen& g) {
    const Arrow a = g.arrow("A", "B");
    const Arrow b = detail::maybe_equivalent(g, a, "A'", "B'");
    return implies(M::equivalent(a, b), M::equivalent(invert(a), invert(b)));
  }});

  out.push_back({"A3.2", "AB ~ A'B' and BC ~ B'C' -> AC ~ A'C'", arrows, 1, false, {"homogeneity"},
                 [](Gen& g) {
    const Point a = g.point("A");
    const Point b = g.point("B");
    const Point c = g.point("C");
    const Point a2 = g.point("A'");
    const Point b2 = g.chance(0.75) ? g.note("B'", translate(Arrow(a, b), a2).head) : g.point("B'");
    const Point c2 = g.chance(0.75) ? g.note("C'", translate(Arrow(b, c), b2).head) : g.point("C'");
    const bool hyp = M::equivalent(Arrow(a, b), Arrow(a2, b2)) && M::equivalent(Arrow(b, c), Arrow(b2, c2));
    return implies(hyp, M::equivalent(Arrow(a, c), Arrow(a2, c2))) &&
           // generalized addition agrees with the chained form AB + BC = AC
           add(Arrow(a, b), Arrow(b, c)) == Arrow(a, c);
  }});

  out.push_back({"C5", "AA ~ BB", arrows, 1, false, {"null arrows"}, [](Gen& g) {
    const Point a = g.point("A");
    const Point b = g.point("B");
    return M::equivalent(Arrow::null_at(a), Arrow::null_at(b));
  }});

  out.push_back({"A4", "for all lambda, A, B there is C with lambda*AB = AC", scalars, 1, false,
                 {"stretching"}, [](Gen& g) {
    const Rational lambda = g.note("lambda", g.scalar());
    const Arrow a = g.arrow("A", "B");
    const Arrow c = g.note("lambda*AB", scale(lambda, a));
    return c.tail == a.tail && vec(c) == smul(lambda, vec(a));
  }});

  out.push_back({"A5", "AB ~ CD -> lambda*AB ~ lambda*CD", scalars, 1, false, {"homogeneity"},
                 [](Gen& g) {
    const Rational lambda = g.note("lambda", g.scalar());
    const Arrow a = g.arrow("A", "B");
    const Arrow b = detail::maybe_equivalent(g, a, "C", "D");
    return implies(M::equivalent(a, b), M::equivalent(scale(lambda, a), scale(lambda, b)));
  }});

  out.push_back({"A6.1", "1*AB = AB", scalars, 1, false, {"iteration"}, [](Gen& g) {
    const Arrow a = g.arrow("A", "B");
    return scale(Rational(1), a) == a;
  }});

  out.push_back({"A6.2", "lambda*AB + mu*AB = (lambda + mu)*AB", scalars, 1, false, {"iteration"},
                 [](Gen& g) {
    const Rational lambda = g.note("lambda", g.scalar());
    const Rational mu = g.note("mu", g.scalar());
    const Arrow a = g.arrow("A", "B");
    return add(scale(lambda, a), scale(mu, a)) == scale(lambda + mu, a);
  }});

  out.push_back({"A6.3", "lambda*(mu*AB) = (lambda*mu)*AB", scalars, 1, false, {"iteration"},
                 [](Gen& g) {
    const Rational lambda = g.note("lambda", g.scalar());
    const Rational mu = g.note("mu", g.scalar());
    const Arrow a = g.arrow("A", "B");
    return scale(lambda, scale(mu, a)) == scale(lambda * mu, a);
  }});

  out.push_back({"A7", "AC = lambda*AB and AC' = lambda*AB' -> CC' ~ lambda*BB'", scalars, 1, false,
                 {"scale invariance"}, [](Gen& g) {
    const Rational lambda = g.note("lambda", g.scalar());
    const Point a = g.point("A");
    const Point b = g.point("B");
    const Point b2 = g.point("B'");
    const Point c = g.note("C", scale(lambda, Arrow(a, b)).head);
    const Point c2 = g.note("C'", scale(lambda, Arrow(a, b2)).head);
    return M::equivalent(Arrow(c, c2), scale(lambda, Arrow(b, b2)));
  }});

  out.push_back({"C1", "for all A, B there is C with CA ~ AB", scalars, 1, false, {}, [](Gen& g) {
    const Arrow ab = g.arrow("A", "B");
    const Point c = g.note("C", translate(invert(ab), ab.tail).head);
    return M::equivalent(Arrow(c, ab.tail), ab);
  }});

  out.push_back({"C2", "lambda*(AB + BB') = lambda*AB + lambda*BB'", scalars, 1, false, {}, [](Gen& g) {
    const Rational lambda = g.note("lambda", g.scalar());
    const Point a = g.point("A");
    const Point b = g.point("B");
    const Point b2 = g.point("B'");
    const Arrow ab(a, b), bb2(b, b2);
    return scale(lambda, add(ab, bb2)) == add(scale(lambda, ab), scale(lambda, bb2));
  }});

  out.push_back({"A'4", "for all A, B there is D with AB ~ BD", scalars, 1, false, {}, [](Gen& g) {
    const Arrow ab = g.arrow("A", "B");
    const Point d = g.note("D", translate(ab, ab.head).head);
    return M::equivalent(ab, Arrow(ab.head, d));
  }});

  out.push_back({"A'5", "AB ~ BC and AB' ~ B'C' -> there is P with CP ~ PC' ~ BB'", scalars, 1, false,
                 {"scale invariance"}, [](Gen& g) {
    const Point a = g.point("A");
    const Point b = g.point("B");
    const Point b2 = g.point("B'");
    const Point c = g.note("C", translate(Arrow(a, b), b).head);
    const Point c2 = g.note("C'", translate(Arrow(a, b2), b2).head);
    const Point p = g.note("P", midpoint(c, c2));
    return M::equivalent(Arrow(c, p), Arrow(p, c2)) && M::equivalent(Arrow(c, p), Arrow(b, b2));
  }});

  out.push_back({"A'6", "for all A, B there is exactly one P with AP ~ PB", scalars, 1, false,
                 {"midpoint"}, [](Gen& g) {
    const Point a = g.point("A");
    const Point b = g.point("B");
    const Point p = g.note("P", midpoint(a, b));
    const Point q = detail::maybe_perturbed(g, p, "Q");
    return M::equivalent(Arrow(a, p), Arrow(p, b)) &&
           implies(M::equivalent(Arrow(a, q), Arrow(q, b)), q == p) && p == midpoint(b, a);
  }});

  out.push_back({"T3", "for all A, B, A' there is exactly one B' with AB ~ A'B'", scalars, 1, false,
                 {"translation"}, [](Gen& g) {
    const Arrow a = g.arrow("A", "B");
    const Point tail = g.point("A'");
    const Arrow b = g.note("A'B'", translate(a, tail));
    const Point other = detail::maybe_perturbed(g, b.head, "X");
    return b.tail == tail && M::equivalent(a, b) && translate(a, a.tail) == a &&
           implies(M::equivalent(a, Arrow(tail, other)), other == b.head);
  }});

  out.push_back({"T4", "AB ~ A'B' -> AA' ~ BB'", scalars, 1, false, {"parallelogram"}, [](Gen& g) {
    const Arrow a = g.arrow("A", "B");
    const Arrow b = detail::maybe_equivalent(g, a, "A'", "B'");
    return implies(M::equivalent(a, b), M::equivalent(Arrow(a.tail, b.tail), Arrow(a.head, b.head)));
  }});

  out.push_back({"R1", "A'5, unique translation and the parallelogram law hold together", scalars, 1,
                 false, {"cross-check"}, [](Gen& g) {
    const Point a = g.point("A");
    const Point b = g.point("B");
    const Point b2 = g.point("B'");
    const Point c = translate(Arrow(a, b), b).head;
    const Point c2 = translate(Arrow(a, b2), b2).head;
    const Point p = midpoint(c, c2);
    const bool elementary = M::equivalent(Arrow(c, p), Arrow(p, c2)) &&
                            M::equivalent(Arrow(c, p), Arrow(b, b2));
    // unique translation of BB' to C, and the parallelogram BB'PC
    const Arrow moved = translate(Arrow(b, b2), c);
    const bool unique = moved.head == p && M::equivalent(Arrow(b, b2), moved);
    const bool parallelogram = M::equivalent(Arrow(b, c), Arrow(b2, p));
    return elementary && unique && parallelogram;
  }});

  out.push_back({"A'7", "dyadic floors approach lambda*AB monotonically within 2^-n |AB|", dyadic, 1,
                 false, {"continuity"}, [](Gen& g) {
    const Rational lambda = g.note("lambda", Rational(mpz_class(g.uniform(0, 1000)), mpz_class(g.uniform(1, 97))));
    const Arrow a = g.arrow("A", "B");
    const unsigned depth = static_cast<unsigned>(g.uniform(0, 12));
    g.note("depth", static_cast<long>(depth));
    const DyadicApproxTrace trace = real_mul_approx(lambda, a, depth);
    const Rational len_sq = Euclidean::dist_sq(a.tail, a.head);
    mpz_class four_pow;
    mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, depth);
    if (trace.final_error_sq * Rational(four_pow) > len_sq) return false;
    const Vector dir = vec(a);
    for (std::size_t k = 1; k < trace.steps.size(); ++k) {
      const auto& prev = trace.steps[k - 1];
      const auto& cur = trace.steps[k];
      if (cur.error_sq > prev.error_sq) return false;
      if (cur.dyadic.value() < prev.dyadic.value()) return false;
      for (std::size_t i = 0; i < dir.dim(); ++i) {
        if (dir[i].sign() > 0 && cur.point[i] < prev.point[i]) return false;
        if (dir[i].sign() < 0 && cur.point[i] > prev.point[i]) return false;
      }
    }
    return true;
  }});

  out.push_back({"A'8", "bisection and supremum steps respect ~", dyadic, 1, false, {"homogeneity"},
                 [](Gen& g) {
    const Rational lambda = g.note("lambda", g.scalar() * Rational(3));
    const Arrow a = g.arrow("A", "B");
    const Arrow b = detail::maybe_equivalent(g, a, "C", "D");
    const unsigned depth = static_cast<unsigned>(g.uniform(0, 8));
    g.note("depth", static_cast<long>(depth));
    const auto ta = real_mul_approx(lambda, a, depth);
    const auto tb = real_mul_approx(lambda, b, depth);
    if (!M::equivalent(a, b)) return true;
    if (!M::equivalent(Arrow(a.tail, midpoint(a.tail, a.head)), Arrow(b.tail, midpoint(b.tail, b.head)))) {
      return false;
    }
    for (std::size_t k = 0; k < ta.steps.size(); ++k) {
      if (!M::equivalent(Arrow(a.tail, ta.steps[k].point), Arrow(b.tail, tb.steps[k].point))) return false;
    }
    return true;
  }});

  out.push_back({"D.tower", "natural, integer and dyadic multiples agree with lambda*AB", dyadic, 1,
                 false, {"agreement"}, [](Gen& g) {
    const Arrow a = g.arrow("A", "B");
    const mpz_class n(g.uniform(1, 64));
    const mpz_class k(g.uniform(-64, 64));
    const Dyadic d(mpz_class(g.uniform(-300, 300)), static_cast<unsigned>(g.uniform(0, 8)));
    g.note("n", n.get_str());
    g.note("k", k.get_str());
    g.note("d", d.str());
    return nat_mul(n, a) == scale(Rational(n, 1), a) && int_mul(k, a) == scale(Rational(k, 1), a) &&
           dyadic_mul(d, a) == scale(d.value(), a);
  }});
}

}  // namespace symgeo::harness

#endif  // SYMGEO_HARNESS_AFFINE_PROPERTIES_HPP
