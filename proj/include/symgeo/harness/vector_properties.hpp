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

// Properties of the vector space and affine action built from arrows.

#ifndef SYMGEO_HARNESS_VECTOR_PROPERTIES_HPP
#define SYMGEO_HARNESS_VECTOR_PROPERTIES_HPP

#include <vector>

#include "symgeo/harness/affine_properties.hpp"
#include "symgeo/harness/property.hpp"
#include "symgeo/weyl.hpp"

namespace symgeo::harness {

template <ModelBinding M>
void add_vector_properties(std::vector<Property>& out) {
  const std::string module = "weyl_vectors";

  out.push_back({"Vec.class", "vec(AB) = vec(CD) exactly when AB ~ CD", module, 1, false, {"classes"},
                 [](Gen& g) {
    const Arrow a = g.arrow("A", "B");
    const Arrow b = detail::maybe_equivalent(g, a, "C", "D", 0.5);
    return M::equivalent(a, b) == (vec(a) == vec(b)) && vec(Arrow::null_at(a.tail)).is_zero();
  }});

  out.push_back({"W1", "X -> vec(AX) is a bijection from points onto vectors", module, 1, false, {},
                 [](Gen& g) {
    const Point a = g.point("A");
    const Point x = g.point("X");
    const Point y = g.point("Y");
    const Vector v = g.vector("v");
    const bool injective = implies(x != y, vec(Arrow(a, x)) != vec(Arrow(a, y)));
    const Point preimage = g.note("A+v", point_add(a, v));
    return injective && vec(Arrow(a, preimage)) == v && point_add(a, vec(Arrow(a, x))) == x;
  }});

  out.push_back({"W2", "vec(AB) + vec(BC) = vec(AC)", module, 1, false, {}, [](Gen& g) {
    const Point a = g.point("A");
    const Point b = g.point("B");
    const Point c = g.point("C");
    // representatives elsewhere give the same sum
    const Arrow ab2 = translate(Arrow(a, b), g.point("P"));
    const Arrow bc2 = translate(Arrow(b, c), g.point("Q"));
    return vadd(vec(Arrow(a, b)), vec(Arrow(b, c))) == vec(Arrow(a, c)) &&
           vadd(vec(ab2), vec(bc2)) == vec(Arrow(a, c)) &&
           point_add(point_add(a, vec(Arrow(a, b))), vec(Arrow(b, c))) == c;
  }});

  out.push_back({"W3.1", "(a + b) + c = a + (b + c)", module, 1, false, {"group"}, [](Gen& g) {
    const Vector a = g.vector("a"), b = g.vector("b"), c = g.vector("c");
    return vadd(vadd(a, b), c) == vadd(a, vadd(b, c));
  }});

  out.push_back({"W3.2", "a + 0 = a", module, 1, false, {"group"}, [](Gen& g) {
    const Vector a = g.vector("a");
    return vadd(a, zero_vector(a.dim())) == a;
  }});

  out.push_back({"W3.3", "a + (-a) = 0", module, 1, false, {"group"}, [](Gen& g) {
    const Arrow ab = g.arrow("A", "B");
    const Vector a = vec(ab);
    return vadd(a, vneg(a)).is_zero() && vneg(a) == vec(invert(ab));
  }});

  out.push_back({"W3.4", "a + b = b + a", module, 1, false, {"group"}, [](Gen& g) {
    const Vector a = g.vector("a"), b = g.vector("b");
    return vadd(a, b) == vadd(b, a);
  }});

  out.push_back({"W4.1", "1 a = a", module, 1, false, {"vector space"}, [](Gen& g) {
    const Vector a = g.vector("a");
    return smul(Rational(1), a) == a;
  }});

  out.push_back({"W4.2", "(lambda + mu) a = lambda a + mu a", module, 1, false, {"vector space"},
                 [](Gen& g) {
    const Rational lambda = g.note("lambda", g.scalar());
    const Rational mu = g.note("mu", g.scalar());
    const Vector a = g.vector("a");
    return smul(lambda + mu, a) == vadd(smul(lambda, a), smul(mu, a));
  }});

  out.push_back({"W4.3", "lambda (mu a) = (lambda mu) a", module, 1, false, {"vector space"},
                 [](Gen& g) {
    const Rational lambda = g.note("lambda", g.scalar());
    const Rational mu = g.note("mu", g.scalar());
    const Arrow ab = g.arrow("A", "B");
    // through arrows: lambda vec(AB) = vec(lambda AB)
    return smul(lambda, smul(mu, vec(ab))) == smul(lambda * mu, vec(ab)) &&
           smul(lambda, vec(ab)) == vec(scale(lambda, ab));
  }});

  out.push_back({"W4.4", "lambda (a + b) = lambda a + lambda b", module, 1, false, {"vector space"},
                 [](Gen& g) {
    const Rational lambda = g.note("lambda", g.scalar());
    const Vector a = g.vector("a"), b = g.vector("b");
    return smul(lambda, vadd(a, b)) == vadd(smul(lambda, a), smul(lambda, b));
  }});

  out.push_back({"Para", "AB ~ DC exactly when the diagonals of ABCD bisect each other", module, 1,
                 false, {"parallelogram"}, [](Gen& g) {
    const Point a = g.point("A");
    const Point b = g.point("B");
    const Point c = g.point("C");
    const Point d = g.chance(0.75) ? g.note("D", point_add(c, vneg(vec(Arrow(a, b))))) : g.point("D");
    return M::equivalent(Arrow(a, b), Arrow(d, c)) == diagonals_bisect({a, b, c, d});
  }});

  out.push_back({"Proj.1", "P(AB + BC) = P(AB) + P(BC)", module, 2, false, {"projection", "plane"},
                 [](Gen& g) {
    const CoordinatePlane pl = g.plane();
    const Vector dir = g.plane_vector(pl, "g");
    const Line p = g.plane_line(pl, "p");
    g.assume(!parallel(dir, p.direction()));
    const Point a = g.plane_point(pl, "A");
    const Point b = g.plane_point(pl, "B");
    const Point c = g.plane_point(pl, "C");
    const Arrow sum = add(Arrow(a, b), Arrow(b, c));
    return parallel_project(dir, p, sum) ==
           add(parallel_project(dir, p, Arrow(a, b)), parallel_project(dir, p, Arrow(b, c)));
  }});

  out.push_back({"Proj.2", "P(lambda AB) = lambda P(AB)", module, 2, false, {"projection", "plane"},
                 [](Gen& g) {
    const CoordinatePlane pl = g.plane();
    const Vector dir = g.plane_vector(pl, "g");
    const Line p = g.plane_line(pl, "p");
    g.assume(!parallel(dir, p.direction()));
    const Rational lambda = g.note("lambda", g.scalar());
    const Point a = g.plane_point(pl, "A");
    const Point b = g.plane_point(pl, "B");
    const Arrow projected = parallel_project(dir, p, Arrow(a, b));
    return parallel_project(dir, p, scale(lambda, Arrow(a, b))) == scale(lambda, projected) &&
           p.contains(projected.tail) && p.contains(projected.head);
  }});
}

}  // namespace symgeo::harness

#endif  // SYMGEO_HARNESS_VECTOR_PROPERTIES_HPP
