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

// Properties of distance, circles, perpendicularity and the scalar product.
// Plane-dependent statements are generated inside a coordinate plane; measure
// zero hypotheses (equal lengths, tangency) are built constructively and then
// confirmed with the binding's own predicates.

#ifndef SYMGEO_HARNESS_METRIC_PROPERTIES_HPP
#define SYMGEO_HARNESS_METRIC_PROPERTIES_HPP

#include <vector>

#include "symgeo/harness/affine_properties.hpp"
#include "symgeo/harness/property.hpp"
#include "symgeo/metric.hpp"

namespace symgeo::harness {

namespace detail {

// A point of the plane at the same distance from center as p: a rational
// rotation, a reflection in a line through center, or a point of the taxicab
// circle through p.
inline Point equal_length_partner(Gen& g, const CoordinatePlane& pl, const Point& center,
                                  const Point& p, std::string_view name) {
  const auto [cx, cy] = pl.local(center);
  const auto [px, py] = pl.local(p);
  const Rational x = px - cx, y = py - cy;
  const long pick = g.uniform(0, 19);
  if (pick < 12) {
    g.note(std::string(name) + ".via", std::string("rotation"));
    return g.note(name, rotate_in_plane(pl, center, p, g.rotation()));
  }
  if (pick < 15) {
    static constexpr long kMirrors[][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 3}};
    const auto& m = kMirrors[g.uniform(0, 5)];
    const Rational a(m[0]), b(m[1]);
    const Rational n = a * a + b * b;
    const Rational rx = ((a * a - b * b) * x + Rational(2) * a * b * y) / n;
    const Rational ry = (Rational(2) * a * b * x + (b * b - a * a) * y) / n;
    g.note(std::string(name) + ".via", std::string("reflection"));
    return g.note(name, pl.embed(cx + rx, cy + ry));
  }
  const Rational length = x.abs() + y.abs();
  const Rational share = length * Rational(mpz_class(g.uniform(0, 8)), mpz_class(8));
  const Rational rx = g.chance(0.5) ? share : -share;
  const Rational ry = g.chance(0.5) ? length - share : share - length;
  g.note(std::string(name) + ".via", std::string("taxicab"));
  return g.note(name, pl.embed(cx + rx, cy + ry));
}

// A vector spanning the plane together with dir.
inline Vector plane_complement(const CoordinatePlane& pl, const Vector& dir) {
  return parallel(pl.u(), dir) ? pl.v() : pl.u();
}

}  // namespace detail

template <ModelBinding M>
void add_metric_properties(std::vector<Property>& out) {
  const std::string module = "metric_layer";

  out.push_back({"A8", "AB ~ CD -> |AB| = |CD|", module, 1, false, {"homogeneity"}, [](Gen& g) {
    const Arrow a = g.arrow("A", "B");
    const Arrow b = detail::maybe_equivalent(g, a, "C", "D");
    return implies(M::equivalent(a, b), M::dist_sq(a.tail, a.head) == M::dist_sq(b.tail, b.head));
  }});

  out.push_back({"A9.1", "|AA| = 0", module, 1, false, {"measurement"}, [](Gen& g) {
    const Point a = g.point("A");
    const Point b = g.point("B");
    return M::dist_sq(a, a).is_zero() && implies(a == b, M::dist_sq(a, b).is_zero());
  }});

  out.push_back({"A9.2", "B != A -> |AB| > 0", module, 1, false, {"isotropy"}, [](Gen& g) {
    const Point a = g.point("A");
    const Point b = g.point("B");
    return M::dist_sq(a, b).sign() >= 0 && implies(a != b, M::dist_sq(a, b).sign() > 0);
  }});

  // Attributed to isotropy in the body of the text and to homogeneity in the
  // axiom list; both tags are kept.
  out.push_back({"A9.3", "|AB| = |BA|", module, 1, false, {"isotropy", "homogeneity"}, [](Gen& g) {
    const Point a = g.point("A");
    const Point b = g.point("B");
    return M::dist_sq(a, b) == M::dist_sq(b, a);
  }});

  out.push_back({"A10", "|lambda AB| = lambda |AB| for lambda > 0", module, 1, false, {"measurement"},
                 [](Gen& g) {
    const Rational lambda = g.note("lambda", g.positive_scalar());
    const Arrow a = g.arrow("A", "B");
    const Arrow s = scale(lambda, a);
    return M::dist_sq(s.tail, s.head) == lambda * lambda * M::dist_sq(a.tail, a.head);
  }});

  out.push_back({"Th7.1", "|lambda AB| = |lambda| |AB|", module, 1, false, {"compatibility"},
                 [](Gen& g) {
    const Rational lambda = g.note("lambda", g.scalar());
    const Arrow a = g.arrow("A", "B");
    const Arrow s = scale(lambda, a);
    return M::dist_sq(s.tail, s.head) == lambda * lambda * M::dist_sq(a.tail, a.head);
  }});

  out.push_back({"Th7.2", "every point has a unique nearest point on a line", module, 1, false,
                 {"nearest point"}, [](Gen& g) {
    const Point s = g.point("S");
    const Line p = g.line("p");
    const Point near = g.note("P", nearest_point_on_line<M>(s, p));
    if (!p.contains(near)) return false;
    const Rational best = M::dist_sq(s, near);
    for (int k = 0; k < 3; ++k) {
      const Rational t = k == 0 ? g.coord() : Rational(mpz_class(k == 1 ? 1 : -1), mpz_class(g.uniform(1, 64)));
      const Point q = k == 0 ? p.at(t) : point_add(near, smul(t, p.direction()));
      if (q != near && !(M::dist_sq(s, q) > best)) {
        g.note("Q", q);
        return false;
      }
    }
    return true;
  }});

  out.push_back({"A11", "a line through circle points A != B is nearest the center at their midpoint",
                 module, 2, false, {"isotropy", "circle", "plane"}, [](Gen& g) {
    const CoordinatePlane pl = g.plane();
    const Point s = g.plane_point(pl, "S");
    const Point a = g.plane_point(pl, "A");
    const Point b = detail::equal_length_partner(g, pl, s, a, "B");
    g.assume(a != b && M::dist_sq(s, a) == M::dist_sq(s, b));
    const Line p = Line::through(a, b);
    return M::nearest_point_on_line(s, p) == midpoint(a, b) &&
           M::line_circle_class(p, Circle(s, M::dist_sq(s, a))) == LineCircle::kSecant;
  }});

  out.push_back({"A11.a", "a line meets a circle in at most two points", module, 2, false,
                 {"circle", "plane"}, [](Gen& g) {
    const CoordinatePlane pl = g.plane();
    const Point s = g.plane_point(pl, "S");
    const Point a = g.plane_point(pl, "A");
    const Point b = detail::equal_length_partner(g, pl, s, a, "B");
    g.assume(a != b && M::dist_sq(s, a) == M::dist_sq(s, b));
    const Line p = Line::through(a, b);
    const Rational r_sq = M::dist_sq(s, a);
    // candidate third points: reflections of A and B along the line, the
    // midpoint, and random points of the line
    const Point mid = midpoint(a, b);
    const std::vector<Point> candidates = {
        point_add(a, vec(Arrow(b, a))), point_add(b, vec(Arrow(a, b))), mid,
        point_add(mid, vec(Arrow(a, mid))), p.at(g.coord()), p.at(g.coord())};
    for (const Point& x : candidates) {
      if (M::dist_sq(s, x) == r_sq && x != a && x != b) {
        g.note("X", x);
        return false;
      }
    }
    return true;
  }});

  out.push_back({"A12", "a line with exactly one circle point is nearest the center there", module, 2,
                 false, {"isotropy", "circle", "plane"}, [](Gen& g) {
    const CoordinatePlane pl = g.plane();
    const Point s = g.plane_point(pl, "S");
    const Point a = g.plane_point(pl, "A");
    g.assume(a != s);
    const Line radius = Line::through(s, a);
    const Line p = perpendicular_through<M>(a, radius, detail::plane_complement(pl, radius.direction()));
    g.note("p", p);
    g.assume(M::line_circle_class(p, Circle(s, M::dist_sq(s, a))) == LineCircle::kTangent);
    return M::nearest_point_on_line(s, p) == a;
  }});

  out.push_back({"A13", "|AB| = |AC| -> AB_AC = AC_AB", module, 2, false, {"isotropy", "plane"},
                 [](Gen& g) {
    const CoordinatePlane pl = g.plane();
    const Point a = g.plane_point(pl, "A");
    const Point b = g.plane_point(pl, "B");
    const Point c = detail::equal_length_partner(g, pl, a, b, "C");
    g.assume(M::dist_sq(a, b) == M::dist_sq(a, c));
    const ScalarProjection b_on_c = scalar_projection<M>(Arrow(a, b), Arrow(a, c));
    const ScalarProjection c_on_b = scalar_projection<M>(Arrow(a, c), Arrow(a, b));
    g.note("alpha(AB on AC)", b_on_c.alpha);
    g.note("alpha(AC on AB)", c_on_b.alpha);
    // alpha1 |AC| = alpha2 |AB| with |AB| = |AC|
    return b_on_c.alpha == c_on_b.alpha;
  }});

  out.push_back({"Th8", "a perpendicular to b -> b perpendicular to a", module, 2, false,
                 {"perpendicular", "plane"}, [](Gen& g) {
    const CoordinatePlane pl = g.plane();
    const Line a = g.plane_line(pl, "a");
    Line b = a;
    if (g.chance(0.75)) {
      const Point s = g.plane_point(pl, "S");
      b = perpendicular_through<M>(s, a, detail::plane_complement(pl, a.direction()));
      g.note("b", b);
    } else {
      b = g.plane_line(pl, "b");
    }
    return implies(is_perpendicular<M>(b, a), is_perpendicular<M>(a, b));
  }});

  out.push_back({"Th9", "b perpendicular to a at O -> O is nearest on a to every point of b", module,
                 2, false, {"perpendicular", "plane"}, [](Gen& g) {
    const CoordinatePlane pl = g.plane();
    const Line a = g.plane_line(pl, "a");
    const Point s = g.plane_point(pl, "S");
    const Line b = g.note("b", perpendicular_through<M>(s, a, detail::plane_complement(pl, a.direction())));
    if (!is_perpendicular<M>(b, a)) return false;
    const auto o = intersection(a, b);
    if (!o) return false;
    for (int k = 0; k < 3; ++k) {
      const Point p = b.at(g.coord());
      if (M::nearest_point_on_line(p, a) != *o) {
        g.note("P", p);
        return false;
      }
    }
    return true;
  }});

  out.push_back({"Th11", "through S off p there is exactly one perpendicular to p", module, 2, false,
                 {"perpendicular", "plane"}, [](Gen& g) {
    const CoordinatePlane pl = g.plane();
    const Line p = g.plane_line(pl, "p");
    const Point s = g.plane_point(pl, "S");
    g.assume(!p.contains(s));
    const Line l = g.note("L", perpendicular_through<M>(s, p));
    if (!l.contains(s) || !is_perpendicular<M>(l, p)) return false;
    const Vector dir = g.chance(0.5) ? smul(g.nonzero_scalar(), l.direction()) : g.plane_vector(pl, "dir");
    const Line other(s, dir);
    return implies(is_perpendicular<M>(other, p), other.same_as(l));
  }});

  out.push_back({"Th12", "through P on p there is exactly one perpendicular to p", module, 2, false,
                 {"perpendicular", "plane"}, [](Gen& g) {
    const CoordinatePlane pl = g.plane();
    const Line p = g.plane_line(pl, "p");
    const Point at = g.note("P", p.at(g.coord()));
    const Line l = g.note("L", perpendicular_through<M>(at, p, detail::plane_complement(pl, p.direction())));
    if (!l.contains(at) || !is_perpendicular<M>(l, p)) return false;
    const Vector dir = g.chance(0.5) ? smul(g.nonzero_scalar(), l.direction()) : g.plane_vector(pl, "dir");
    const Line other(at, dir);
    return implies(is_perpendicular<M>(other, p), other.same_as(l));
  }});

  out.push_back({"Th13", "perpendiculars to one line are mutually parallel", module, 2, false,
                 {"perpendicular", "plane"}, [](Gen& g) {
    const CoordinatePlane pl = g.plane();
    const Line p = g.plane_line(pl, "p");
    const Vector hint = detail::plane_complement(pl, p.direction());
    const Line a = perpendicular_through<M>(g.plane_point(pl, "S1"), p, hint);
    const Line b = perpendicular_through<M>(g.plane_point(pl, "S2"), p, hint);
    return parallel(a, b) && (a.same_as(b) || !intersection(a, b).has_value());
  }});

  out.push_back({"Cor10", "|AB| + |BC| >= |AC|, with equality exactly for B on AC", module, 1, false,
                 {"triangle inequality"}, [](Gen& g) {
    const Point a = g.point("A");
    const Point c = g.point("C");
    Point b = a;
    const long shape = g.uniform(0, 5);
    if (shape < 2) {
      b = g.note("B", point_add(a, smul(Rational(mpz_class(g.uniform(0, 16)), mpz_class(16)), vec(Arrow(a, c)))));
    } else if (shape == 2) {
      const Rational t(mpz_class(g.uniform(17, 64)), mpz_class(g.chance(0.5) ? 16 : -16));
      b = g.note("B", point_add(a, smul(t, vec(Arrow(a, c)))));
    } else {
      b = g.point("B");
    }
    const TriangleRelation rel = triangle_cmp<M>(a, b, c);
    g.note("relation", std::string(to_string(rel)));
    return rel != TriangleRelation::kViolated && (rel == TriangleRelation::kEqual) == on_segment(a, b, c);
  }});

  out.push_back({"Th14", "A'B' ~ AB and C'D' ~ CD -> A'B'.C'D' = AB.CD", module, 1, false,
                 {"scalar product"}, [](Gen& g) {
    const Arrow ab = g.arrow("A", "B");
    const Arrow cd = g.arrow("C", "D");
    const Arrow ab2 = translate(ab, g.point("A'"));
    const Arrow cd2 = translate(cd, g.point("C'"));
    g.assume(M::equivalent(ab, ab2) && M::equivalent(cd, cd2));
    return dot<M>(ab2, cd2) == dot<M>(ab, cd);
  }});

  out.push_back({"Th15.1", "A != B -> AB.AB > 0", module, 1, false, {"scalar product"}, [](Gen& g) {
    const Arrow ab = g.arrow("A", "B");
    return implies(!ab.is_null(), dot<M>(ab, ab).sign() > 0) && dot<M>(ab, ab) == M::dist_sq(ab.tail, ab.head);
  }});

  out.push_back({"Th15.2", "(AB + A'B').CD = AB.CD + A'B'.CD", module, 1, false, {"scalar product"},
                 [](Gen& g) {
    const Arrow ab = g.arrow("A", "B");
    const Arrow ab2 = g.arrow("A'", "B'");
    const Arrow cd = g.arrow("C", "D");
    return dot<M>(add(ab, ab2), cd) == dot<M>(ab, cd) + dot<M>(ab2, cd);
  }});

  out.push_back({"Th15.3", "(lambda AB).CD = lambda (AB.CD) = AB.(lambda CD)", module, 1, false,
                 {"scalar product"}, [](Gen& g) {
    const Rational lambda = g.note("lambda", g.scalar());
    const Arrow ab = g.arrow("A", "B");
    const Arrow cd = g.arrow("C", "D");
    const Rational base = dot<M>(ab, cd);
    return dot<M>(scale(lambda, ab), cd) == lambda * base && dot<M>(ab, scale(lambda, cd)) == lambda * base;
  }});

  out.push_back({"Th15.4", "AB.CD = CD.AB", module, 1, false, {"scalar product"}, [](Gen& g) {
    const Arrow ab = g.arrow("A", "B");
    const Arrow cd = g.arrow("C", "D");
    return dot<M>(ab, cd) == dot<M>(cd, ab);
  }});

  out.push_back({"W5.1", "a != 0 -> a.a > 0", module, 1, false, {"inner product"}, [](Gen& g) {
    const Vector a = g.vector("a");
    return implies(!a.is_zero(), vdot<M>(a, a).sign() > 0) && implies(a.is_zero(), vdot<M>(a, a).is_zero());
  }});

  out.push_back({"W5.2", "(a + b).c = a.c + b.c", module, 1, false, {"inner product"}, [](Gen& g) {
    const Vector a = g.vector("a"), b = g.vector("b"), c = g.vector("c");
    return vdot<M>(vadd(a, b), c) == vdot<M>(a, c) + vdot<M>(b, c);
  }});

  out.push_back({"W5.3", "(lambda a).b = lambda (a.b)", module, 1, false, {"inner product"}, [](Gen& g) {
    const Rational lambda = g.note("lambda", g.scalar());
    const Vector a = g.vector("a"), b = g.vector("b");
    return vdot<M>(smul(lambda, a), b) == lambda * vdot<M>(a, b);
  }});

  out.push_back({"W5.4", "a.b = b.a", module, 1, false, {"inner product"}, [](Gen& g) {
    const Vector a = g.vector("a"), b = g.vector("b");
    return vdot<M>(a, b) == vdot<M>(b, a);
  }});
}

}  // namespace symgeo::harness

#endif  // SYMGEO_HARNESS_METRIC_PROPERTIES_HPP
