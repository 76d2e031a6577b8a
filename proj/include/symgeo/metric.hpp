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

// Everything built on distance: nearest points, circles, perpendicularity,
// scalar projection, the scalar product and the triangle inequality.
// Lengths are handled squared; the one genuine sum of square roots goes
// through cmp_sum_of_sqrts.

#ifndef SYMGEO_METRIC_HPP
#define SYMGEO_METRIC_HPP

#include <optional>
#include <string_view>

#include "symgeo/model.hpp"

namespace symgeo {

template <ModelBinding M = Euclidean>
Rational dist_sq(const Point& a, const Point& b) {
  detail::require_same_dim(a.dim(), b.dim(), "dist_sq");
  return M::dist_sq(a, b);
}

template <ModelBinding M = Euclidean>
Point nearest_point_on_line(const Point& s, const Line& p) {
  detail::require_same_dim(s.dim(), p.dim(), "nearest_point_on_line");
  return M::nearest_point_on_line(s, p);
}

template <ModelBinding M = Euclidean>
LineCircle line_circle_class(const Line& p, const Circle& c) {
  detail::require_same_dim(p.dim(), c.center().dim(), "line_circle_class");
  return M::line_circle_class(p, c);
}

// a is perpendicular to b: they meet at O, and some S on a off b has O as its
// nearest point on b. Any S on a other than O works, so S = O + a.direction.
template <ModelBinding M = Euclidean>
bool is_perpendicular(const Line& a, const Line& b) {
  const auto o = intersection(a, b);
  if (!o) return false;
  const Point s = point_add(*o, a.direction());
  return M::nearest_point_on_line(s, b) == *o;
}

// The perpendicular to p through s. When s is off p it runs through the
// nearest point. When s is on p, a point off p is taken in the plane spanned
// by p and in_plane, its perpendicular foot found, and that perpendicular
// carried over to s. In dimension 2 the hint may be omitted.
template <ModelBinding M = Euclidean>
Line perpendicular_through(const Point& s, const Line& p,
                           const std::optional<Vector>& in_plane = std::nullopt) {
  detail::require_same_dim(s.dim(), p.dim(), "perpendicular_through");
  if (!p.contains(s)) return Line(s, detail::difference(s, M::nearest_point_on_line(s, p)));

  Vector lift = zero_vector(p.dim());
  if (in_plane) {
    if (parallel(*in_plane, p.direction())) {
      throw ModelError("plane_required", "in-plane hint is parallel to the line");
    }
    lift = *in_plane;
  } else if (p.dim() == 2) {
    lift = parallel(Vector{1, 0}, p.direction()) ? Vector{0, 1} : Vector{1, 0};
  } else {
    throw ModelError("plane_required", "a point on the line needs a plane outside dimension 2");
  }
  const Point off = point_add(s, lift);
  const Point foot = M::nearest_point_on_line(off, p);
  return Line(s, detail::difference(foot, off));
}

// AB_CD = alpha * |CD|, where the orthogonal projection A'B' of AB onto p(CD)
// satisfies A'B' ~ alpha * CD.
struct ScalarProjection {
  Rational alpha;
  Rational base_len_sq;

  friend bool operator==(const ScalarProjection&, const ScalarProjection&) = default;
};

template <ModelBinding M = Euclidean>
ScalarProjection scalar_projection(const Arrow& ab, const Arrow& cd) {
  detail::require_same_dim(ab.dim(), cd.dim(), "scalar_projection");
  if (cd.is_null()) return {Rational(), Rational()};
  const Line p = Line::through(cd.tail, cd.head);
  const Vector projected = detail::difference(M::nearest_point_on_line(ab.tail, p),
                                              M::nearest_point_on_line(ab.head, p));
  const Vector& base = p.direction();
  Rational alpha;
  for (std::size_t i = 0; i < base.dim(); ++i) {
    if (!base[i].is_zero()) {
      alpha = projected[i] / base[i];
      break;
    }
  }
  return {std::move(alpha), M::dist_sq(cd.tail, cd.head)};
}

// AB . CD = AB_CD * |CD| = alpha * |CD|^2.
template <ModelBinding M = Euclidean>
Rational dot(const Arrow& ab, const Arrow& cd) {
  const ScalarProjection sp = scalar_projection<M>(ab, cd);
  return sp.alpha * sp.base_len_sq;
}

// Scalar product of vectors through representatives at the origin.
template <ModelBinding M = Euclidean>
Rational vdot(const Vector& u, const Vector& v) {
  detail::require_same_dim(u.dim(), v.dim(), "vdot");
  const Point origin = Point::zero(u.dim());
  return dot<M>(Arrow(origin, point_add(origin, u)), Arrow(origin, point_add(origin, v)));
}

// kViolated only arises under a binding whose distance is not a metric.
enum class TriangleRelation { kStrict, kEqual, kViolated };

inline std::string_view to_string(TriangleRelation r) {
  switch (r) {
    case TriangleRelation::kStrict: return "STRICT";
    case TriangleRelation::kEqual: return "EQUAL";
    case TriangleRelation::kViolated: return "VIOLATED";
  }
  return "?";
}

// |AB| + |BC| against |AC|.
template <ModelBinding M = Euclidean>
TriangleRelation triangle_cmp(const Point& a, const Point& b, const Point& c) {
  const auto order = cmp_sum_of_sqrts(M::dist_sq(a, b), M::dist_sq(b, c), M::dist_sq(a, c));
  if (order > 0) return TriangleRelation::kStrict;
  if (order == 0) return TriangleRelation::kEqual;
  return TriangleRelation::kViolated;
}

// B = A + t (C - A) for some t in [0, 1]. Purely affine; no distances.
inline bool on_segment(const Point& a, const Point& b, const Point& c) {
  if (a == c) return b == a;
  const Line ac = Line::through(a, c);
  const auto t = ac.parameter_of(b);
  return t && t->sign() >= 0 && *t <= Rational(1);
}

}  // namespace symgeo

#endif  // SYMGEO_METRIC_HPP
