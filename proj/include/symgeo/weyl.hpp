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

// Vectors as classes of equivalent arrows, the affine action on points, lines,
// and parallel projection onto a line.

#ifndef SYMGEO_WEYL_HPP
#define SYMGEO_WEYL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "symgeo/arrow.hpp"
#include "symgeo/scalar_arrows.hpp"

namespace symgeo {

// The class of AB, represented by head - tail.
inline Vector vec(const Arrow& a) { return detail::difference(a.tail, a.head); }

// The unique X with vec(AX) = v.
inline Point point_add(const Point& a, const Vector& v) { return detail::offset(a, v); }

inline Vector vadd(const Vector& u, const Vector& v) { return detail::sum(u, v); }
inline Vector vneg(const Vector& u) { return detail::scaled(Rational(-1), u); }
inline Vector smul(const Rational& lambda, const Vector& u) { return detail::scaled(lambda, u); }
inline Vector zero_vector(std::size_t d) { return Vector::zero(d); }

inline bool parallel(const Vector& u, const Vector& v) { return detail::dependent(u, v); }

class Line {
 public:
  Line(Point base, Vector direction) : base_(std::move(base)), direction_(std::move(direction)) {
    detail::require_same_dim(base_.dim(), direction_.dim(), "line");
    if (direction_.is_zero()) throw ModelError("nonzero_direction", "line direction is zero");
  }

  // p(A, B), the line through two distinct points.
  static Line through(const Point& a, const Point& b) {
    if (a == b) throw ModelError("distinct_points", "line through coincident points");
    return Line(a, detail::difference(a, b));
  }

  const Point& base() const { return base_; }
  const Vector& direction() const { return direction_; }
  std::size_t dim() const { return base_.dim(); }

  Point at(const Rational& t) const { return point_add(base_, smul(t, direction_)); }

  // The t with at(t) == p, if p lies on the line.
  std::optional<Rational> parameter_of(const Point& p) const {
    const Vector offset = detail::difference(base_, p);
    std::optional<Rational> t;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!direction_[i].is_zero()) {
        t = offset[i] / direction_[i];
        break;
      }
    }
    if (at(*t) != p) return std::nullopt;
    return t;
  }

  bool contains(const Point& p) const { return parameter_of(p).has_value(); }

  // Same point set, whatever the representation.
  bool same_as(const Line& other) const {
    return parallel(direction_, other.direction_) && contains(other.base_);
  }

  std::string str() const { return base_.str() + " + t" + direction_.str(); }

 private:
  Point base_;
  Vector direction_;
};

inline bool parallel(const Line& a, const Line& b) { return parallel(a.direction(), b.direction()); }

// Quadrilateral ABCD in cyclic order; a parallelogram when AB ~ DC.
struct Quadrilateral {
  Point a, b, c, d;
};

inline bool diagonals_bisect(const Quadrilateral& q) {
  return midpoint(q.a, q.c) == midpoint(q.b, q.d);
}

namespace detail {

enum class SystemKind { kUnique, kDependentColumns, kInconsistent };

struct TwoUnknowns {
  SystemKind kind;
  Rational s, t;
};

// Solves s*u + t*v = w over d equations. Picks a pair of rows with nonzero
// determinant and checks the solution against every row.
inline TwoUnknowns solve_two(const Vector& u, const Vector& v, const Vector& w) {
  const std::size_t d = u.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const Rational det = u[i] * v[j] - u[j] * v[i];
      if (det.is_zero()) continue;
      Rational s = (w[i] * v[j] - w[j] * v[i]) / det;
      Rational t = (u[i] * w[j] - u[j] * w[i]) / det;
      for (std::size_t k = 0; k < d; ++k) {
        if (s * u[k] + t * v[k] != w[k]) return {SystemKind::kInconsistent, {}, {}};
      }
      return {SystemKind::kUnique, std::move(s), std::move(t)};
    }
  }
  return {SystemKind::kDependentColumns, {}, {}};
}

}  // namespace detail

// The single common point of two lines, if there is exactly one.
inline std::optional<Point> intersection(const Line& a, const Line& b) {
  detail::require_same_dim(a.dim(), b.dim(), "intersection");
  if (parallel(a, b)) return std::nullopt;
  // a.base + s a.dir = b.base + t b.dir
  auto sol = detail::solve_two(a.direction(), vneg(b.direction()),
                               detail::difference(a.base(), b.base()));
  if (sol.kind != detail::SystemKind::kUnique) return std::nullopt;
  return a.at(sol.s);
}

// P_{g,p}(S): the point where the line through S with direction g meets p.
// Requires S, g and p to lie in one plane (always true in dimension 2).
inline Point parallel_project(const Vector& g, const Line& p, const Point& s) {
  detail::require_same_dim(g.dim(), p.dim(), "parallel_project");
  detail::require_same_dim(s.dim(), p.dim(), "parallel_project");
  if (g.is_zero()) throw ModelError("nonzero_direction", "projection direction is zero");
  if (parallel(g, p.direction())) {
    if (p.contains(s)) return s;
    throw ModelError("projection_intersects", "projection direction parallel to target line");
  }
  // s + a g = base + t dir
  auto sol = detail::solve_two(g, vneg(p.direction()), detail::difference(s, p.base()));
  if (sol.kind != detail::SystemKind::kUnique) {
    throw ModelError("coplanar", "point, direction and line do not share a plane");
  }
  return p.at(sol.t);
}

inline Arrow parallel_project(const Vector& g, const Line& p, const Arrow& a) {
  return Arrow(parallel_project(g, p, a.tail), parallel_project(g, p, a.head));
}

}  // namespace symgeo

#endif  // SYMGEO_WEYL_HPP
