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

// Model bindings. Every metric-layer operation is written against a binding
// that supplies the equivalence of arrows, the squared distance, and the
// nearest point on a line. Euclidean is the model under test; the other two
// are deliberately broken bindings used as negative controls.

#ifndef SYMGEO_MODEL_HPP
#define SYMGEO_MODEL_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "symgeo/arrow.hpp"
#include "symgeo/weyl.hpp"

namespace symgeo {

// C(S, r) with the radius stored squared.
class Circle {
 public:
  Circle(Point center, Rational radius_sq)
      : center_(std::move(center)), radius_sq_(std::move(radius_sq)) {
    if (radius_sq_.sign() <= 0) throw ModelError("positive_radius", "circle radius must be > 0");
  }

  const Point& center() const { return center_; }
  const Rational& radius_sq() const { return radius_sq_; }

 private:
  Point center_;
  Rational radius_sq_;
};

enum class LineCircle { kMiss, kTangent, kSecant };

inline std::string_view to_string(LineCircle c) {
  switch (c) {
    case LineCircle::kMiss: return "MISS";
    case LineCircle::kTangent: return "TANGENT";
    case LineCircle::kSecant: return "SECANT";
  }
  return "?";
}

template <class Derived>
struct ModelBase {
  // Classification from the smallest distance between the line and the center.
  static LineCircle line_circle_class(const Line& p, const Circle& c) {
    const Point near = Derived::nearest_point_on_line(c.center(), p);
    const auto order = Derived::dist_sq(c.center(), near) <=> c.radius_sq();
    if (order < 0) return LineCircle::kSecant;
    if (order == 0) return LineCircle::kTangent;
    return LineCircle::kMiss;
  }
};

struct Euclidean : ModelBase<Euclidean> {
  static constexpr std::string_view kName = "NONE";

  static bool equivalent(const Arrow& a, const Arrow& b) { return symgeo::equivalent(a, b); }

  static Rational dist_sq(const Point& a, const Point& b) {
    const Vector d = detail::difference(a, b);
    return detail::inner(d, d);
  }

  // argmin_t |S - (base + t dir)|^2 at t = <S - base, dir> / <dir, dir>.
  static Point nearest_point_on_line(const Point& s, const Line& p) {
    const Vector& dir = p.direction();
    return p.at(detail::inner(detail::difference(p.base(), s), dir) / detail::inner(dir, dir));
  }

  // Sign of the reduced discriminant of |base + t dir - center|^2 = r^2.
  static LineCircle line_circle_class(const Line& p, const Circle& c) {
    const Vector& dir = p.direction();
    const Vector w = detail::difference(c.center(), p.base());
    const Rational a = detail::inner(dir, dir);
    const Rational b = detail::inner(w, dir);
    const Rational cc = detail::inner(w, w) - c.radius_sq();
    const int disc = (b * b - a * cc).sign();
    if (disc > 0) return LineCircle::kSecant;
    if (disc == 0) return LineCircle::kTangent;
    return LineCircle::kMiss;
  }
};

// Negative control: taxicab distance. |AB| = sum |b_i - a_i|, stored squared.
// It is a norm, so translation invariance and homogeneity survive, but it is
// not isotropic.
struct TaxicabMetric : ModelBase<TaxicabMetric> {
  static constexpr std::string_view kName = "L1_METRIC";

  static bool equivalent(const Arrow& a, const Arrow& b) { return symgeo::equivalent(a, b); }

  static Rational l1(const Point& a, const Point& b) {
    Rational acc;
    for (std::size_t i = 0; i < a.dim(); ++i) acc += (b[i] - a[i]).abs();
    return acc;
  }

  static Rational dist_sq(const Point& a, const Point& b) {
    detail::require_same_dim(a.dim(), b.dim(), "dist_sq");
    return square(l1(a, b));
  }

  // The objective is convex and piecewise linear in t; a minimum sits on one
  // of the breakpoints. Ties go to the smallest parameter.
  static Point nearest_point_on_line(const Point& s, const Line& p) {
    std::optional<Rational> best_t;
    Rational best_value;
    for (std::size_t i = 0; i < p.dim(); ++i) {
      if (p.direction()[i].is_zero()) continue;
      Rational t = (s[i] - p.base()[i]) / p.direction()[i];
      Rational value = l1(s, p.at(t));
      if (!best_t || value < best_value || (value == best_value && t < *best_t)) {
        best_t = std::move(t);
        best_value = std::move(value);
      }
    }
    return p.at(*best_t);
  }
};

// Negative control: arrows compare only their first coordinate difference.
struct FirstCoordinateEquivalence : ModelBase<FirstCoordinateEquivalence> {
  static constexpr std::string_view kName = "X_ONLY_EQUIV";

  static bool equivalent(const Arrow& a, const Arrow& b) {
    detail::require_same_dim(a.dim(), b.dim(), "equivalent");
    return a.head[0] - a.tail[0] == b.head[0] - b.tail[0];
  }

  static Rational dist_sq(const Point& a, const Point& b) { return Euclidean::dist_sq(a, b); }
  static Point nearest_point_on_line(const Point& s, const Line& p) {
    return Euclidean::nearest_point_on_line(s, p);
  }
  static LineCircle line_circle_class(const Line& p, const Circle& c) {
    return Euclidean::line_circle_class(p, c);
  }
};

template <class M>
concept ModelBinding = requires(const Arrow& a, const Point& s, const Line& p, const Circle& c) {
  { M::equivalent(a, a) } -> std::same_as<bool>;
  { M::dist_sq(s, s) } -> std::same_as<Rational>;
  { M::nearest_point_on_line(s, p) } -> std::same_as<Point>;
  { M::line_circle_class(p, c) } -> std::same_as<LineCircle>;
};

static_assert(ModelBinding<Euclidean>);
static_assert(ModelBinding<TaxicabMetric>);
static_assert(ModelBinding<FirstCoordinateEquivalence>);

}  // namespace symgeo

#endif  // SYMGEO_MODEL_HPP
