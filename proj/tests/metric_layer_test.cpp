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

#include <random>

#include <gtest/gtest.h>

#include "symgeo/metric.hpp"

namespace symgeo {
namespace {

Point pt(const char* s) { return Point::parse(s); }
Vector vc(const char* s) { return Vector::parse(s); }
Arrow arr(const char* s) { return Arrow::parse(s); }
Rational q(long p, long d = 1) { return Rational(mpz_class(p), mpz_class(d)); }

const Line kXAxis(Point{0, 0}, Vector{1, 0});
const Line kYAxis(Point{0, 0}, Vector{0, 1});

// sum of componentwise products
Rational coordinate_dot(const Vector& u, const Vector& v) {
  Rational s;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
  return s;
}

// B on segment AC by explicit cases: coincident ends, else collinear with a
// parameter in [0, 1] read off any nonzero coordinate of C - A.
bool segment_oracle(const Point& a, const Point& b, const Point& c) {
  if (a == c) return a == b;
  std::size_t k = 0;
  while (a[k] == c[k]) ++k;
  const Rational t = (b[k] - a[k]) / (c[k] - a[k]);
  if (t < Rational() || t > Rational(1)) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] + t * (c[i] - a[i]) != b[i]) return false;
  }
  return true;
}

// Rotation of the plane by the 3-4-5 angle, about the origin.
Point rot(const Point& p) { return Point{q(3, 5) * p[0] - q(4, 5) * p[1], q(4, 5) * p[0] + q(3, 5) * p[1]}; }
Vector rot(const Vector& v) { return Vector{q(3, 5) * v[0] - q(4, 5) * v[1], q(4, 5) * v[0] + q(3, 5) * v[1]}; }
Line rot(const Line& l) { return Line(rot(l.base()), rot(l.direction())); }

class Random : public ::testing::Test {
 protected:
  Rational coord() { return q(num_(rng_), den_(rng_)); }
  Point point(std::size_t d) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < d; ++i) c.push_back(coord());
    return Point(std::move(c));
  }
  Vector vector(std::size_t d) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < d; ++i) c.push_back(coord());
    return Vector(std::move(c));
  }
  std::mt19937_64 rng_{97};
  std::uniform_int_distribution<long> num_{-100, 100};
  std::uniform_int_distribution<long> den_{1, 10};
};

TEST(Distance, Examples) {
  EXPECT_EQ(dist_sq(pt("(0,0)"), pt("(3,4)")), 25);
  EXPECT_EQ(dist_sq(pt("(1,1)"), pt("(1,1)")), 0);
  EXPECT_THROW(dist_sq(pt("(1,1)"), pt("(1,1,1)")), ModelError);
}

TEST(NearestPoint, Examples) {
  const Line diag(pt("(0,0)"), vc("(1,1)"));
  EXPECT_EQ(nearest_point_on_line(pt("(0,5)"), kXAxis), pt("(0,0)"));
  EXPECT_EQ(nearest_point_on_line(pt("(2,2)"), diag), pt("(2,2)"));
  EXPECT_EQ(nearest_point_on_line(pt("(0,2)"), diag), pt("(1,1)"));
}

TEST(LineCircle, Examples) {
  EXPECT_EQ(line_circle_class(kXAxis, Circle(pt("(0,0)"), 1)), LineCircle::kSecant);
  EXPECT_EQ(line_circle_class(kXAxis, Circle(pt("(0,1)"), 1)), LineCircle::kTangent);
  EXPECT_EQ(line_circle_class(kXAxis, Circle(pt("(0,2)"), 1)), LineCircle::kMiss);
  EXPECT_THROW(Circle(pt("(0,0)"), 0), ModelError);
}

TEST_F(Random, LineCircleAgreesWithGenericRule) {
  for (int i = 0; i < 2000; ++i) {
    const Line l(point(3), vector(3));
    const Point c = point(3);
    // a third of the radii are exactly tangent
    const Rational r_sq = i % 3 ? coord().abs() + 1 : dist_sq(c, nearest_point_on_line(c, l));
    if (r_sq.is_zero()) continue;
    const Circle circle(c, r_sq);
    ASSERT_EQ(Euclidean::line_circle_class(l, circle), Euclidean::ModelBase::line_circle_class(l, circle));
  }
}

TEST(Perpendicular, Examples) {
  EXPECT_TRUE(is_perpendicular(kXAxis, kYAxis));
  EXPECT_FALSE(is_perpendicular(kXAxis, Line(pt("(0,0)"), vc("(1,1)"))));
  EXPECT_FALSE(is_perpendicular(kXAxis, Line(pt("(0,1)"), vc("(1,0)"))));
  EXPECT_TRUE(is_perpendicular(rot(kXAxis), rot(kYAxis)));
  EXPECT_TRUE(is_perpendicular(rot(rot(Line(pt("(2,1)"), vc("(1,2)")))), rot(rot(Line(pt("(2,1)"), vc("(-2,1)"))))));
}

TEST(Perpendicular, Through) {
  EXPECT_TRUE(perpendicular_through(pt("(0,5)"), kXAxis).same_as(kYAxis));
  EXPECT_TRUE(perpendicular_through(pt("(3,0)"), kXAxis).same_as(Line(pt("(3,0)"), vc("(0,1)"))));
  const Line space(pt("(0,0,0)"), vc("(1,1,0)"));
  EXPECT_THROW(perpendicular_through(pt("(1,1,0)"), space), ModelError);
  EXPECT_THROW(perpendicular_through(pt("(1,1,0)"), space, vc("(2,2,0)")), ModelError);
  const Line l = perpendicular_through(pt("(1,1,0)"), space, vc("(0,0,1)"));
  EXPECT_TRUE(l.same_as(Line(pt("(1,1,0)"), vc("(0,0,1)"))));
}

TEST_F(Random, PerpendicularSurvivesRotation) {
  for (int i = 0; i < 1000; ++i) {
    const Line p(point(2), vector(2));
    if (p.direction().is_zero()) continue;
    const Point s = point(2);
    const Line l = perpendicular_through(s, p);
    ASSERT_TRUE(is_perpendicular(l, p));
    ASSERT_TRUE(is_perpendicular(rot(l), rot(p)));
    ASSERT_TRUE(coordinate_dot(l.direction(), p.direction()).is_zero());
  }
}

TEST(ScalarProjection, Examples) {
  const ScalarProjection sp = scalar_projection(arr("(0,0)->(3,4)"), arr("(0,0)->(5,0)"));
  EXPECT_EQ(sp.alpha, q(3, 5));
  EXPECT_EQ(sp.base_len_sq, 25);
  const Arrow a = arr("(1,2)->(-3,7)");
  EXPECT_EQ(scalar_projection(a, a).alpha, 1);
  EXPECT_EQ(scalar_projection(a, Arrow::null_at(pt("(4,4)"))), (ScalarProjection{0, 0}));
}

TEST(Dot, Examples) {
  EXPECT_EQ(dot(arr("(0,0)->(3,4)"), arr("(0,0)->(5,0)")), 15);
  EXPECT_EQ(dot(arr("(0,0)->(3,4)"), arr("(0,0)->(3,4)")), 25);
  EXPECT_EQ(dot(arr("(0,0)->(0,1)"), arr("(0,0)->(1,0)")), 0);
  EXPECT_EQ(vdot(vc("(1,0)"), vc("(0,1)")), 0);
  EXPECT_EQ(vdot(vc("(3,4)"), vc("(5,0)")), 15);
  EXPECT_THROW(vdot(vc("(3,4)"), vc("(5)")), ModelError);
}

TEST_F(Random, VdotMatchesCoordinateOracle) {
  for (std::size_t d = 1; d <= 4; ++d) {
    for (int i = 0; i < 1000; ++i) {
      const Vector u = vector(d), v = vector(d);
      ASSERT_EQ(vdot(u, v), coordinate_dot(u, v));
    }
  }
}

TEST_F(Random, DotIsTranslationInvariant) {
  for (int i = 0; i < 1000; ++i) {
    const Arrow a(point(3), point(3)), b(point(3), point(3));
    ASSERT_EQ(dot(a, b), dot(translate(a, point(3)), translate(b, point(3))));
    ASSERT_EQ(dot(a, b), dot(b, a));
  }
}

TEST(Triangle, Examples) {
  EXPECT_EQ(triangle_cmp(pt("(0,0)"), pt("(1,0)"), pt("(2,0)")), TriangleRelation::kEqual);
  EXPECT_EQ(triangle_cmp(pt("(0,0)"), pt("(0,1)"), pt("(2,0)")), TriangleRelation::kStrict);
  EXPECT_EQ(triangle_cmp(pt("(0,0)"), pt("(3,4)"), pt("(6,8)")), TriangleRelation::kEqual);
  EXPECT_TRUE(segment_oracle(pt("(0,0)"), pt("(3,4)"), pt("(6,8)")));
  EXPECT_EQ(to_string(TriangleRelation::kEqual), "EQUAL");
}

TEST_F(Random, TriangleEqualityIsSegmentMembership) {
  std::uniform_int_distribution<int> kind(0, 3);
  for (std::size_t d = 1; d <= 4; ++d) {
    for (int i = 0; i < 1000; ++i) {
      const Point a = point(d), c = point(d);
      Point b = point(d);
      switch (kind(rng_)) {
        case 0: b = point_add(a, smul(q(num_(rng_), 100), detail::difference(a, c))); break;
        case 1: b = i % 2 ? a : c; break;
        default: break;
      }
      const TriangleRelation r = triangle_cmp(a, b, c);
      ASSERT_NE(r, TriangleRelation::kViolated);
      ASSERT_EQ(r == TriangleRelation::kEqual, segment_oracle(a, b, c));
      ASSERT_EQ(on_segment(a, b, c), segment_oracle(a, b, c));
    }
  }
}

TEST(Taxicab, NearestPointAndCircles) {
  using M = TaxicabMetric;
  EXPECT_EQ(M::dist_sq(pt("(0,0)"), pt("(3,4)")), 49);
  // along the diagonal the taxicab minimum is flat; ties pick the smallest t
  EXPECT_EQ(M::nearest_point_on_line(pt("(0,2)"), Line(pt("(0,0)"), vc("(1,1)"))), pt("(0,0)"));
  EXPECT_EQ(M::nearest_point_on_line(pt("(0,5)"), kXAxis), pt("(0,0)"));
  EXPECT_EQ(M::line_circle_class(kXAxis, Circle(pt("(0,1)"), 1)), LineCircle::kTangent);
  // not isotropic: (1,0) and (3/5,4/5) have different taxicab lengths
  EXPECT_NE(M::dist_sq(pt("(0,0)"), pt("(1,0)")), M::dist_sq(pt("(0,0)"), rot(pt("(1,0)"))));
}

TEST(FirstCoordinateEquivalence, IgnoresOtherCoordinates) {
  using M = FirstCoordinateEquivalence;
  EXPECT_TRUE(M::equivalent(arr("(0,0)->(1,2)"), arr("(0,0)->(1,3)")));
  EXPECT_FALSE(symgeo::equivalent(arr("(0,0)->(1,2)"), arr("(0,0)->(1,3)")));
  EXPECT_EQ(M::dist_sq(pt("(0,0)"), pt("(3,4)")), 25);
}

}  // namespace
}  // namespace symgeo
