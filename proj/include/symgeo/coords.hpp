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

// Coordinate tuples. Point and Vector share storage but are distinct types, so
// only the affine combinations that make sense compile.

#ifndef SYMGEO_COORDS_HPP
#define SYMGEO_COORDS_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symgeo/errors.hpp"
#include "symgeo/rational.hpp"

namespace symgeo {

inline constexpr std::size_t kMinDimension = 1;
inline constexpr std::size_t kMaxDimension = 4;

namespace detail {

inline void check_dimension(std::size_t d) {
  if (d < kMinDimension || d > kMaxDimension) {
    throw ModelError("dimension_range",
                     "dimension " + std::to_string(d) + " outside [1, 4]");
  }
}

inline void require_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw ModelError("dimension_match", std::string(op) + ": dimension " + std::to_string(a) +
                                            " vs " + std::to_string(b));
  }
}

template <class Tag>
class CoordTuple {
 public:
  explicit CoordTuple(std::vector<Rational> coords) : coords_(std::move(coords)) {
    check_dimension(coords_.size());
  }
  CoordTuple(std::initializer_list<Rational> coords) : CoordTuple(std::vector<Rational>(coords)) {}

  static CoordTuple zero(std::size_t d) { return CoordTuple(std::vector<Rational>(d)); }

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const CoordTuple&, const CoordTuple&) = default;

  // "(p/q, r/s, ...)"
  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += ", ";
      out += coords_[i].str();
    }
    return out + ")";
  }

  static CoordTuple parse(std::string_view text) {
    Cursor cur(text);
    CoordTuple t = parse_from(cur);
    cur.expect_end();
    return t;
  }

  static CoordTuple parse_from(Cursor& cur) {
    cur.expect('(');
    std::vector<Rational> coords;
    coords.push_back(Rational::parse_from(cur));
    while (cur.accept(',')) coords.push_back(Rational::parse_from(cur));
    std::size_t at = cur.position();
    cur.expect(')');
    if (coords.size() > kMaxDimension) throw ParseError(at, "more than 4 coordinates");
    return CoordTuple(std::move(coords));
  }

 private:
  std::vector<Rational> coords_;
};

template <class Tag>
std::ostream& operator<<(std::ostream& os, const CoordTuple<Tag>& t) {
  return os << t.str();
}

struct PointTag {};
struct VectorTag {};

}  // namespace detail

// An element of the model space: d exact coordinates, 1 <= d <= 4.
using Point = detail::CoordTuple<detail::PointTag>;

// A translation class; the canonical representative head - tail of its arrows.
using Vector = detail::CoordTuple<detail::VectorTag>;

namespace detail {

inline Vector difference(const Point& from, const Point& to) {
  require_same_dim(from.dim(), to.dim(), "difference");
  std::vector<Rational> out;
  out.reserve(to.dim());
  for (std::size_t i = 0; i < to.dim(); ++i) out.push_back(to[i] - from[i]);
  return Vector(std::move(out));
}

inline Point offset(const Point& p, const Vector& v) {
  require_same_dim(p.dim(), v.dim(), "offset");
  std::vector<Rational> out;
  out.reserve(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) out.push_back(p[i] + v[i]);
  return Point(std::move(out));
}

inline Vector scaled(const Rational& lambda, const Vector& v) {
  std::vector<Rational> out;
  out.reserve(v.dim());
  for (const auto& c : v.coords()) out.push_back(lambda * c);
  return Vector(std::move(out));
}

inline Vector sum(const Vector& u, const Vector& v) {
  require_same_dim(u.dim(), v.dim(), "vector sum");
  std::vector<Rational> out;
  out.reserve(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out.push_back(u[i] + v[i]);
  return Vector(std::move(out));
}

inline Rational inner(const Vector& u, const Vector& v) {
  require_same_dim(u.dim(), v.dim(), "inner product");
  Rational acc;
  for (std::size_t i = 0; i < u.dim(); ++i) acc += u[i] * v[i];
  return acc;
}

// True iff u and v are linearly dependent (every 2x2 minor vanishes).
inline bool dependent(const Vector& u, const Vector& v) {
  require_same_dim(u.dim(), v.dim(), "dependence test");
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::size_t j = i + 1; j < u.dim(); ++j) {
      if (u[i] * v[j] != u[j] * v[i]) return false;
    }
  }
  return true;
}

}  // namespace detail

}  // namespace symgeo

#endif  // SYMGEO_COORDS_HPP
