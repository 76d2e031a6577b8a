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

// Seeded instance generation. A case is fully determined by its 64-bit seed
// and the shrink level; properties pull values from a Gen and every named
// value is recorded so a failing case can be printed and replayed.

#ifndef SYMGEO_HARNESS_GEN_HPP
#define SYMGEO_HARNESS_GEN_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symgeo/arrow.hpp"
#include "symgeo/harness/config.hpp"
#include "symgeo/weyl.hpp"

namespace symgeo::harness {

// Thrown by Gen::assume when a generated case misses a property's hypothesis.
struct Discard {};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Seed of attempt `attempt` of case `index` of one property in one dimension.
inline std::uint64_t case_seed(std::uint64_t seed, std::string_view property_id, int dim,
                               long index, int attempt) {
  std::uint64_t h = splitmix64(seed ^ fnv1a(property_id));
  h = splitmix64(h ^ static_cast<std::uint64_t>(dim));
  h = splitmix64(h ^ static_cast<std::uint64_t>(index));
  return splitmix64(h ^ (static_cast<std::uint64_t>(attempt) << 32));
}

// An axis-aligned plane: coordinates i and j vary, the rest are fixed by origin.
struct CoordinatePlane {
  std::size_t i = 0, j = 1;
  Point origin = Point::zero(2);

  Point embed(const Rational& x, const Rational& y) const {
    std::vector<Rational> c(origin.coords().begin(), origin.coords().end());
    c[i] += x;
    c[j] += y;
    return Point(std::move(c));
  }
  Vector embed_vector(const Rational& x, const Rational& y) const {
    std::vector<Rational> c(origin.dim());
    c[i] = x;
    c[j] = y;
    return Vector(std::move(c));
  }
  Vector u() const { return embed_vector(1, 0); }
  Vector v() const { return embed_vector(0, 1); }
  // In-plane coordinates of a point of the plane.
  std::pair<Rational, Rational> local(const Point& p) const {
    return {p[i] - origin[i], p[j] - origin[j]};
  }
};

// (cos, sin) of a rational rotation: a product of Pythagorean-triple angles.
struct Rotation {
  Rational c = 1, s = 0;
};

class Gen {
 public:
  using Bindings = std::vector<std::pair<std::string, std::string>>;

  Gen(const ModelConfig& config, std::uint64_t seed, unsigned shrink = 0)
      : config_(config), rng_(seed), shrink_(shrink) {}

  std::size_t dim() const { return static_cast<std::size_t>(config_.dimension); }
  unsigned shrink_level() const { return shrink_; }
  const Bindings& bindings() const { return bindings_; }

  void assume(bool condition) {
    if (!condition) throw Discard{};
  }

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p; }
  bool degenerate() { return config_.degenerate_rate > 0 && chance(config_.degenerate_rate); }

  // Numerators shrink toward zero by shift; denominators are left alone.
  Rational coord() {
    long p = shrunk(uniform(-config_.coord_numerator_bound, config_.coord_numerator_bound));
    long q = uniform(1, config_.coord_denominator_bound);
    return Rational(mpz_class(p), mpz_class(q));
  }

  Rational nonzero_coord() {
    long p = std::max(1L, shrunk(uniform(1, config_.coord_numerator_bound)));
    if (chance(0.5)) p = -p;
    return Rational(mpz_class(p), mpz_class(uniform(1, config_.coord_denominator_bound)));
  }

  Rational scalar() {
    if (degenerate()) return Rational();
    long p = shrunk(uniform(-kScalarNumeratorBound, kScalarNumeratorBound));
    return Rational(mpz_class(p), mpz_class(uniform(1, config_.coord_denominator_bound)));
  }

  Rational nonzero_scalar() {
    long p = uniform(1, kScalarNumeratorBound);
    p = std::max(1L, shrunk(p));
    if (chance(0.5)) p = -p;
    return Rational(mpz_class(p), mpz_class(uniform(1, config_.coord_denominator_bound)));
  }

  Rational positive_scalar() { return nonzero_scalar().abs(); }

  Point point(std::string_view name) {
    auto special = degenerate_point(history_);
    Point p = special ? *special : fresh_point();
    history_.push_back(p);
    return note(name, p);
  }

  Vector vector(std::string_view name) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < dim(); ++i) c.push_back(degenerate() ? Rational() : coord());
    return note(name, Vector(std::move(c)));
  }

  // Shrunk draws may all vanish; one coordinate is then forced nonzero.
  Vector nonzero_vector(std::string_view name) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < dim(); ++i) c.push_back(coord());
    if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_zero(); })) {
      c[static_cast<std::size_t>(uniform(0, static_cast<long>(dim()) - 1))] = nonzero_coord();
    }
    return note(name, Vector(std::move(c)));
  }

  Arrow arrow(std::string_view tail_name, std::string_view head_name) {
    Point t = point(tail_name);
    Point h = point(head_name);
    return Arrow(std::move(t), std::move(h));
  }

  Line line(std::string_view name) {
    Point base = fresh_point();
    Vector dir = nonzero_vector(std::string(name) + ".dir");
    note(std::string(name) + ".base", base);
    return Line(std::move(base), std::move(dir));
  }

  CoordinatePlane plane() {
    CoordinatePlane pl;
    if (dim() == 2) {
      pl.origin = Point::zero(2);
    } else {
      pl.i = static_cast<std::size_t>(uniform(0, static_cast<long>(dim()) - 2));
      pl.j = static_cast<std::size_t>(uniform(static_cast<long>(pl.i) + 1, static_cast<long>(dim()) - 1));
      std::vector<Rational> c;
      for (std::size_t k = 0; k < dim(); ++k) c.push_back(k == pl.i || k == pl.j ? Rational() : coord());
      pl.origin = Point(std::move(c));
    }
    bindings_.emplace_back("plane", "axes " + std::to_string(pl.i) + "," + std::to_string(pl.j) +
                                        " through " + pl.origin.str());
    return pl;
  }

  Point plane_point(const CoordinatePlane& pl, std::string_view name) {
    auto special = degenerate_point(plane_history_);
    Point p = special ? *special : pl.embed(coord(), coord());
    plane_history_.push_back(p);
    history_.push_back(p);
    return note(name, p);
  }

  Vector plane_vector(const CoordinatePlane& pl, std::string_view name) {
    Rational x = coord(), y = coord();
    if (x.is_zero() && y.is_zero()) (chance(0.5) ? x : y) = nonzero_coord();
    return note(name, pl.embed_vector(std::move(x), std::move(y)));
  }

  Line plane_line(const CoordinatePlane& pl, std::string_view name) {
    Point base = pl.embed(coord(), coord());
    note(std::string(name) + ".base", base);
    return Line(std::move(base), plane_vector(pl, std::string(name) + ".dir"));
  }

  Rotation rotation() {
    static constexpr long kTriples[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}, {20, 21, 29}};
    Rotation r;
    const long steps = uniform(1, 2);
    for (long k = 0; k < steps; ++k) {
      const auto& t = kTriples[uniform(0, 4)];
      Rational c{mpz_class(t[0]), mpz_class(t[2])};
      Rational s{mpz_class(t[1]), mpz_class(t[2])};
      if (chance(0.5)) std::swap(c, s);
      if (chance(0.5)) c = -c;
      if (chance(0.5)) s = -s;
      r = Rotation{r.c * c - r.s * s, r.s * c + r.c * s};
    }
    return r;
  }

  // Records a derived value under a name; returns it unchanged.
  template <class T>
  const T& note(std::string_view name, const T& value) {
    bindings_.emplace_back(std::string(name), to_text(value));
    return value;
  }

 private:
  static std::string to_text(const Rational& r) { return r.str(); }
  static std::string to_text(const Point& p) { return p.str(); }
  static std::string to_text(const Vector& v) { return v.str(); }
  static std::string to_text(const Arrow& a) { return a.str(); }
  static std::string to_text(const Line& l) { return l.str(); }
  static std::string to_text(const std::string& s) { return s; }
  static std::string to_text(const char* s) { return s; }
  static std::string to_text(bool b) { return b ? "true" : "false"; }
  static std::string to_text(long v) { return std::to_string(v); }

  long shrunk(long p) const {
    if (shrink_ == 0) return p;
    const long mag = (p < 0 ? -p : p) >> std::min(shrink_, 62u);
    return p < 0 ? -mag : mag;
  }

  Point fresh_point() {
    std::vector<Rational> c;
    c.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) c.push_back(coord());
    return Point(std::move(c));
  }

  // Coincident with an earlier point, or on the line through two earlier ones.
  std::optional<Point> degenerate_point(const std::vector<Point>& earlier) {
    if (earlier.empty() || !degenerate()) return std::nullopt;
    const auto pick = [&] { return earlier[static_cast<std::size_t>(uniform(0, static_cast<long>(earlier.size()) - 1))]; };
    if (earlier.size() < 2 || chance(0.5)) return pick();
    const Point a = pick();
    const Point b = pick();
    const Rational t(mpz_class(uniform(-4, 8)), mpz_class(4));
    return point_add(a, smul(t, detail::difference(a, b)));
  }

  const ModelConfig& config_;
  std::mt19937_64 rng_;
  unsigned shrink_;
  Bindings bindings_;
  std::vector<Point> history_;
  std::vector<Point> plane_history_;
};

// Rotates p about center inside the plane.
inline Point rotate_in_plane(const CoordinatePlane& pl, const Point& center, const Point& p,
                             const Rotation& r) {
  const auto [cx, cy] = pl.local(center);
  const auto [px, py] = pl.local(p);
  const Rational dx = px - cx, dy = py - cy;
  return pl.embed(cx + r.c * dx - r.s * dy, cy + r.s * dx + r.c * dy);
}

}  // namespace symgeo::harness

#endif  // SYMGEO_HARNESS_GEN_HPP
