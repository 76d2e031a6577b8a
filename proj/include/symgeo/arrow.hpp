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

// Arrows (ordered point pairs) and the equivalence "same relative position"
// with the operations that respect it.

#ifndef SYMGEO_ARROW_HPP
#define SYMGEO_ARROW_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "symgeo/coords.hpp"

namespace symgeo {

struct Arrow {
  Point tail;
  Point head;

  Arrow(Point t, Point h) : tail(std::move(t)), head(std::move(h)) {
    detail::require_same_dim(tail.dim(), head.dim(), "arrow");
  }

  // The null arrow AA.
  static Arrow null_at(const Point& a) { return Arrow(a, a); }

  std::size_t dim() const { return tail.dim(); }
  bool is_null() const { return tail == head; }

  // Structural identity; see equivalent() for the relation ~.
  friend bool operator==(const Arrow&, const Arrow&) = default;

  // "(a, b)->(c, d)"
  std::string str() const { return tail.str() + "->" + head.str(); }

  static Arrow parse(std::string_view text) {
    detail::Cursor cur(text);
    Point t = Point::parse_from(cur);
    cur.expect("->");
    Point h = Point::parse_from(cur);
    cur.expect_end();
    if (t.dim() != h.dim()) throw ParseError(0, "tail and head dimensions differ");
    return Arrow(std::move(t), std::move(h));
  }
};

inline std::ostream& operator<<(std::ostream& os, const Arrow& a) { return os << a.str(); }

// AB ~ CD in the coordinate model: equal coordinate differences.
inline bool equivalent(const Arrow& a, const Arrow& b) {
  detail::require_same_dim(a.dim(), b.dim(), "equivalent");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.head[i] - a.tail[i] != b.head[i] - b.tail[i]) return false;
  }
  return true;
}

// AB -> BA
inline Arrow invert(const Arrow& a) { return Arrow(a.head, a.tail); }

// The unique arrow from new_tail equivalent to a.
inline Arrow translate(const Arrow& a, const Point& new_tail) {
  detail::require_same_dim(a.dim(), new_tail.dim(), "translate");
  return Arrow(new_tail, detail::offset(new_tail, detail::difference(a.tail, a.head)));
}

// AB + CD = AB + BX where BX ~ CD. Translation always exists in the model.
inline Arrow add(const Arrow& a, const Arrow& b) {
  detail::require_same_dim(a.dim(), b.dim(), "add");
  return Arrow(a.tail, translate(b, a.head).head);
}

}  // namespace symgeo

#endif  // SYMGEO_ARROW_HPP
