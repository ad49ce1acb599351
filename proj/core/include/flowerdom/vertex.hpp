// Copyright 2026 The flowerdom Authors
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

#ifndef FLOWERDOM_VERTEX_HPP_
#define FLOWERDOM_VERTEX_HPP_

#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace flowerdom {

// Thrown for parameters outside the supported domain (n < 3, m < 3, k < 1...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a vertex does not belong to the graph it is used with.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A vertex of a flower graph, labelled the way the literature does:
// hubs u_i (1 <= i <= n) and petal-interior vertices v_{i,j}
// (1 <= i <= n, 1 <= j <= m-2).
//
// Vertices order hubs first (by i), then petal vertices by (i, j). This is
// the canonical order used for every sorted output.
struct Vertex {
  enum class Kind : unsigned char { kHub = 0, kPetal = 1 };

  Kind kind = Kind::kHub;
  int petal = 1;     // i
  int position = 0;  // j; always 0 for hubs

  static constexpr Vertex Hub(int i) { return Vertex{Kind::kHub, i, 0}; }
  static constexpr Vertex Petal(int i, int j) {
    return Vertex{Kind::kPetal, i, j};
  }

  constexpr bool is_hub() const { return kind == Kind::kHub; }

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

// "u<i>" or "v<i>.<j>".
std::string to_string(const Vertex& v);

// Inverse of to_string. Returns nullopt for anything that is not a
// well-formed canonical name; range checks against a graph are separate.
std::optional<Vertex> parse_vertex(std::string_view text);

inline std::ostream& operator<<(std::ostream& os, const Vertex& v) {
  return os << to_string(v);
}

}  // namespace flowerdom

#endif  // FLOWERDOM_VERTEX_HPP_
