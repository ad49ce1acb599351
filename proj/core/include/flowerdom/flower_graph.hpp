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

#ifndef FLOWERDOM_FLOWER_GRAPH_HPP_
#define FLOWERDOM_FLOWER_GRAPH_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "flowerdom/vertex.hpp"
#include "flowerdom/vertex_set.hpp"

namespace flowerdom {

// The pair (n, m) of f_{n x m}: n hubs on a central cycle, each consecutive
// hub pair closed into an m-cycle (a petal) by m-2 degree-two vertices.
struct FlowerParams {
  int n = 3;
  int m = 3;

  // Throws DomainError unless n >= 3 and m >= 3.
  void validate() const;

  friend bool operator==(const FlowerParams&, const FlowerParams&) = default;
};

// Immutable flower graph f_{n x m}.
//
// Vertices are densely indexed: hub u_i has index i-1, petal vertex v_{i,j}
// has index n + (i-1)(m-2) + (j-1). Index order is the canonical vertex order.
// Neighbor lists are sorted by index.
class FlowerGraph {
 public:
  // Throws DomainError for n < 3 or m < 3.
  explicit FlowerGraph(FlowerParams params);
  FlowerGraph(int n, int m) : FlowerGraph(FlowerParams{n, m}) {}

  const FlowerParams& params() const { return params_; }
  int n() const { return params_.n; }
  int m() const { return params_.m; }

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  bool contains(const Vertex& v) const;
  // Throws LookupError for vertices outside the graph.
  std::size_t index_of(const Vertex& v) const;
  Vertex vertex_at(std::size_t index) const;

  std::span<const std::size_t> neighbors(std::size_t index) const {
    return adjacency_[index];
  }
  std::size_t degree(std::size_t index) const {
    return adjacency_[index].size();
  }
  bool adjacent(std::size_t a, std::size_t b) const;
  bool adjacent(const Vertex& a, const Vertex& b) const {
    return adjacent(index_of(a), index_of(b));
  }

  // All edges (a < b by index), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  // Shortest-path length; 0 iff a == b.
  int distance(const Vertex& a, const Vertex& b) const;
  // BFS distances from one vertex to every vertex.
  std::vector<int> distances_from(std::size_t source) const;

  // {w : d(v, w) <= k}, v included. Throws DomainError for k < 0.
  VertexSet k_ball(const Vertex& v, int k) const;
  VertexSet k_ball(std::size_t index, int k) const;

  // Cyclic automorphism: shifts the petal/hub index by `shift` (mod n).
  Vertex rotate(const Vertex& v, int shift) const;

  // Hub index i wrapped into 1..n.
  int wrap(int i) const;

  // Indices of the m-2 interior vertices of petal i (1-based, wrapped).
  std::vector<std::size_t> petal_interior(int i) const;

  VertexSet empty_set() const { return VertexSet(num_vertices()); }
  VertexSet all_vertices() const;

 private:
  FlowerParams params_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t num_edges_ = 0;
};

}  // namespace flowerdom

#endif  // FLOWERDOM_FLOWER_GRAPH_HPP_
