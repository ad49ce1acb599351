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

#ifndef FLOWERDOM_MATCHING_HPP_
#define FLOWERDOM_MATCHING_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "flowerdom/flower_graph.hpp"
#include "flowerdom/vertex_set.hpp"

namespace flowerdom {

inline constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

// Maximum-cardinality matching of an arbitrary simple graph given as
// adjacency lists, using Edmonds' blossom algorithm (augmenting paths with
// odd-cycle contraction). Returns mate[v], or kUnmatched.
//
// O(V^3); meant for the induced subgraphs this library checks, not for
// large sparse inputs.
std::vector<std::size_t> edmonds_mates(
    const std::vector<std::vector<std::size_t>>& adjacency);

// A maximum matching of the subgraph of `g` induced by `s`, as index pairs
// (a < b), sorted.
std::vector<std::pair<std::size_t, std::size_t>> max_matching(
    const FlowerGraph& g, const VertexSet& s);

// True iff the subgraph induced by `s` has a perfect matching. The empty set
// is vacuously perfectly matchable.
bool has_perfect_matching(const FlowerGraph& g, const VertexSet& s);

}  // namespace flowerdom

#endif  // FLOWERDOM_MATCHING_HPP_
