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

#ifndef FLOWERDOM_DOMINATION_HPP_
#define FLOWERDOM_DOMINATION_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flowerdom/flower_graph.hpp"
#include "flowerdom/vertex.hpp"
#include "flowerdom/vertex_set.hpp"

namespace flowerdom {

using VertexPair = std::pair<Vertex, Vertex>;

// A vertex set D together with an explicit pairing of its members. The
// pairing is a claim made by whoever built the set; verification never
// trusts it.
struct PairedSet {
  std::vector<Vertex> members;
  std::vector<VertexPair> pairs;

  // Members are the union of the pairs, in first-seen order.
  static PairedSet FromPairs(std::vector<VertexPair> pairs);

  // Sorts members, orders each pair internally and sorts the pair list.
  void canonicalize();
  PairedSet canonical() const {
    PairedSet copy = *this;
    copy.canonicalize();
    return copy;
  }

  std::size_t size() const { return members.size(); }

  friend bool operator==(const PairedSet&, const PairedSet&) = default;
};

// Members as a bitset over g. Throws LookupError for foreign vertices.
VertexSet to_vertex_set(const FlowerGraph& g, const std::vector<Vertex>& members);

// Every vertex outside d lies within distance k of some member of d.
// Throws DomainError for k < 1. An empty d never dominates.
bool is_k_dominating(const FlowerGraph& g, const VertexSet& d, int k);
bool is_k_dominating(const FlowerGraph& g, const std::vector<Vertex>& d, int k);

// Per-vertex distance to the nearest member of d (multi-source BFS), capped
// at limit+1 for vertices farther than limit.
std::vector<int> distance_to_set(const FlowerGraph& g, const VertexSet& d,
                                 int limit);

enum class PairingFailure {
  kNone,
  kEmpty,
  kUnknownVertex,
  kDuplicateMember,
  kParity,
  kPairNotMember,
  kPairOverlap,
  kPairNotEdge,
  kUnpairedMember,
  kNotDominating,
};

// Stable kebab-case identifiers ("parity", "pair-not-edge", ...).
std::string_view failure_name(PairingFailure failure);

// Outcome of checking a PairedSet: the first failed condition plus the
// vertex or pair that witnesses it.
struct Verdict {
  PairingFailure failure = PairingFailure::kNone;
  std::optional<Vertex> witness;
  std::optional<VertexPair> pair;
  std::string message;

  bool valid() const { return failure == PairingFailure::kNone; }
  explicit operator bool() const { return valid(); }
};

// Checks, in order: non-empty, members known and distinct, even size, each
// pair made of two distinct members not used elsewhere and adjacent in g,
// every member paired, and k-distance domination. Throws DomainError for
// k < 1; everything else is reported through the verdict.
Verdict is_k_paired_dominating(const FlowerGraph& g, const PairedSet& d, int k);

// Pair counts by endpoint degree class: both petal-interior (degree 2),
// both hubs (degree 4), or mixed.
struct PairClassification {
  int vv = 0;
  int uu = 0;
  int vu = 0;

  int total() const { return vv + uu + vu; }
  friend bool operator==(const PairClassification&,
                         const PairClassification&) = default;
};

PairClassification classify_pairs(const FlowerGraph& g, const PairedSet& d);

}  // namespace flowerdom

#endif  // FLOWERDOM_DOMINATION_HPP_
