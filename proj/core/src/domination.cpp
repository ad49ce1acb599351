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

#include "flowerdom/domination.hpp"

#include <algorithm>
#include <deque>

namespace flowerdom {
namespace {

void require_radius(int k) {
  if (k < 1) throw DomainError("distance k must be >= 1, got " + std::to_string(k));
}

Verdict fail(PairingFailure failure, std::string message,
             std::optional<Vertex> witness = std::nullopt,
             std::optional<VertexPair> pair = std::nullopt) {
  Verdict v;
  v.failure = failure;
  v.witness = witness;
  v.pair = pair;
  v.message = std::move(message);
  return v;
}

std::string pair_text(const VertexPair& p) {
  return "(" + to_string(p.first) + ", " + to_string(p.second) + ")";
}

}  // namespace

PairedSet PairedSet::FromPairs(std::vector<VertexPair> pairs) {
  PairedSet out;
  for (const auto& [a, b] : pairs) {
    out.members.push_back(a);
    out.members.push_back(b);
  }
  out.pairs = std::move(pairs);
  return out;
}

void PairedSet::canonicalize() {
  std::sort(members.begin(), members.end());
  for (auto& [a, b] : pairs) {
    if (b < a) std::swap(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
}

VertexSet to_vertex_set(const FlowerGraph& g, const std::vector<Vertex>& members) {
  VertexSet set(g.num_vertices());
  for (const auto& v : members) set.insert(g.index_of(v));
  return set;
}

std::vector<int> distance_to_set(const FlowerGraph& g, const VertexSet& d,
                                 int limit) {
  const int far = limit + 1;
  std::vector<int> dist(g.num_vertices(), far);
  std::deque<std::size_t> queue;
  for (auto v : d.to_vector()) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    if (dist[cur] >= limit) continue;
    for (auto w : g.neighbors(cur)) {
      if (dist[w] == far) {
        dist[w] = dist[cur] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_k_dominating(const FlowerGraph& g, const VertexSet& d, int k) {
  require_radius(k);
  if (d.empty()) return false;
  const auto dist = distance_to_set(g, d, k);
  return std::all_of(dist.begin(), dist.end(), [k](int x) { return x <= k; });
}

bool is_k_dominating(const FlowerGraph& g, const std::vector<Vertex>& d, int k) {
  return is_k_dominating(g, to_vertex_set(g, d), k);
}

std::string_view failure_name(PairingFailure failure) {
  switch (failure) {
    case PairingFailure::kNone: return "none";
    case PairingFailure::kEmpty: return "empty";
    case PairingFailure::kUnknownVertex: return "unknown-vertex";
    case PairingFailure::kDuplicateMember: return "duplicate-member";
    case PairingFailure::kParity: return "parity";
    case PairingFailure::kPairNotMember: return "pair-not-member";
    case PairingFailure::kPairOverlap: return "pair-overlap";
    case PairingFailure::kPairNotEdge: return "pair-not-edge";
    case PairingFailure::kUnpairedMember: return "unpaired-member";
    case PairingFailure::kNotDominating: return "not-dominating";
  }
  return "unknown";
}

Verdict is_k_paired_dominating(const FlowerGraph& g, const PairedSet& d, int k) {
  require_radius(k);
  if (d.members.empty()) return fail(PairingFailure::kEmpty, "set is empty");

  VertexSet members(g.num_vertices());
  for (const auto& v : d.members) {
    if (!g.contains(v)) {
      return fail(PairingFailure::kUnknownVertex,
                  to_string(v) + " is not a vertex of the graph", v);
    }
    const auto idx = g.index_of(v);
    if (members.contains(idx)) {
      return fail(PairingFailure::kDuplicateMember,
                  to_string(v) + " is listed twice", v);
    }
    members.insert(idx);
  }
  if (d.members.size() % 2 != 0) {
    return fail(PairingFailure::kParity,
                "odd member count " + std::to_string(d.members.size()));
  }

  VertexSet paired(g.num_vertices());
  for (const auto& pair : d.pairs) {
    for (const auto& v : {pair.first, pair.second}) {
      if (!g.contains(v)) {
        return fail(PairingFailure::kUnknownVertex,
                    to_string(v) + " is not a vertex of the graph", v, pair);
      }
      if (!members.contains(g.index_of(v))) {
        return fail(PairingFailure::kPairNotMember,
                    "pair " + pair_text(pair) + " uses non-member " + to_string(v),
                    v, pair);
      }
    }
    const auto a = g.index_of(pair.first);
    const auto b = g.index_of(pair.second);
    if (a == b || paired.contains(a) || paired.contains(b)) {
      const auto& reused = (a == b || paired.contains(a)) ? pair.first : pair.second;
      return fail(PairingFailure::kPairOverlap,
                  "pair " + pair_text(pair) + " reuses " + to_string(reused),
                  reused, pair);
    }
    if (!g.adjacent(a, b)) {
      return fail(PairingFailure::kPairNotEdge,
                  "pair " + pair_text(pair) + " is not an edge", std::nullopt, pair);
    }
    paired.insert(a);
    paired.insert(b);
  }
  for (auto idx : members.to_vector()) {
    if (!paired.contains(idx)) {
      const auto v = g.vertex_at(idx);
      return fail(PairingFailure::kUnpairedMember,
                  to_string(v) + " has no partner", v);
    }
  }

  const auto dist = distance_to_set(g, members, k);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] > k) {
      const auto v = g.vertex_at(i);
      return fail(PairingFailure::kNotDominating,
                  to_string(v) + " is farther than " + std::to_string(k) +
                      " from the set",
                  v);
    }
  }
  return Verdict{};
}

PairClassification classify_pairs(const FlowerGraph& g, const PairedSet& d) {
  PairClassification out;
  for (const auto& [a, b] : d.pairs) {
    const bool hub_a = g.degree(g.index_of(a)) == 4;
    const bool hub_b = g.degree(g.index_of(b)) == 4;
    if (hub_a && hub_b) {
      ++out.uu;
    } else if (!hub_a && !hub_b) {
      ++out.vv;
    } else {
      ++out.vu;
    }
  }
  return out;
}

}  // namespace flowerdom
