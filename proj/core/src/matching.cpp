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

#include "flowerdom/matching.hpp"

#include <algorithm>
#include <deque>

namespace flowerdom {
namespace {

constexpr std::size_t kNone = kUnmatched;

// One augmenting-path search per exposed root. `base` tracks the current
// blossom representative of every vertex, `parent` the alternating tree.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const std::vector<std::vector<std::size_t>>& adjacency)
      : adj_(adjacency),
        mate_(adjacency.size(), kNone),
        parent_(adjacency.size(), kNone),
        base_(adjacency.size()),
        in_tree_(adjacency.size(), false),
        in_blossom_(adjacency.size(), false) {}

  std::vector<std::size_t> run() {
    const auto count = adj_.size();
    // Greedy warm start.
    for (std::size_t v = 0; v < count; ++v) {
      if (mate_[v] != kNone) continue;
      for (auto w : adj_[v]) {
        if (mate_[w] == kNone && w != v) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (std::size_t root = 0; root < count; ++root) {
      if (mate_[root] != kNone) continue;
      auto end = find_augmenting_path(root);
      while (end != kNone) {
        const auto prev = parent_[end];
        const auto next = mate_[prev];
        mate_[end] = prev;
        mate_[prev] = end;
        end = next;
      }
    }
    return mate_;
  }

 private:
  std::size_t lowest_common_base(std::size_t a, std::size_t b) {
    std::vector<bool> seen(adj_.size(), false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_blossom_path(std::size_t v, std::size_t blossom_base,
                         std::size_t child) {
    while (base_[v] != blossom_base) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  std::size_t find_augmenting_path(std::size_t root) {
    const auto count = adj_.size();
    std::fill(in_tree_.begin(), in_tree_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (std::size_t i = 0; i < count; ++i) base_[i] = i;

    in_tree_[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      for (auto to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          // Odd cycle: contract into a blossom rooted at the common base.
          const auto blossom_base = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_blossom_path(v, blossom_base, to);
          mark_blossom_path(to, blossom_base, v);
          for (std::size_t i = 0; i < count; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = blossom_base;
              if (!in_tree_[i]) {
                in_tree_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone) return to;
          const auto next = mate_[to];
          in_tree_[next] = true;
          queue.push_back(next);
        }
      }
    }
    return kNone;
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  std::vector<std::size_t> mate_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> base_;
  std::vector<bool> in_tree_;
  std::vector<bool> in_blossom_;
};

// Local indices for the members of `s` and the induced adjacency.
struct InducedSubgraph {
  std::vector<std::size_t> members;
  std::vector<std::vector<std::size_t>> adjacency;
};

InducedSubgraph induce(const FlowerGraph& g, const VertexSet& s) {
  InducedSubgraph sub;
  sub.members = s.to_vector();
  std::vector<std::size_t> local(g.num_vertices(), kNone);
  for (std::size_t i = 0; i < sub.members.size(); ++i) local[sub.members[i]] = i;
  sub.adjacency.resize(sub.members.size());
  for (std::size_t i = 0; i < sub.members.size(); ++i) {
    for (auto w : g.neighbors(sub.members[i])) {
      if (local[w] != kNone) sub.adjacency[i].push_back(local[w]);
    }
  }
  return sub;
}

}  // namespace

std::vector<std::size_t> edmonds_mates(
    const std::vector<std::vector<std::size_t>>& adjacency) {
  return BlossomMatcher(adjacency).run();
}

std::vector<std::pair<std::size_t, std::size_t>> max_matching(
    const FlowerGraph& g, const VertexSet& s) {
  const auto sub = induce(g, s);
  const auto mates = edmonds_mates(sub.adjacency);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < mates.size(); ++i) {
    if (mates[i] != kNone && i < mates[i]) {
      pairs.emplace_back(sub.members[i], sub.members[mates[i]]);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

bool has_perfect_matching(const FlowerGraph& g, const VertexSet& s) {
  const auto size = s.size();
  if (size % 2 != 0) return false;
  return max_matching(g, s).size() * 2 == size;
}

}  // namespace flowerdom
