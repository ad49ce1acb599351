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

// Independent reference implementations used only by the tests. Nothing here
// calls into the library's search, matching or BFS code.

#ifndef FLOWERDOM_TESTS_ORACLES_HPP_
#define FLOWERDOM_TESTS_ORACLES_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace oracle {

// Edge set of f_{n x m} written straight from the definition: the hub cycle
// u_i u_{i+1}, the petal paths v_{i,j} v_{i,j+1}, and the attachments
// u_i v_{i,1}, u_{i+1} v_{i,m-2}. Names are "u<i>" and "v<i>.<j>".
inline std::set<std::pair<std::string, std::string>> flower_edges(int n, int m) {
  auto u = [n](int i) { return "u" + std::to_string((i - 1) % n + 1); };
  auto v = [](int i, int j) { return "v" + std::to_string(i) + "." + std::to_string(j); };
  std::set<std::pair<std::string, std::string>> edges;
  auto add = [&](std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    edges.emplace(a, b);
  };
  for (int i = 1; i <= n; ++i) {
    add(u(i), u(i + 1));
    for (int j = 1; j + 1 <= m - 2; ++j) add(v(i, j), v(i, j + 1));
    add(u(i), v(i, 1));
    add(u(i + 1), v(i, m - 2));
  }
  return edges;
}

// All-pairs distances by Floyd-Warshall over an adjacency matrix.
inline std::vector<std::vector<int>> all_pairs(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t a = 0; a < n; ++a) {
    d[a][a] = 0;
    for (std::size_t b = 0; b < n; ++b)
      if (adj[a][b]) d[a][b] = 1;
  }
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        d[a][b] = std::min(d[a][b], d[a][c] + d[c][b]);
  return d;
}

// Maximum matching size of the subgraph induced by `mask` (at most 32
// vertices in play; intended for <= 16). adj[v] is a neighbour bitmask.
class BitmaskMatcher {
 public:
  explicit BitmaskMatcher(std::vector<std::uint32_t> adj) : adj_(std::move(adj)) {}

  int max_matching(std::uint32_t mask) {
    if (mask == 0) return 0;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const int v = std::countr_zero(mask);
    const std::uint32_t rest = mask & ~(std::uint32_t{1} << v);
    int best = max_matching(rest);
    std::uint32_t nb = adj_[static_cast<std::size_t>(v)] & rest;
    while (nb != 0) {
      const int w = std::countr_zero(nb);
      nb &= nb - 1;
      best = std::max(best, 1 + max_matching(rest & ~(std::uint32_t{1} << w)));
    }
    memo_[mask] = best;
    return best;
  }

 private:
  std::vector<std::uint32_t> adj_;
  std::unordered_map<std::uint32_t, int> memo_;
};

struct ExhaustiveResult {
  int optimum = 0;
  std::vector<std::size_t> least;  // lexicographically least optimal member list
};

// Minimum k-distance paired-dominating set by enumerating every subset in
// order of size. `adj` is an adjacency matrix of at most 20 vertices.
inline ExhaustiveResult exhaustive_paired_domination(
    const std::vector<std::vector<bool>>& adj, int k) {
  const std::size_t n = adj.size();
  const auto d = all_pairs(adj);
  std::vector<std::uint32_t> ball(n, 0);
  std::vector<std::uint32_t> nbr(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (d[a][b] <= k) ball[a] |= std::uint32_t{1} << b;
      if (adj[a][b]) nbr[a] |= std::uint32_t{1} << b;
    }
  BitmaskMatcher matcher(nbr);
  const std::uint32_t full = n == 32 ? ~0u : (std::uint32_t{1} << n) - 1;
  for (int size = 2; size <= static_cast<int>(n); size += 2) {
    std::optional<std::vector<std::size_t>> best;
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
      if (std::popcount(mask) != size) continue;
      std::uint32_t covered = 0;
      for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1)
        covered |= ball[static_cast<std::size_t>(std::countr_zero(rest))];
      if (covered != full) continue;
      if (2 * matcher.max_matching(mask) != size) continue;
      std::vector<std::size_t> members;
      for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1)
        members.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
      if (!best || members < *best) best = members;
    }
    if (best) return {size, *best};
  }
  return {};
}

}  // namespace oracle

#endif  // FLOWERDOM_TESTS_ORACLES_HPP_
