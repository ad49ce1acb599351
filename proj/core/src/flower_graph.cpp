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

#include "flowerdom/flower_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace flowerdom {

void FlowerParams::validate() const {
  if (n < 3 || m < 3) {
    throw DomainError("flower graph needs n >= 3 and m >= 3, got n=" +
                      std::to_string(n) + " m=" + std::to_string(m));
  }
  // Keeps n(m-1) and nm well inside int range.
  if (n > 100000 || m > 100000) {
    throw DomainError("flower graph parameters too large");
  }
}

FlowerGraph::FlowerGraph(FlowerParams params) : params_(params) {
  params_.validate();
  const int n = params_.n;
  const int m = params_.m;
  adjacency_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(m - 1));

  auto link = [this](std::size_t a, std::size_t b) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
    ++num_edges_;
  };
  for (int i = 1; i <= n; ++i) {
    const auto hub = index_of(Vertex::Hub(i));
    const auto next_hub = index_of(Vertex::Hub(wrap(i + 1)));
    // Central cycle.
    link(hub, next_hub);
    // Petal path u_i, v_{i,1}, ..., v_{i,m-2}, u_{i+1}.
    auto prev = hub;
    for (int j = 1; j <= m - 2; ++j) {
      const auto cur = index_of(Vertex::Petal(i, j));
      link(prev, cur);
      prev = cur;
    }
    link(prev, next_hub);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool FlowerGraph::contains(const Vertex& v) const {
  if (v.petal < 1 || v.petal > params_.n) return false;
  if (v.is_hub()) return v.position == 0;
  return v.position >= 1 && v.position <= params_.m - 2;
}

std::size_t FlowerGraph::index_of(const Vertex& v) const {
  if (!contains(v)) {
    throw LookupError("vertex " + to_string(v) + " is not in f_{" +
                      std::to_string(params_.n) + "x" +
                      std::to_string(params_.m) + "}");
  }
  if (v.is_hub()) return static_cast<std::size_t>(v.petal - 1);
  return static_cast<std::size_t>(params_.n) +
         static_cast<std::size_t>(v.petal - 1) *
             static_cast<std::size_t>(params_.m - 2) +
         static_cast<std::size_t>(v.position - 1);
}

Vertex FlowerGraph::vertex_at(std::size_t index) const {
  if (index >= num_vertices()) {
    throw LookupError("vertex index " + std::to_string(index) + " out of range");
  }
  const auto n = static_cast<std::size_t>(params_.n);
  if (index < n) return Vertex::Hub(static_cast<int>(index) + 1);
  const auto rest = index - n;
  const auto per_petal = static_cast<std::size_t>(params_.m - 2);
  return Vertex::Petal(static_cast<int>(rest / per_petal) + 1,
                       static_cast<int>(rest % per_petal) + 1);
}

bool FlowerGraph::adjacent(std::size_t a, std::size_t b) const {
  const auto& list = adjacency_.at(a);
  return std::binary_search(list.begin(), list.end(), b);
}

std::vector<std::pair<std::size_t, std::size_t>> FlowerGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(num_edges_);
  for (std::size_t a = 0; a < adjacency_.size(); ++a) {
    for (auto b : adjacency_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<int> FlowerGraph::distances_from(std::size_t source) const {
  std::vector<int> dist(num_vertices(), std::numeric_limits<int>::max());
  std::deque<std::size_t> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    for (auto next : adjacency_[cur]) {
      if (dist[next] == std::numeric_limits<int>::max()) {
        dist[next] = dist[cur] + 1;
        queue.push_back(next);
      }
    }
  }
  return dist;
}

int FlowerGraph::distance(const Vertex& a, const Vertex& b) const {
  const auto target = index_of(b);
  return distances_from(index_of(a))[target];
}

VertexSet FlowerGraph::k_ball(const Vertex& v, int k) const {
  return k_ball(index_of(v), k);
}

VertexSet FlowerGraph::k_ball(std::size_t index, int k) const {
  if (k < 0) throw DomainError("k_ball radius must be >= 0");
  if (index >= num_vertices()) {
    throw LookupError("vertex index " + std::to_string(index) + " out of range");
  }
  VertexSet ball(num_vertices());
  ball.insert(index);
  std::vector<std::size_t> frontier{index};
  for (int depth = 0; depth < k && !frontier.empty(); ++depth) {
    std::vector<std::size_t> next;
    for (auto cur : frontier) {
      for (auto w : adjacency_[cur]) {
        if (!ball.contains(w)) {
          ball.insert(w);
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return ball;
}

int FlowerGraph::wrap(int i) const {
  const int n = params_.n;
  return ((i - 1) % n + n) % n + 1;
}

Vertex FlowerGraph::rotate(const Vertex& v, int shift) const {
  Vertex out = v;
  out.petal = wrap(v.petal + shift);
  return out;
}

std::vector<std::size_t> FlowerGraph::petal_interior(int i) const {
  std::vector<std::size_t> out;
  const int petal = wrap(i);
  for (int j = 1; j <= params_.m - 2; ++j) {
    out.push_back(index_of(Vertex::Petal(petal, j)));
  }
  return out;
}

VertexSet FlowerGraph::all_vertices() const {
  VertexSet all(num_vertices());
  for (std::size_t i = 0; i < num_vertices(); ++i) all.insert(i);
  return all;
}

}  // namespace flowerdom
