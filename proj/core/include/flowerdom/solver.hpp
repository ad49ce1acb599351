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

#ifndef FLOWERDOM_SOLVER_HPP_
#define FLOWERDOM_SOLVER_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "flowerdom/domination.hpp"
#include "flowerdom/flower_graph.hpp"

namespace flowerdom {

// Hard ceiling of the bitmask search.
inline constexpr std::size_t kSolverVertexLimit = 64;

struct SolveBudget {
  std::size_t max_vertices = 30;
  std::chrono::milliseconds time_limit{60'000};
  std::optional<int> max_set_size;
  unsigned threads = 1;
  // Known valid set; reported as the upper bound when the search is cut off.
  std::optional<PairedSet> incumbent;
};

enum class SolveStatus {
  kProven,       // optimum and witness are exact
  kTimeLimit,    // ran out of wall-clock time
  kSetSizeCap,   // every size up to max_set_size is infeasible
  kTooLarge,     // graph exceeds max_vertices (or the bitmask limit)
};

std::string_view status_name(SolveStatus status);

struct SolveResult {
  // Exact optimum when proven; otherwise the incumbent's size, if any.
  std::optional<int> optimum;
  bool proven = false;
  SolveStatus status = SolveStatus::kTooLarge;
  // Lexicographically least valid set of the optimum size (canonical vertex
  // order) when proven; the incumbent otherwise.
  PairedSet witness;
  // Every even size below this value was refuted.
  int lower_bound = 2;
  std::uint64_t nodes = 0;
  std::int64_t millis = 0;
};

// Exact k-distance paired-domination number of g by increasing target size
// s = 2, 4, ...: each size is settled by a branch-and-bound over dominating
// sets (branching on the uncovered vertex with the fewest candidates), with
// perfect-matching completion at the leaves. The witness at the optimum is
// then extracted in lexicographic order.
//
// Deterministic in (optimum, witness, nodes) for any thread count unless the
// time limit fires. Throws DomainError for k < 1.
SolveResult min_paired_domination(const FlowerGraph& g, int k,
                                  const SolveBudget& budget = {});

struct PetalCount {
  int petal = 0;
  int count = 0;          // |witness ∩ V_i|
  long long bound = 0;    // petal_lower_bound(m, k)
  bool violated = false;  // count < bound
  long long cover_bound = 0;    // petal_cover_bound(m, k)
  bool below_cover = false;     // count < cover_bound; never true for a valid set
};

// Per-petal interior counts of a proven witness against the per-petal lower
// bound. Throws DomainError if the result is not proven.
std::vector<PetalCount> lower_bound_report(const FlowerGraph& g,
                                           const SolveResult& result, int k);

}  // namespace flowerdom

#endif  // FLOWERDOM_SOLVER_HPP_
