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

#include "flowerdom/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "flowerdom/formulas.hpp"
#include "flowerdom/matching.hpp"

namespace flowerdom {
namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr Mask bit(std::size_t v) { return Mask{1} << v; }
int popcount(Mask m) { return std::popcount(m); }
std::size_t lowest(Mask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

// Precomputed masks shared by every search over one graph.
struct Instance {
  std::size_t size = 0;
  Mask full = 0;
  std::vector<Mask> ball;  // closed k-ball
  std::vector<Mask> adj;   // open neighborhood

  Instance(const FlowerGraph& g, int k) : size(g.num_vertices()) {
    full = size == 64 ? ~Mask{0} : bit(size) - 1;
    ball.resize(size);
    adj.resize(size);
    for (std::size_t v = 0; v < size; ++v) {
      for (auto w : g.neighbors(v)) adj[v] |= bit(w);
      for (auto w : g.k_ball(v, k).to_vector()) ball[v] |= bit(w);
    }
  }
};

struct TimedOut {};

// Depth-first searches over one instance. Not thread-safe; one per worker.
class Search {
 public:
  Search(const Instance& inst, Clock::time_point deadline,
         const std::atomic<bool>* stop = nullptr)
      : inst_(inst), deadline_(deadline), stop_(stop) {}

  std::uint64_t nodes() const { return nodes_; }

  // Is there a dominating set of exactly `target` vertices with a perfect
  // matching that contains `chosen` and avoids `forbidden`?
  bool feasible(Mask chosen, Mask covered, Mask forbidden, int target) {
    tick();
    const Mask full = inst_.full;
    const int size = popcount(chosen);
    const Mask allowed = full & ~chosen & ~forbidden;
    if (covered == full) return complete(chosen, allowed, target - size);
    if (size >= target) return false;
    if (!bounded(chosen, covered, allowed, target)) return false;

    const Mask branch = candidates(covered, allowed);
    Mask forbid = forbidden;
    for (Mask rest = branch; rest != 0; rest &= rest - 1) {
      const auto c = lowest(rest);
      if (feasible(chosen | bit(c), covered | inst_.ball[c], forbid, target)) {
        return true;
      }
      forbid |= bit(c);
    }
    return false;
  }

  // Branching set at a node: the k-ball (restricted to allowed vertices) of
  // the uncovered vertex with the fewest such candidates, lowest index first.
  Mask candidates(Mask covered, Mask allowed) const {
    Mask best = 0;
    int best_count = 65;
    for (Mask rest = inst_.full & ~covered; rest != 0; rest &= rest - 1) {
      const Mask cand = inst_.ball[lowest(rest)] & allowed;
      const int count = popcount(cand);
      if (count < best_count) {
        best = cand;
        best_count = count;
        if (count <= 1) break;
      }
    }
    return best;
  }

  // Lexicographically least (by sorted index sequence) valid set of exactly
  // `target` vertices. Include-first over vertices in index order.
  bool least(std::size_t next, Mask chosen, Mask covered, int target, Mask& out) {
    tick();
    const int size = popcount(chosen);
    if (size == target) {
      if (covered == inst_.full && complete(chosen, 0, 0)) {
        out = chosen;
        return true;
      }
      return false;
    }
    if (next >= inst_.size) return false;
    const Mask remaining = inst_.full & ~(bit(next) - 1);
    for (Mask rest = inst_.full & ~covered; rest != 0; rest &= rest - 1) {
      if ((inst_.ball[lowest(rest)] & remaining) == 0) return false;
    }
    if (!bounded(chosen, covered, remaining, target)) return false;
    if (least(next + 1, chosen | bit(next), covered | inst_.ball[next], target, out)) {
      return true;
    }
    return least(next + 1, chosen, covered, target, out);
  }

  // Can `members` be extended by exactly `extra` allowed vertices so that the
  // result has a perfect matching?
  bool complete(Mask members, Mask allowed, int extra) {
    if (extra < 0 || (popcount(members) + extra) % 2 != 0) return false;
    return match(members, allowed, extra);
  }

 private:
  void tick() {
    ++nodes_;
    if ((nodes_ & 0x3ff) == 0) {
      if (Clock::now() > deadline_) throw TimedOut{};
      if (stop_ != nullptr && stop_->load(std::memory_order_relaxed)) throw TimedOut{};
    }
  }

  // Covering and pairing lower bounds on the number of vertices still to add.
  bool bounded(Mask chosen, Mask covered, Mask allowed, int target) const {
    const int slots = target - popcount(chosen);
    const Mask uncovered = inst_.full & ~covered;
    int best_gain = 0;
    for (Mask rest = allowed; rest != 0; rest &= rest - 1) {
      best_gain = std::max(best_gain, popcount(inst_.ball[lowest(rest)] & uncovered));
    }
    const int open = popcount(uncovered);
    if (open > 0 && best_gain == 0) return false;
    const int cover_need = open == 0 ? 0 : (open + best_gain - 1) / best_gain;
    int lonely = 0;
    for (Mask rest = chosen; rest != 0; rest &= rest - 1) {
      const auto v = lowest(rest);
      if ((inst_.adj[v] & chosen) == 0) {
        if ((inst_.adj[v] & allowed) == 0) return false;
        ++lonely;
      }
    }
    return std::max(cover_need, lonely) <= slots;
  }

  // Matches the lowest unmatched member with a member or a new vertex.
  bool match(Mask unmatched, Mask allowed, int extra) {
    tick();
    if (unmatched == 0) {
      if (extra == 0) return true;
      return spare_edges(allowed) * 2 >= static_cast<std::size_t>(extra);
    }
    int lonely = 0;
    for (Mask rest = unmatched; rest != 0; rest &= rest - 1) {
      const auto v = lowest(rest);
      if ((inst_.adj[v] & unmatched) == 0) {
        if ((inst_.adj[v] & allowed) == 0) return false;
        ++lonely;
      }
    }
    if (lonely > extra) return false;

    const auto v = lowest(unmatched);
    const Mask rest = unmatched & ~bit(v);
    for (Mask nb = inst_.adj[v] & rest; nb != 0; nb &= nb - 1) {
      if (match(rest & ~bit(lowest(nb)), allowed, extra)) return true;
    }
    if (extra > 0) {
      for (Mask nb = inst_.adj[v] & allowed; nb != 0; nb &= nb - 1) {
        if (match(rest, allowed & ~bit(lowest(nb)), extra - 1)) return true;
      }
    }
    return false;
  }

  // Maximum matching size inside `allowed`.
  std::size_t spare_edges(Mask allowed) const {
    std::vector<std::size_t> local;
    for (Mask rest = allowed; rest != 0; rest &= rest - 1) local.push_back(lowest(rest));
    std::vector<std::vector<std::size_t>> adjacency(local.size());
    for (std::size_t i = 0; i < local.size(); ++i) {
      for (std::size_t j = 0; j < local.size(); ++j) {
        if ((inst_.adj[local[i]] & bit(local[j])) != 0) adjacency[i].push_back(j);
      }
    }
    const auto mates = edmonds_mates(adjacency);
    return static_cast<std::size_t>(
               std::count_if(mates.begin(), mates.end(),
                             [](std::size_t m) { return m != kUnmatched; })) /
           2;
  }

  const Instance& inst_;
  Clock::time_point deadline_;
  const std::atomic<bool>* stop_;
  std::uint64_t nodes_ = 0;
};

// Outcome of settling one target size.
struct SizeOutcome {
  bool feasible = false;
  std::uint64_t nodes = 0;
};

// Splits the root's branch list across threads. Branch b may only be
// abandoned once a lower-indexed branch is known feasible, so the node count
// (branches up to the first feasible one) matches the sequential run.
SizeOutcome settle_size(const Instance& inst, int target, unsigned threads,
                        Clock::time_point deadline) {
  Search root(inst, deadline);
  const Mask branch = root.candidates(0, inst.full);
  std::vector<std::size_t> order;
  for (Mask rest = branch; rest != 0; rest &= rest - 1) order.push_back(lowest(rest));

  struct Slot {
    bool done = false;
    bool feasible = false;
    bool timed_out = false;
    std::uint64_t nodes = 0;
  };
  std::vector<Slot> slots(order.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_feasible{order.size()};
  std::atomic<bool> timed_out{false};

  auto worker = [&] {
    while (true) {
      const auto b = next.fetch_add(1);
      if (b >= order.size()) return;
      if (b > first_feasible.load() || timed_out.load()) continue;
      Mask forbid = 0;
      for (std::size_t i = 0; i < b; ++i) forbid |= bit(order[i]);
      const auto c = order[b];
      Search search(inst, deadline, &timed_out);
      auto& slot = slots[b];
      try {
        slot.feasible = search.feasible(bit(c), inst.ball[c], forbid, target);
      } catch (const TimedOut&) {
        slot.timed_out = true;
        timed_out.store(true);
      }
      slot.nodes = search.nodes();
      slot.done = true;
      if (slot.feasible) {
        auto cur = first_feasible.load();
        while (b < cur && !first_feasible.compare_exchange_weak(cur, b)) {
        }
      }
    }
  };

  const unsigned count = std::max(1u, std::min<unsigned>(threads, order.size()));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SizeOutcome out;
  out.nodes = 1;  // root
  const auto stop = first_feasible.load();
  for (std::size_t b = 0; b < slots.size() && b <= stop; ++b) {
    if (!slots[b].done || slots[b].timed_out) throw TimedOut{};
    out.nodes += slots[b].nodes;
  }
  out.feasible = stop < order.size();
  return out;
}

PairedSet witness_from_mask(const FlowerGraph& g, Mask members) {
  VertexSet set(g.num_vertices());
  for (Mask rest = members; rest != 0; rest &= rest - 1) set.insert(lowest(rest));
  std::vector<VertexPair> pairs;
  for (auto [a, b] : max_matching(g, set)) {
    pairs.emplace_back(g.vertex_at(a), g.vertex_at(b));
  }
  return PairedSet::FromPairs(std::move(pairs)).canonical();
}

}  // namespace

std::string_view status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::kProven: return "proven";
    case SolveStatus::kTimeLimit: return "time-limit";
    case SolveStatus::kSetSizeCap: return "set-size-cap";
    case SolveStatus::kTooLarge: return "too-large";
  }
  return "unknown";
}

SolveResult min_paired_domination(const FlowerGraph& g, int k,
                                  const SolveBudget& budget) {
  if (k < 1) throw DomainError("distance k must be >= 1, got " + std::to_string(k));
  const auto start = Clock::now();
  const auto deadline = start + budget.time_limit;

  SolveResult result;
  auto give_up = [&](SolveStatus status) {
    result.status = status;
    result.proven = false;
    if (budget.incumbent) {
      result.witness = budget.incumbent->canonical();
      result.optimum = static_cast<int>(budget.incumbent->members.size());
    }
    result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                        Clock::now() - start)
                        .count();
    return result;
  };

  if (g.num_vertices() > std::min(budget.max_vertices, kSolverVertexLimit)) {
    return give_up(SolveStatus::kTooLarge);
  }

  const Instance inst(g, k);
  const int cap = budget.max_set_size.value_or(static_cast<int>(g.num_vertices()));
  try {
    for (int target = 2; target <= static_cast<int>(g.num_vertices()); target += 2) {
      if (target > cap) return give_up(SolveStatus::kSetSizeCap);
      const auto outcome = settle_size(inst, target, budget.threads, deadline);
      result.nodes += outcome.nodes;
      if (!outcome.feasible) {
        result.lower_bound = target + 2;
        continue;
      }
      Search search(inst, deadline);
      Mask members = 0;
      if (!search.least(0, 0, 0, target, members)) {
        throw std::logic_error("witness extraction disagrees with feasibility search");
      }
      result.nodes += search.nodes();
      result.optimum = target;
      result.proven = true;
      result.status = SolveStatus::kProven;
      result.witness = witness_from_mask(g, members);
      result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                          Clock::now() - start)
                          .count();
      return result;
    }
  } catch (const TimedOut&) {
    return give_up(SolveStatus::kTimeLimit);
  }
  // Not reached: the endpoints of a maximal matching of a graph without
  // isolated vertices form a paired-dominating set.
  throw std::logic_error("no paired-dominating set found");
}

std::vector<PetalCount> lower_bound_report(const FlowerGraph& g,
                                           const SolveResult& result, int k) {
  if (!result.proven) throw DomainError("lower-bound report needs a proven result");
  const auto bound = petal_lower_bound(g.m(), k);
  const auto cover = petal_cover_bound(g.m(), k);
  const auto members = to_vertex_set(g, result.witness.members);
  std::vector<PetalCount> out;
  for (int i = 1; i <= g.n(); ++i) {
    PetalCount row;
    row.petal = i;
    row.bound = bound;
    for (auto v : g.petal_interior(i)) row.count += members.contains(v) ? 1 : 0;
    row.violated = row.count < bound;
    row.cover_bound = cover;
    row.below_cover = row.count < cover;
    out.push_back(row);
  }
  return out;
}

}  // namespace flowerdom
