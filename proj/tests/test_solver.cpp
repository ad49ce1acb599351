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

#include <gtest/gtest.h>

#include "flowerdom/constructions.hpp"
#include "flowerdom/formulas.hpp"
#include "flowerdom/solver.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace flowerdom {
namespace {

using testutil::Vs;

std::vector<std::size_t> indices(const FlowerGraph& g, const PairedSet& s) {
  return to_vertex_set(g, s.members).to_vector();
}

TEST(Solver, SpecExamples) {
  const FlowerGraph g33(3, 3);
  const auto a = min_paired_domination(g33, 1);
  ASSERT_TRUE(a.proven);
  EXPECT_EQ(a.optimum, 2);
  EXPECT_EQ(a.witness.members, Vs({"u1", "u2"}));

  const auto b = min_paired_domination(FlowerGraph(3, 4), 1);
  ASSERT_TRUE(b.proven);
  EXPECT_EQ(b.optimum, 4);

  const auto c = min_paired_domination(FlowerGraph(4, 4), 2);
  ASSERT_TRUE(c.proven);
  EXPECT_EQ(c.optimum, 2);
  EXPECT_EQ(c.witness.members, Vs({"u1", "u2"}));
  EXPECT_EQ(c.status, SolveStatus::kProven);
  EXPECT_EQ(c.lower_bound, 2);
}

TEST(Solver, RejectsBadK) {
  EXPECT_THROW(min_paired_domination(FlowerGraph(3, 3), 0), DomainError);
}

// The solver agrees with plain subset enumeration on every flower graph of at
// most 14 vertices, in value and in the lexicographically least witness.
TEST(SolverProperty, MatchesExhaustiveEnumeration) {
  for (int k = 1; k <= 3; ++k) {
    for (int n = 3; n <= 7; ++n) {
      for (int m = 3; n * (m - 1) <= 14; ++m) {
        const FlowerGraph g(n, m);
        const auto expected = oracle::exhaustive_paired_domination(testutil::oracle_matrix(g), k);
        const auto got = min_paired_domination(g, k);
        ASSERT_TRUE(got.proven);
        ASSERT_EQ(got.optimum, expected.optimum) << n << "x" << m << " k=" << k;
        ASSERT_EQ(indices(g, got.witness), expected.least) << n << "x" << m << " k=" << k;
        ASSERT_TRUE(is_k_paired_dominating(g, got.witness, k).valid());
      }
    }
  }
}

TEST(SolverProperty, DeterministicAcrossThreads) {
  for (auto [n, m, k] : {std::tuple{4, 6, 1}, {5, 5, 1}, {4, 7, 2}, {6, 4, 2}}) {
    const FlowerGraph g(n, m);
    SolveBudget one;
    const auto base = min_paired_domination(g, k, one);
    ASSERT_TRUE(base.proven);
    for (unsigned threads : {2u, 3u, 4u, 8u}) {
      SolveBudget many;
      many.threads = threads;
      const auto r = min_paired_domination(g, k, many);
      ASSERT_TRUE(r.proven);
      EXPECT_EQ(r.optimum, base.optimum);
      EXPECT_EQ(r.witness, base.witness);
      EXPECT_EQ(r.nodes, base.nodes);
    }
  }
}

// Removing any pair of a proven witness breaks domination or matching, and the
// optimum never exceeds the construction.
TEST(SolverProperty, WitnessIsLocallyMinimalAndBelowConstruction) {
  for (int k = 1; k <= 2; ++k) {
    for (int n = 3; n <= 6; ++n) {
      for (int m = 3; n * (m - 1) <= 20; ++m) {
        const FlowerGraph g(n, m);
        const auto r = min_paired_domination(g, k);
        ASSERT_TRUE(r.proven);
        ASSERT_EQ(*r.optimum % 2, 0);
        ASSERT_EQ(r.witness.size(), static_cast<std::size_t>(*r.optimum));
        ASSERT_LE(*r.optimum, build_construction(n, m, k).set.size());
        for (std::size_t drop = 0; drop < r.witness.pairs.size(); ++drop) {
          auto pairs = r.witness.pairs;
          pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(drop));
          if (pairs.empty()) continue;
          ASSERT_FALSE(is_k_paired_dominating(g, PairedSet::FromPairs(pairs), k).valid());
        }
      }
    }
  }
}

TEST(Solver, BudgetTooLarge) {
  SolveBudget budget;
  budget.max_vertices = 10;
  budget.incumbent = build_paired_set(4, 4).set;
  const auto r = min_paired_domination(FlowerGraph(4, 4), 1, budget);
  EXPECT_FALSE(r.proven);
  EXPECT_EQ(r.status, SolveStatus::kTooLarge);
  EXPECT_EQ(r.optimum, 4);
  EXPECT_EQ(r.witness, budget.incumbent);

  SolveBudget hard;
  hard.max_vertices = 1000;
  const auto big = min_paired_domination(FlowerGraph(10, 10), 1, hard);
  EXPECT_EQ(big.status, SolveStatus::kTooLarge);
  EXPECT_FALSE(big.optimum.has_value());
}

TEST(Solver, BudgetSetSizeCap) {
  SolveBudget budget;
  budget.max_set_size = 2;
  const auto r = min_paired_domination(FlowerGraph(3, 4), 1, budget);
  EXPECT_FALSE(r.proven);
  EXPECT_EQ(r.status, SolveStatus::kSetSizeCap);
  EXPECT_EQ(r.lower_bound, 4);
}

TEST(Solver, BudgetTimeLimit) {
  SolveBudget budget;
  budget.max_vertices = 64;
  budget.time_limit = std::chrono::milliseconds(1);
  const auto r = min_paired_domination(FlowerGraph(8, 9), 1, budget);
  EXPECT_FALSE(r.proven);
  EXPECT_EQ(r.status, SolveStatus::kTimeLimit);
}

TEST(Solver, LowerBoundReport) {
  const auto a = min_paired_domination(FlowerGraph(3, 3), 1);
  for (const auto& p : lower_bound_report(FlowerGraph(3, 3), a, 1)) {
    EXPECT_EQ(p.count, 0);
    EXPECT_EQ(p.bound, 0);
    EXPECT_FALSE(p.violated);
  }
  const FlowerGraph g38(3, 8);
  const auto b = min_paired_domination(g38, 1);
  ASSERT_TRUE(b.proven);
  for (const auto& p : lower_bound_report(g38, b, 1)) {
    EXPECT_GE(p.count, 2);
    EXPECT_EQ(p.bound, 2);
  }
  const FlowerGraph g44(4, 4);
  const auto c = min_paired_domination(g44, 2);
  for (const auto& p : lower_bound_report(g44, c, 2)) {
    EXPECT_EQ(p.count, 0);
    EXPECT_EQ(p.bound, 0);
  }
  SolveResult unproven;
  EXPECT_THROW(lower_bound_report(g44, unproven, 1), DomainError);
}

// The claimed per-petal count fails on f_{3x5}: each hub pairs with one
// interior vertex. The sound cover bound still holds.
TEST(Solver, PetalClaimCounterexample) {
  const FlowerGraph g(3, 5);
  const auto r = min_paired_domination(g, 1);
  ASSERT_TRUE(r.proven);
  EXPECT_EQ(r.optimum, 6);
  const auto report = lower_bound_report(g, r, 1);
  for (const auto& p : report) {
    EXPECT_EQ(p.count, 1);
    EXPECT_TRUE(p.violated);
    EXPECT_FALSE(p.below_cover);
  }
}

}  // namespace
}  // namespace flowerdom
