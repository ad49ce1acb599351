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

#include <random>

#include "flowerdom/constructions.hpp"
#include "flowerdom/domination.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace flowerdom {
namespace {

using testutil::Paired;
using testutil::V;
using testutil::Vs;

TEST(Domination, IsKDominatingExamples) {
  EXPECT_TRUE(is_k_dominating(FlowerGraph(3, 3), Vs({"u1", "u2"}), 1));
  EXPECT_FALSE(is_k_dominating(FlowerGraph(3, 4), Vs({"u1", "u2"}), 1));
  const FlowerGraph g(5, 6);
  EXPECT_TRUE(is_k_dominating(g, g.all_vertices(), 1));
  EXPECT_TRUE(is_k_dominating(g, g.all_vertices(), 3));
  EXPECT_FALSE(is_k_dominating(g, g.empty_set(), 2));
  EXPECT_THROW(is_k_dominating(g, g.all_vertices(), 0), DomainError);
}

TEST(Domination, UncoveredVerticesInThreeByFour) {
  const FlowerGraph g(3, 4);
  const auto d = distance_to_set(g, to_vertex_set(g, Vs({"u1", "u2"})), 5);
  EXPECT_EQ(d[g.index_of(V("v2.2"))], 2);
  EXPECT_EQ(d[g.index_of(V("v3.1"))], 2);
  EXPECT_EQ(d[g.index_of(V("v1.1"))], 1);
}

TEST(Domination, PairedExamples) {
  EXPECT_TRUE(is_k_paired_dominating(FlowerGraph(3, 3), Paired({{"u1", "u2"}}), 1).valid());
  EXPECT_TRUE(is_k_paired_dominating(FlowerGraph(4, 4), Paired({{"u1", "u2"}}), 2).valid());
  const auto bad = is_k_paired_dominating(FlowerGraph(3, 4), Paired({{"u1", "u3"}}), 1);
  // u1 and u3 are adjacent on the 3-cycle of hubs, so the pair is an edge;
  // the set fails domination instead.
  EXPECT_FALSE(bad.valid());
  EXPECT_EQ(bad.failure, PairingFailure::kNotDominating);
}

TEST(Domination, PairNotEdgeIsNamed) {
  const auto verdict = is_k_paired_dominating(FlowerGraph(4, 4), Paired({{"u1", "u3"}}), 1);
  EXPECT_EQ(verdict.failure, PairingFailure::kPairNotEdge);
  ASSERT_TRUE(verdict.pair.has_value());
  EXPECT_EQ(verdict.pair->first, V("u1"));
  EXPECT_EQ(verdict.pair->second, V("u3"));
  EXPECT_EQ(failure_name(verdict.failure), "pair-not-edge");
}

TEST(Domination, Diagnostics) {
  const FlowerGraph g(4, 4);
  EXPECT_EQ(is_k_paired_dominating(g, PairedSet{}, 1).failure, PairingFailure::kEmpty);

  PairedSet odd;
  odd.members = Vs({"u1", "u2", "u3"});
  odd.pairs = {{V("u1"), V("u2")}};
  EXPECT_EQ(is_k_paired_dominating(g, odd, 1).failure, PairingFailure::kParity);
  EXPECT_EQ(failure_name(PairingFailure::kParity), "parity");

  PairedSet unknown;
  unknown.members = Vs({"u1", "u9"});
  unknown.pairs = {{V("u1"), V("u9")}};
  const auto uv = is_k_paired_dominating(g, unknown, 1);
  EXPECT_EQ(uv.failure, PairingFailure::kUnknownVertex);
  EXPECT_EQ(uv.witness, V("u9"));

  PairedSet dup;
  dup.members = Vs({"u1", "u1"});
  dup.pairs = {};
  EXPECT_EQ(is_k_paired_dominating(g, dup, 1).failure, PairingFailure::kDuplicateMember);

  PairedSet unpaired;
  unpaired.members = Vs({"u1", "u2", "u3", "u4"});
  unpaired.pairs = {{V("u1"), V("u2")}};
  EXPECT_EQ(is_k_paired_dominating(g, unpaired, 1).failure, PairingFailure::kUnpairedMember);

  PairedSet outside;
  outside.members = Vs({"u1", "u2"});
  outside.pairs = {{V("u1"), V("u4")}};
  EXPECT_EQ(is_k_paired_dominating(g, outside, 1).failure, PairingFailure::kPairNotMember);

  PairedSet overlap;
  overlap.members = Vs({"u1", "u2", "u3", "u4"});
  overlap.pairs = {{V("u1"), V("u2")}, {V("u2"), V("u3")}};
  EXPECT_EQ(is_k_paired_dominating(g, overlap, 1).failure, PairingFailure::kPairOverlap);

  const auto short_set = is_k_paired_dominating(g, Paired({{"u1", "u2"}}), 1);
  EXPECT_EQ(short_set.failure, PairingFailure::kNotDominating);
  ASSERT_TRUE(short_set.witness.has_value());
  EXPECT_FALSE(short_set.message.empty());
}

TEST(Domination, ClassifyPairs) {
  EXPECT_EQ(classify_pairs(FlowerGraph(4, 4), Paired({{"u1", "u2"}, {"u3", "u4"}})),
            (PairClassification{0, 2, 0}));
  EXPECT_EQ(classify_pairs(FlowerGraph(3, 4), Paired({{"u1", "u2"}, {"u3", "v3.1"}})),
            (PairClassification{0, 1, 1}));
  EXPECT_EQ(classify_pairs(FlowerGraph(3, 5),
                           Paired({{"v1.1", "v1.2"}, {"v2.1", "v2.2"}, {"v3.1", "v3.2"}})),
            (PairClassification{3, 0, 0}));
}

TEST(Domination, CanonicalOrder) {
  auto set = Paired({{"v2.1", "u2"}, {"u1", "v10.1"}});
  set.canonicalize();
  EXPECT_EQ(testutil::names(set.members),
            (std::vector<std::string>{"u1", "u2", "v2.1", "v10.1"}));
  EXPECT_EQ(set.pairs.front().first, V("u1"));
  EXPECT_EQ(set.pairs.back().first, V("u2"));
}

// Property: domination is monotone in k and in the set, checked against
// Floyd-Warshall distances.
TEST(DominationProperty, MonotoneAndMatchesOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int m = 3 + static_cast<int>(rng() % 6);
    const FlowerGraph g(n, m);
    const auto d = oracle::all_pairs(testutil::oracle_matrix(g));
    VertexSet s = g.empty_set();
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
      if (rng() % 4 == 0) s.insert(v);
    for (int k = 1; k <= 3; ++k) {
      bool expected = !s.empty();
      for (std::size_t v = 0; v < g.num_vertices() && expected; ++v) {
        bool near = false;
        for (auto w : s.to_vector()) near = near || d[v][w] <= k;
        expected = near;
      }
      const bool got = is_k_dominating(g, s, k);
      ASSERT_EQ(got, expected);
      if (got) {
        ASSERT_TRUE(is_k_dominating(g, s, k + 1));
        VertexSet bigger = s;
        bigger.insert(rng() % g.num_vertices());
        ASSERT_TRUE(is_k_dominating(g, bigger, k));
      }
    }
  }
}

// Property: a valid set stays valid under every rotation, and valid sets are
// even and nonempty.
TEST(DominationProperty, RotationPreservesValidity) {
  for (int k = 1; k <= 2; ++k) {
    for (int n = 3; n <= 9; ++n) {
      for (int m = 3; m <= 9; ++m) {
        const FlowerGraph g(n, m);
        const auto built = build_construction(n, m, k);
        ASSERT_TRUE(is_k_paired_dominating(g, built.set, k).valid());
        ASSERT_EQ(built.set.size() % 2, 0u);
        ASSERT_GE(built.set.size(), 2u);
        for (int shift = 1; shift < n; ++shift) {
          std::vector<VertexPair> rotated;
          for (const auto& [a, b] : built.set.pairs)
            rotated.emplace_back(g.rotate(a, shift), g.rotate(b, shift));
          const auto set = PairedSet::FromPairs(rotated);
          ASSERT_TRUE(is_k_paired_dominating(g, set, k).valid()) << n << "x" << m;
          ASSERT_EQ(set.size(), built.set.size());
        }
      }
    }
  }
}

}  // namespace
}  // namespace flowerdom
