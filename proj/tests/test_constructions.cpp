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

#include <chrono>

#include "flowerdom/constructions.hpp"
#include "flowerdom/formulas.hpp"
#include "test_util.hpp"

namespace flowerdom {
namespace {

using testutil::Paired;

void expect_set(const ConstructionResult& r,
                const std::vector<std::pair<std::string, std::string>>& pairs) {
  EXPECT_EQ(r.set, Paired(pairs).canonical());
  EXPECT_EQ(r.set.size(), static_cast<std::size_t>(r.formula_value));
}

TEST(Constructions, PairedExamples) {
  const auto a = build_paired_set(4, 4);
  expect_set(a, {{"u1", "u2"}, {"u3", "u4"}});
  EXPECT_TRUE(a.literal);
  EXPECT_FALSE(a.ledger_note.has_value());
  expect_set(build_paired_set(3, 4), {{"u1", "u2"}, {"u3", "v3.1"}});
  expect_set(build_paired_set(3, 5), {{"v1.1", "v1.2"}, {"v2.1", "v2.2"}, {"v3.1", "v3.2"}});
}

TEST(Constructions, TwoDistanceExamples) {
  expect_set(build_2distance_set(4, 4), {{"u1", "u2"}});
  expect_set(build_2distance_set(3, 3), {{"u1", "u2"}});
  expect_set(build_2distance_set(4, 6), {{"u1", "u2"}, {"u3", "u4"}});
  EXPECT_EQ(build_2distance_set(4, 4).k, 2);
}

TEST(Constructions, DispatchAndDomain) {
  EXPECT_EQ(build_construction(5, 7, 1).set, build_paired_set(5, 7).set);
  EXPECT_EQ(build_construction(5, 7, 2).set, build_2distance_set(5, 7).set);
  EXPECT_THROW(build_construction(5, 7, 3), DomainError);
  EXPECT_THROW(build_paired_set(2, 7), DomainError);
}

TEST(Constructions, RepairedCasesCarryANote) {
  // k=1, m = 2 mod 4, n = 1 mod 4: the wrapped hub pair collides.
  const auto r = build_paired_set(9, 6);
  EXPECT_FALSE(r.literal);
  ASSERT_TRUE(r.ledger_note.has_value());
  EXPECT_NE(r.ledger_note->find("does not verify"), std::string::npos);
  // k=2, m = 5 mod 6 is always read through the relabelled case.
  const auto s = build_2distance_set(4, 11);
  EXPECT_FALSE(s.literal);
  ASSERT_TRUE(s.ledger_note.has_value());
}

TEST(Constructions, DraftsAreLabelled) {
  const auto d = draft_paired_set(4, 4);
  EXPECT_FALSE(d.case_label.empty());
  EXPECT_FALSE(d.completed);
  EXPECT_EQ(d.pairs.size(), 2u);
  const auto e = draft_2distance_set(4, 11);
  EXPECT_TRUE(e.completed);
  EXPECT_FALSE(e.notes.empty());
}

// Property: across the full 3..40 grid every construction verifies and has
// exactly the formula cardinality; rotations of it verify too.
TEST(ConstructionsProperty, FullGridVerifiesAtFormulaSize) {
  const auto start = std::chrono::steady_clock::now();
  for (int k = 1; k <= 2; ++k) {
    for (int n = 3; n <= 40; ++n) {
      for (int m = 3; m <= 40; ++m) {
        const FlowerGraph g(n, m);
        const auto r = build_construction(n, m, k);
        const auto verdict = is_k_paired_dominating(g, r.set, k);
        ASSERT_TRUE(verdict.valid()) << n << "x" << m << " k=" << k << ": " << verdict.message;
        ASSERT_EQ(static_cast<long long>(r.set.size()), formula_case(n, m, k).value);
        ASSERT_EQ(r.formula_value, formula_case(n, m, k).value);
        ASSERT_EQ(r.set, r.set.canonical());
        if (!r.literal) ASSERT_TRUE(r.ledger_note.has_value());
      }
    }
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_LT(elapsed, std::chrono::seconds(60));
}

}  // namespace
}  // namespace flowerdom
