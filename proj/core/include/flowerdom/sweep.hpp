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

#ifndef FLOWERDOM_SWEEP_HPP_
#define FLOWERDOM_SWEEP_HPP_

#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "flowerdom/solver.hpp"

namespace flowerdom {

// Inclusive integer range.
struct IntRange {
  int lo = 3;
  int hi = 3;
};

// "a..b", "a-b" or a single "a". Throws DomainError on anything else.
IntRange parse_range(const std::string& text);

struct SweepOptions {
  IntRange n{3, 8};
  IntRange m{3, 8};
  int k = 1;
  // The oracle runs only when n(m-1) <= oracle_cap.
  std::size_t oracle_cap = 24;
  std::chrono::milliseconds time_limit{60'000};
  unsigned threads = 1;
};

// One instance of the formula / construction / oracle comparison.
struct SweepRow {
  int n = 0;
  int m = 0;
  int k = 1;
  long long formula = 0;
  std::optional<long long> construction;  // nullopt if no repair worked
  bool literal = false;
  bool construction_valid = false;
  std::optional<int> oracle;  // set only when proven
  std::uint64_t nodes = 0;
  bool petal_claim_holds = true;    // petal_lower_bound on every petal of the witness
  bool cover_holds = true;    // petal_cover_bound on every petal of the witness
  std::optional<PairedSet> witness;

  // formula == oracle; nullopt when the oracle did not prove a value.
  std::optional<bool> agree() const {
    if (!oracle) return std::nullopt;
    return formula == *oracle;
  }
};

struct SweepSummary {
  int rows = 0;
  int agreements = 0;
  int disagreements = 0;
  int ledgered = 0;  // disagreements listed in known_formula_deviations()
  int unproven = 0;
  int construction_failures = 0;
  int petal_claim_violations = 0;
  int petal_claim_ledgered = 0;  // violations listed in known_petal_claim_exceptions()
  int cover_violations = 0;
};

// (n, m, k) triples where the closed form is known to differ from the exact
// value. Empty: no disagreement has been observed.
const std::vector<std::tuple<int, int, int>>& known_formula_deviations();

// (n, m, k) triples in the default sweep whose exact witness takes fewer
// interior vertices from some petal than petal_lower_bound(m, k) allows. All
// have m = 2k+3: each hub is paired with one interior vertex of its petal.
const std::vector<std::tuple<int, int, int>>& known_petal_claim_exceptions();

std::vector<SweepRow> run_sweep(const SweepOptions& options);

SweepSummary summarize(const std::vector<SweepRow>& rows);

// Header "n,m,k,formula,construction,literal,oracle,agree"; unproven rows
// carry "unproven" in the oracle column and "n/a" in agree.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace flowerdom

#endif  // FLOWERDOM_SWEEP_HPP_
