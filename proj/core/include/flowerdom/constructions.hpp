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

#ifndef FLOWERDOM_CONSTRUCTIONS_HPP_
#define FLOWERDOM_CONSTRUCTIONS_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flowerdom/domination.hpp"
#include "flowerdom/flower_graph.hpp"

namespace flowerdom {

// No documented repair produced a valid set of the formula's size.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An explicit paired set meeting the closed-form value.
struct ConstructionResult {
  PairedSet set;            // canonical order
  long long formula_value = 0;
  int k = 1;
  // False when the reference block description had to be completed
  // (missing index range) or repaired to verify.
  bool literal = true;
  // What was completed or repaired, and why. Empty for literal sets that
  // needed no reading at all.
  std::optional<std::string> ledger_note;
};

// Block description of the reference set before any repair. `pairs` may
// reference vertices outside the graph (petal positions beyond m-2) or
// repeat a vertex; `notes` records every index range that had to be
// completed or variable that had to be read as the enclosing range's.
struct DraftConstruction {
  std::vector<VertexPair> pairs;
  std::vector<std::string> notes;
  bool completed = false;  // an omitted range or a case label was filled in
  std::string case_label;  // e.g. "k=1, m=0 mod 4, n odd"
};

// Reference block sets, transcribed. Hub indices are already wrapped into
// 1..n; petal positions are left as written.
DraftConstruction draft_paired_set(int n, int m);
DraftConstruction draft_2distance_set(int n, int m);

// Paired-dominating set (k = 1) of size gamma_p_formula(n, m).
// Throws DomainError for n, m < 3 and ConstructionError if the draft and all
// documented repairs fail.
ConstructionResult build_paired_set(int n, int m);

// 2-distance paired-dominating set (k = 2) of size gamma_p2_formula(n, m).
ConstructionResult build_2distance_set(int n, int m);

// build_paired_set for k = 1, build_2distance_set for k = 2.
ConstructionResult build_construction(int n, int m, int k);

}  // namespace flowerdom

#endif  // FLOWERDOM_CONSTRUCTIONS_HPP_
