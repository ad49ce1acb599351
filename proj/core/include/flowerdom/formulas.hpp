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

#ifndef FLOWERDOM_FORMULAS_HPP_
#define FLOWERDOM_FORMULAS_HPP_

#include <string>

namespace flowerdom {

// Ceiling of a / b for b > 0 and any sign of a.
constexpr long long ceil_div(long long a, long long b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

// Which closed form applies to (n, m, k) and what it evaluates to.
struct FormulaCase {
  int k = 1;
  int residue = 0;         // m mod 4 for k = 1, m mod 6 for k = 2
  std::string expression;  // e.g. "2*ceil((nm-2n)/4)"
  long long value = 0;
};

// Paired-domination number of f_{n x m}, by m mod 4:
//   0    -> 2*ceil((nm-2n)/4)
//   1, 2 -> 2*ceil((nm-n)/4)
//   3    -> 2*ceil((3nm-5n)/12)
// Throws DomainError unless n, m >= 3.
long long gamma_p_formula(int n, int m);

// 2-distance paired-domination number of f_{n x m}, by m mod 6:
//   0, 5 -> 2*ceil((nm-3n)/6)
//   1, 2 -> 2*ceil((nm-n)/6)
//   3    -> 2*ceil((5nm-9n)/30)
//   4    -> 2*ceil((2nm-5n)/12)
long long gamma_p2_formula(int n, int m);

// Dispatches on k (1 or 2); throws DomainError for any other k.
FormulaCase formula_case(int n, int m, int k);

// Per-petal interior count claimed for k-distance paired-dominating sets:
// 2*ceil((m-2(k+1)) / (2(k+1))), clamped at 0. Not a valid bound when a hub is
// paired with a single interior vertex (e.g. m = 2k+3); see
// known_petal_claim_exceptions(). Throws DomainError unless m >= 3 and k >= 1.
long long petal_lower_bound(int m, int k);

// Sound per-petal bound: the two hubs reach k interior vertices each, and
// every interior member reaches at most 2k+1, so any k-distance dominating
// set holds at least ceil(max(0, m-2k-2) / (2k+1)) interior vertices of each
// petal. Throws DomainError unless m >= 3 and k >= 1.
long long petal_cover_bound(int m, int k);

}  // namespace flowerdom

#endif  // FLOWERDOM_FORMULAS_HPP_
