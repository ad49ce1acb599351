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

#include "flowerdom/formulas.hpp"

#include <algorithm>

#include "flowerdom/flower_graph.hpp"

namespace flowerdom {
namespace {

FormulaCase case_k1(long long n, long long m) {
  FormulaCase c;
  c.k = 1;
  c.residue = static_cast<int>(m % 4);
  switch (c.residue) {
    case 0:
      c.expression = "2*ceil((nm-2n)/4)";
      c.value = 2 * ceil_div(n * m - 2 * n, 4);
      break;
    case 1:
    case 2:
      c.expression = "2*ceil((nm-n)/4)";
      c.value = 2 * ceil_div(n * m - n, 4);
      break;
    default:
      c.expression = "2*ceil((3nm-5n)/12)";
      c.value = 2 * ceil_div(3 * n * m - 5 * n, 12);
      break;
  }
  return c;
}

FormulaCase case_k2(long long n, long long m) {
  FormulaCase c;
  c.k = 2;
  c.residue = static_cast<int>(m % 6);
  switch (c.residue) {
    case 0:
    case 5:
      c.expression = "2*ceil((nm-3n)/6)";
      c.value = 2 * ceil_div(n * m - 3 * n, 6);
      break;
    case 1:
    case 2:
      c.expression = "2*ceil((nm-n)/6)";
      c.value = 2 * ceil_div(n * m - n, 6);
      break;
    case 3:
      c.expression = "2*ceil((5nm-9n)/30)";
      c.value = 2 * ceil_div(5 * n * m - 9 * n, 30);
      break;
    default:
      c.expression = "2*ceil((2nm-5n)/12)";
      c.value = 2 * ceil_div(2 * n * m - 5 * n, 12);
      break;
  }
  return c;
}

}  // namespace

long long gamma_p_formula(int n, int m) {
  FlowerParams{n, m}.validate();
  return case_k1(n, m).value;
}

long long gamma_p2_formula(int n, int m) {
  FlowerParams{n, m}.validate();
  return case_k2(n, m).value;
}

FormulaCase formula_case(int n, int m, int k) {
  FlowerParams{n, m}.validate();
  if (k == 1) return case_k1(n, m);
  if (k == 2) return case_k2(n, m);
  throw DomainError("closed forms exist only for k = 1 and k = 2, got k = " +
                    std::to_string(k));
}

long long petal_lower_bound(int m, int k) {
  if (m < 3) throw DomainError("petal cycle length must be >= 3");
  if (k < 1) throw DomainError("distance k must be >= 1");
  const long long reach = 2LL * (k + 1);
  return std::max(0LL, 2 * ceil_div(static_cast<long long>(m) - reach, reach));
}

long long petal_cover_bound(int m, int k) {
  if (m < 3) throw DomainError("petal cycle length must be >= 3");
  if (k < 1) throw DomainError("distance k must be >= 1");
  const long long uncovered = std::max(0LL, static_cast<long long>(m) - 2LL * k - 2);
  return ceil_div(uncovered, 2LL * k + 1);
}

}  // namespace flowerdom
