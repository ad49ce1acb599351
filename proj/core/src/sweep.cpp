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

#include "flowerdom/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>

#include "flowerdom/constructions.hpp"
#include "flowerdom/formulas.hpp"

namespace flowerdom {
namespace {

std::optional<int> to_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace

IntRange parse_range(const std::string& text) {
  std::string_view view(text);
  auto split = view.find("..");
  std::size_t skip = 2;
  if (split == std::string_view::npos) {
    split = view.find('-', 1);
    skip = 1;
  }
  std::optional<int> lo;
  std::optional<int> hi;
  if (split == std::string_view::npos) {
    lo = hi = to_int(view);
  } else {
    lo = to_int(view.substr(0, split));
    hi = to_int(view.substr(split + skip));
  }
  if (!lo || !hi || *lo > *hi) throw DomainError("bad range '" + text + "'");
  return IntRange{*lo, *hi};
}

const std::vector<std::tuple<int, int, int>>& known_formula_deviations() {
  static const std::vector<std::tuple<int, int, int>> kNone;
  return kNone;
}

const std::vector<std::tuple<int, int, int>>& known_petal_claim_exceptions() {
  static const std::vector<std::tuple<int, int, int>> kList = {
      {3, 5, 1}, {4, 5, 1}, {5, 5, 1}, {6, 5, 1}, {3, 7, 2}, {4, 7, 2},
  };
  return kList;
}

std::vector<SweepRow> run_sweep(const SweepOptions& options) {
  FlowerParams{options.n.lo, options.m.lo}.validate();
  if (options.k != 1 && options.k != 2) {
    throw DomainError("sweeps cover k = 1 and k = 2 only");
  }
  std::vector<SweepRow> rows;
  for (int n = options.n.lo; n <= options.n.hi; ++n) {
    for (int m = options.m.lo; m <= options.m.hi; ++m) {
      SweepRow row;
      row.n = n;
      row.m = m;
      row.k = options.k;
      row.formula = formula_case(n, m, options.k).value;
      const FlowerGraph g(n, m);

      std::optional<ConstructionResult> built;
      try {
        built = build_construction(n, m, options.k);
        row.construction = static_cast<long long>(built->set.size());
        row.literal = built->literal;
        row.construction_valid = is_k_paired_dominating(g, built->set, options.k).valid();
      } catch (const ConstructionError&) {
        row.construction.reset();
      }

      if (g.num_vertices() <= options.oracle_cap) {
        SolveBudget budget;
        budget.max_vertices = options.oracle_cap;
        budget.time_limit = options.time_limit;
        budget.threads = options.threads;
        const auto solved = min_paired_domination(g, options.k, budget);
        row.nodes = solved.nodes;
        if (solved.proven) {
          row.oracle = solved.optimum;
          row.witness = solved.witness;
          const auto report = lower_bound_report(g, solved, options.k);
          row.petal_claim_holds = std::none_of(report.begin(), report.end(),
                                         [](const PetalCount& p) { return p.violated; });
          row.cover_holds = std::none_of(report.begin(), report.end(),
                                         [](const PetalCount& p) { return p.below_cover; });
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

SweepSummary summarize(const std::vector<SweepRow>& rows) {
  SweepSummary s;
  const auto& known = known_formula_deviations();
  const auto& claim_known = known_petal_claim_exceptions();
  for (const auto& row : rows) {
    ++s.rows;
    if (!row.construction || !row.construction_valid ||
        *row.construction != row.formula) {
      ++s.construction_failures;
    }
    if (!row.petal_claim_holds) {
      ++s.petal_claim_violations;
      if (std::find(claim_known.begin(), claim_known.end(),
                    std::tuple{row.n, row.m, row.k}) != claim_known.end()) {
        ++s.petal_claim_ledgered;
      }
    }
    if (!row.cover_holds) ++s.cover_violations;
    const auto agree = row.agree();
    if (!agree) {
      ++s.unproven;
    } else if (*agree) {
      ++s.agreements;
    } else {
      ++s.disagreements;
      if (std::find(known.begin(), known.end(), std::tuple{row.n, row.m, row.k}) !=
          known.end()) {
        ++s.ledgered;
      }
    }
  }
  return s;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "n,m,k,formula,construction,literal,oracle,agree\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.m << ',' << row.k << ',' << row.formula << ',';
    if (row.construction) {
      out << *row.construction;
    } else {
      out << "error";
    }
    out << ',' << (row.literal ? "true" : "false") << ',';
    if (row.oracle) {
      out << *row.oracle;
    } else {
      out << "unproven";
    }
    const auto agree = row.agree();
    out << ',' << (agree ? (*agree ? "true" : "false") : "n/a") << '\n';
  }
}

}  // namespace flowerdom
