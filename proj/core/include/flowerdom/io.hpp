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

#ifndef FLOWERDOM_IO_HPP_
#define FLOWERDOM_IO_HPP_

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "flowerdom/constructions.hpp"
#include "flowerdom/domination.hpp"
#include "flowerdom/flower_graph.hpp"
#include "flowerdom/formulas.hpp"
#include "flowerdom/solver.hpp"

namespace flowerdom {

// Input that does not match the expected schema.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One "a b" line per edge, canonical names, edges sorted by vertex order.
std::string to_edge_list(const FlowerGraph& g);

// Undirected DOT graph. Hubs are drawn as boxes, petal vertices as circles.
std::string to_dot(const FlowerGraph& g);

// {"n", "m", "vertices": [...], "edges": [[a, b], ...]}
nlohmann::json to_json(const FlowerGraph& g);

// {"members": [...], "pairs": [[a, b], ...]} in canonical order.
nlohmann::json to_json(const PairedSet& set);

// Parses the PairedSet schema. "pairs" may be omitted (empty pairing).
// Throws FormatError on schema violations and unparseable vertex names.
PairedSet paired_set_from_json(const nlohmann::json& j);

// PairedSet schema plus {"formula", "literal", "ledger"}.
nlohmann::json to_json(const ConstructionResult& result);

// {"optimum", "proven", "witness", "nodes", "millis"} plus "status" and
// "lower_bound". optimum is null when unknown.
nlohmann::json to_json(const SolveResult& result);

// {"valid", "failure", "message"} plus "witness" / "pair" when present.
nlohmann::json to_json(const Verdict& verdict);

nlohmann::json to_json(const FormulaCase& formula);

}  // namespace flowerdom

#endif  // FLOWERDOM_IO_HPP_
