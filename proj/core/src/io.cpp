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

#include "flowerdom/io.hpp"

#include <sstream>

namespace flowerdom {
namespace {

using nlohmann::json;

Vertex parse_name(const json& j) {
  if (!j.is_string()) throw FormatError("vertex names must be strings, got " + j.dump());
  const auto text = j.get<std::string>();
  auto v = parse_vertex(text);
  if (!v) throw FormatError("malformed vertex name '" + text + "'");
  return *v;
}

json pair_json(const VertexPair& p) {
  return json::array({to_string(p.first), to_string(p.second)});
}

}  // namespace

std::string to_edge_list(const FlowerGraph& g) {
  std::ostringstream out;
  for (auto [a, b] : g.edges()) {
    out << to_string(g.vertex_at(a)) << ' ' << to_string(g.vertex_at(b)) << '\n';
  }
  return out.str();
}

std::string to_dot(const FlowerGraph& g) {
  std::ostringstream out;
  out << "graph \"f_" << g.n() << "x" << g.m() << "\" {\n";
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto vertex = g.vertex_at(v);
    out << "  \"" << to_string(vertex) << "\" [shape="
        << (vertex.is_hub() ? "box" : "circle") << "];\n";
  }
  for (auto [a, b] : g.edges()) {
    out << "  \"" << to_string(g.vertex_at(a)) << "\" -- \""
        << to_string(g.vertex_at(b)) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

json to_json(const FlowerGraph& g) {
  json vertices = json::array();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    vertices.push_back(to_string(g.vertex_at(v)));
  }
  json edges = json::array();
  for (auto [a, b] : g.edges()) {
    edges.push_back(json::array({to_string(g.vertex_at(a)), to_string(g.vertex_at(b))}));
  }
  return json{{"n", g.n()}, {"m", g.m()}, {"vertices", vertices}, {"edges", edges}};
}

json to_json(const PairedSet& set) {
  const auto canon = set.canonical();
  json members = json::array();
  for (const auto& v : canon.members) members.push_back(to_string(v));
  json pairs = json::array();
  for (const auto& p : canon.pairs) pairs.push_back(pair_json(p));
  return json{{"members", members}, {"pairs", pairs}};
}

PairedSet paired_set_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("paired set must be a JSON object");
  if (!j.contains("members") || !j["members"].is_array()) {
    throw FormatError("paired set needs a \"members\" array");
  }
  PairedSet out;
  for (const auto& name : j["members"]) out.members.push_back(parse_name(name));
  if (j.contains("pairs")) {
    if (!j["pairs"].is_array()) throw FormatError("\"pairs\" must be an array");
    for (const auto& p : j["pairs"]) {
      if (!p.is_array() || p.size() != 2) {
        throw FormatError("each pair must be a two-element array, got " + p.dump());
      }
      out.pairs.emplace_back(parse_name(p[0]), parse_name(p[1]));
    }
  }
  return out;
}

json to_json(const ConstructionResult& result) {
  json out = to_json(result.set);
  out["k"] = result.k;
  out["formula"] = result.formula_value;
  out["literal"] = result.literal;
  out["ledger"] = result.ledger_note ? json(*result.ledger_note) : json(nullptr);
  return out;
}

json to_json(const SolveResult& result) {
  json out;
  out["optimum"] = result.optimum ? json(*result.optimum) : json(nullptr);
  out["proven"] = result.proven;
  out["status"] = std::string(status_name(result.status));
  out["lower_bound"] = result.lower_bound;
  out["witness"] = to_json(result.witness);
  out["nodes"] = result.nodes;
  out["millis"] = result.millis;
  return out;
}

json to_json(const Verdict& verdict) {
  json out;
  out["valid"] = verdict.valid();
  out["failure"] =
      verdict.valid() ? json(nullptr) : json(std::string(failure_name(verdict.failure)));
  if (verdict.witness) out["witness"] = to_string(*verdict.witness);
  if (verdict.pair) out["pair"] = pair_json(*verdict.pair);
  out["message"] = verdict.message;
  return out;
}

json to_json(const FormulaCase& formula) {
  return json{{"k", formula.k},
              {"residue", formula.residue},
              {"expression", formula.expression},
              {"value", formula.value}};
}

}  // namespace flowerdom
