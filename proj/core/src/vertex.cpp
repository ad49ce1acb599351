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

#include "flowerdom/vertex.hpp"

#include <charconv>

namespace flowerdom {
namespace {

// Positive decimal without sign or leading zeros.
std::optional<int> parse_index(std::string_view text) {
  if (text.empty() || text.front() < '1' || text.front() > '9') return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace

std::string to_string(const Vertex& v) {
  if (v.is_hub()) return "u" + std::to_string(v.petal);
  return "v" + std::to_string(v.petal) + "." + std::to_string(v.position);
}

std::optional<Vertex> parse_vertex(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  const char tag = text.front();
  text.remove_prefix(1);
  if (tag == 'u') {
    auto i = parse_index(text);
    if (!i) return std::nullopt;
    return Vertex::Hub(*i);
  }
  if (tag == 'v') {
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) return std::nullopt;
    auto i = parse_index(text.substr(0, dot));
    auto j = parse_index(text.substr(dot + 1));
    if (!i || !j) return std::nullopt;
    return Vertex::Petal(*i, *j);
  }
  return std::nullopt;
}

}  // namespace flowerdom
