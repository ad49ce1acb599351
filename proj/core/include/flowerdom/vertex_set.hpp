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

#ifndef FLOWERDOM_VERTEX_SET_HPP_
#define FLOWERDOM_VERTEX_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace flowerdom {

// Fixed-universe bitset over vertex indices [0, universe).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }

  void insert(std::size_t v) { words_[v / 64] |= bit(v); }
  void erase(std::size_t v) { words_[v / 64] &= ~bit(v); }
  bool contains(std::size_t v) const {
    return v < universe_ && (words_[v / 64] & bit(v)) != 0;
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  // Indices in increasing order.
  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w != 0) {
        out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  static std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << (v % 64); }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace flowerdom

#endif  // FLOWERDOM_VERTEX_SET_HPP_
