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

#include "flowerdom/constructions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "flowerdom/formulas.hpp"

namespace flowerdom {
namespace {

// Accumulates the block description of a set. Petal blocks are written the
// way the reference sets are: for j = 1..count, the pair
// (v_{i, step*j + offset}, v_{i, step*j + offset + 1}).
class DraftBuilder {
 public:
  DraftBuilder(int n, std::string label) : n_(n) { draft_.case_label = std::move(label); }

  int wrap(int i) const { return ((i - 1) % n_ + n_) % n_ + 1; }

  void hubs(int a, int b) {
    draft_.pairs.emplace_back(Vertex::Hub(wrap(a)), Vertex::Hub(wrap(b)));
  }
  void hub_petal(int hub, int petal, int position) {
    draft_.pairs.emplace_back(Vertex::Hub(wrap(hub)),
                              Vertex::Petal(wrap(petal), position));
  }
  void petal_blocks(int petal, int step, int offset, int count) {
    for (int j = 1; j <= count; ++j) {
      const int first = step * j + offset;
      draft_.pairs.emplace_back(Vertex::Petal(wrap(petal), first),
                                Vertex::Petal(wrap(petal), first + 1));
    }
  }
  void note(std::string text) { draft_.notes.push_back(std::move(text)); }
  void completed(std::string text) {
    draft_.completed = true;
    note(std::move(text));
  }

  DraftConstruction take() { return std::move(draft_); }

 private:
  int n_;
  DraftConstruction draft_;
};

std::string label(int k, int m, int modulus, const std::string& subcase) {
  std::string out = "k=" + std::to_string(k) + ", m=" +
                    std::to_string(m % modulus) + " mod " + std::to_string(modulus);
  if (!subcase.empty()) out += ", " + subcase;
  return out;
}

// ---------------------------------------------------------------------------
// k = 1, t = floor(m/4).

DraftConstruction draft_k1_m0(int n, int m) {
  const int t = m / 4;
  if (n % 2 == 0) {
    DraftBuilder b(n, label(1, m, 4, "n even"));
    for (int l = 1; l <= n / 2; ++l) b.hubs(2 * l - 1, 2 * l);
    for (int i = 1; i <= n; ++i) b.petal_blocks(i, 4, -1, t - 1);
    return b.take();
  }
  DraftBuilder b(n, label(1, m, 4, "n odd"));
  for (int l = 1; l <= (n - 1) / 2; ++l) b.hubs(2 * l - 1, 2 * l);
  b.hub_petal(n, n, 1);
  for (int i = 1; i <= n - 1; ++i) b.petal_blocks(i, 4, -1, t - 1);
  b.petal_blocks(n, 4, 0, t - 1);
  if (t > 1) {
    b.completed("block {v_{n,4j}, v_{n,4j+1}} is written without a range for j; "
                "read as 1 <= j <= t-1 like the other petals");
  }
  return b.take();
}

DraftConstruction draft_k1_m1(int n, int m) {
  const int t = m / 4;
  DraftBuilder b(n, label(1, m, 4, ""));
  for (int i = 1; i <= n; ++i) b.petal_blocks(i, 4, -3, t);
  return b.take();
}

DraftConstruction draft_k1_m2(int n, int m) {
  const int t = m / 4;
  const int blocks = static_cast<int>(ceil_div(n, 4));
  DraftBuilder b(n, label(1, m, 4, n == 5 ? "n=5" : "n!=5"));
  if (n == 5) {
    b.hubs(1, 2);
    b.hubs(4, 5);
  } else {
    for (int l = 1; l <= blocks; ++l) b.hubs(4 * l - 3, 4 * l - 2);
  }
  for (int i = 1; i <= n; ++i) b.petal_blocks(i, 4, -2, t);
  return b.take();
}

DraftConstruction draft_k1_m3(int n, int m) {
  const int t = m / 4;
  if (n == 4) {
    DraftBuilder b(n, label(1, m, 4, "n=4"));
    for (int i = 1; i <= 4; ++i) b.petal_blocks(i, 4, -1, t);
    b.hubs(1, 2);
    b.hubs(3, 4);
    return b.take();
  }
  const int blocks = n % 3 == 1 ? n / 3 : static_cast<int>(ceil_div(n, 3));
  const char* sub = n % 3 == 0 ? "n=0 mod 3" : (n % 3 == 1 ? "n=1 mod 3" : "n=2 mod 3");
  DraftBuilder b(n, label(1, m, 4, sub));
  for (int i = 1; i <= blocks; ++i) {
    b.petal_blocks(3 * i - 2, 4, -1, t);
    b.petal_blocks(3 * i - 1, 4, -1, t);
  }
  const int thirds = n % 3 == 0 ? blocks : blocks - 1;
  for (int l = 1; l <= thirds; ++l) b.petal_blocks(3 * l, 4, -2, t);
  if (t > 0 && thirds > 0) {
    b.completed("block {v_{3l,4j-2}, v_{3l,4j-1}} is written with range over i "
                "and no range for j; read as l over the stated range and "
                "1 <= j <= t");
  }
  if (n % 3 == 1) {
    b.petal_blocks(n - 1, 4, -1, t);
    b.petal_blocks(n, 4, -1, t);
    if (t > 0) {
      b.completed("blocks on petals n-1 and n are written without a range "
                  "for j; read as 1 <= j <= t");
    }
  }
  for (int l = 1; l <= blocks; ++l) b.hubs(3 * l - 2, 3 * l - 1);
  if (n % 3 == 1) b.hubs(n - 1, n);
  return b.take();
}

// ---------------------------------------------------------------------------
// k = 2, t = floor(m/6).

DraftConstruction draft_k2_m0(int n, int m) {
  const int t = m / 6;
  const int half = static_cast<int>(ceil_div(n, 2));
  const bool odd = n % 2 == 1;
  DraftBuilder b(n, label(2, m, 6, std::string(m == 6 ? "m=6" : "m!=6") +
                                       (odd ? ", n odd" : ", n even")));
  if (odd) {
    for (int l = 1; l <= half - 1; ++l) b.hubs(2 * l - 1, 2 * l);
    b.hub_petal(n, n, 1);
    for (int i = 1; i <= n - 1; ++i) b.petal_blocks(i, 6, -1, t - 1);
    b.petal_blocks(n, 6, 0, t - 1);
  } else {
    for (int l = 1; l <= half; ++l) b.hubs(2 * l - 1, 2 * l);
    for (int i = 1; i <= n; ++i) b.petal_blocks(i, 6, -1, t - 1);
    if (m != 6) {
      b.completed("the even-n set with petal blocks is headed 'm = 6'; it is "
                  "the m != 6 case (for m = 6 its blocks are empty)");
    }
  }
  return b.take();
}

DraftConstruction draft_k2_m1(int n, int m) {
  const int t = m / 6;
  DraftBuilder b(n, label(2, m, 6, ""));
  for (int i = 1; i <= n; ++i) b.petal_blocks(i, 6, -4, t);
  return b.take();
}

DraftConstruction draft_k2_m2(int n, int m) {
  const int t = m / 6;
  const int blocks = static_cast<int>(ceil_div(n, 6));
  DraftBuilder b(n, label(2, m, 6, n % 6 == 1 ? "n=1 mod 6" : "n!=1 mod 6"));
  for (int i = 1; i <= n; ++i) b.petal_blocks(i, 6, -3, t);
  for (int l = 1; l <= blocks; ++l) b.hubs(6 * l - 5, 6 * l - 4);
  if (n % 6 == 1) b.hubs(n - 1, n);
  return b.take();
}

DraftConstruction draft_k2_m3(int n, int m) {
  const int t = m / 6;
  const int blocks = static_cast<int>(ceil_div(n, 5));
  const std::string mismatch =
      "hub block {u_{5l-4}, u_{5i-3}} mixes indices; read both with the bound l";
  if (n == 3) {
    DraftBuilder b(n, label(2, m, 6, "n=3"));
    b.petal_blocks(1, 6, -1, t);
    b.petal_blocks(2, 6, -1, t);
    b.petal_blocks(3, 6, -2, t);
    b.hubs(1, 2);
    return b.take();
  }
  if (n == 5) {
    DraftBuilder b(n, label(2, m, 6, "n=5"));
    b.petal_blocks(1, 6, -1, t);
    b.petal_blocks(2, 6, -1, t);
    b.petal_blocks(3, 6, -2, t);
    b.petal_blocks(4, 6, -3, t);
    b.petal_blocks(5, 6, -2, t);
    b.hubs(1, 2);
    return b.take();
  }
  if (n == 4 || n == 6) {
    DraftBuilder b(n, label(2, m, 6, "n=4,6"));
    for (int i = 1; i <= blocks; ++i) {
      b.petal_blocks(4 * i - 3, 6, -1, t);
      b.petal_blocks(4 * i - 2, 6, -1, t);
    }
    b.petal_blocks(3, 6, -2, t);
    b.petal_blocks(4, 6, -2, t);
    b.hubs(1, 2);
    return b.take();
  }
  switch (n % 5) {
    case 0: {
      DraftBuilder b(n, label(2, m, 6, "n=0 mod 5"));
      for (int i = 1; i <= blocks; ++i) {
        b.petal_blocks(5 * i - 4, 6, -1, t);
        b.petal_blocks(5 * i - 3, 6, -1, t);
        b.petal_blocks(5 * i - 2, 6, -2, t);
        b.petal_blocks(5 * i, 6, -2, t);
        b.petal_blocks(5 * i - 1, 6, -3, t);
      }
      for (int l = 1; l <= blocks; ++l) b.hubs(5 * l - 4, 5 * l - 3);
      b.note(mismatch);
      return b.take();
    }
    case 1: {
      DraftBuilder b(n, label(2, m, 6, "n=1 mod 5"));
      for (int i = 1; i <= blocks - 1; ++i) {
        b.petal_blocks(5 * i - 4, 6, -1, t);
        b.petal_blocks(5 * i - 3, 6, -1, t);
        b.petal_blocks(5 * i - 2, 6, -2, t);
      }
      for (int p = 1; p <= blocks - 2; ++p) {
        b.petal_blocks(5 * p, 6, -2, t);
        b.petal_blocks(5 * p - 1, 6, -3, t);
      }
      b.petal_blocks(n - 2, 6, -2, t);
      b.petal_blocks(n - 1, 6, -1, t);
      b.petal_blocks(n, 6, -1, t);
      for (int l = 1; l <= blocks - 1; ++l) b.hubs(5 * l - 4, 5 * l - 3);
      b.hubs(n - 1, n);
      b.note(mismatch);
      return b.take();
    }
    case 2: {
      DraftBuilder b(n, label(2, m, 6, "n=2 mod 5"));
      for (int i = 1; i <= blocks; ++i) {
        b.petal_blocks(5 * i - 4, 6, -1, t);
        b.petal_blocks(5 * i - 3, 6, -1, t);
      }
      for (int i = 1; i <= blocks - 1; ++i) {
        b.petal_blocks(5 * i - 2, 6, -2, t);
        b.petal_blocks(5 * i - 1, 6, -3, t);
        b.petal_blocks(5 * i, 6, -2, t);
      }
      for (int l = 1; l <= blocks; ++l) b.hubs(5 * l - 4, 5 * l - 3);
      b.note(mismatch);
      return b.take();
    }
    default: {
      // n = 3 or 4 mod 5.
      DraftBuilder b(n, label(2, m, 6, n % 5 == 3 ? "n=3 mod 5" : "n=4 mod 5"));
      for (int i = 1; i <= blocks; ++i) {
        b.petal_blocks(5 * i - 4, 6, -1, t);
        b.petal_blocks(5 * i - 3, 6, -1, t);
        b.petal_blocks(5 * i - 2, 6, -2, t);
      }
      for (int i = 1; i <= blocks - 1; ++i) b.petal_blocks(5 * i - 1, 6, -3, t);
      for (int p = 1; p <= blocks - 1; ++p) b.petal_blocks(5 * p, 6, -2, t);
      if (n % 5 == 4) b.petal_blocks(n, 6, -2, t);
      for (int l = 1; l <= blocks; ++l) b.hubs(5 * l - 4, 5 * l - 3);
      b.note(mismatch);
      return b.take();
    }
  }
}

DraftConstruction draft_k2_m4(int n, int m) {
  const int t = m / 6;
  const int blocks = static_cast<int>(ceil_div(n, 4));
  if (n == 3) {
    DraftBuilder b(n, label(2, m, 6, "n=3"));
    b.petal_blocks(1, 6, -1, t);
    b.petal_blocks(2, 6, -1, t);
    b.petal_blocks(3, 6, -2, t);
    b.hubs(1, 2);
    return b.take();
  }
  if (n == 5) {
    DraftBuilder b(n, label(2, m, 6, "n=5"));
    for (int i = 1; i <= blocks; ++i) {
      b.petal_blocks(3 * i - 2, 6, -1, t);
      b.petal_blocks(3 * i - 1, 6, -1, t);
    }
    b.petal_blocks(3, 6, -2, t);
    b.hubs(1, 2);
    b.hubs(4, 5);
    return b.take();
  }
  switch (n % 4) {
    case 0: {
      DraftBuilder b(n, label(2, m, 6, "n=0 mod 4"));
      for (int i = 1; i <= blocks; ++i) {
        b.petal_blocks(4 * i - 3, 6, -1, t);
        b.petal_blocks(4 * i - 2, 6, -1, t);
        b.petal_blocks(4 * i - 1, 6, -2, t);
        b.petal_blocks(4 * i, 6, -2, t);
      }
      for (int l = 1; l <= blocks; ++l) b.hubs(4 * l - 3, 4 * l - 2);
      return b.take();
    }
    case 1: {
      DraftBuilder b(n, label(2, m, 6, "n=1 mod 4"));
      for (int i = 1; i <= blocks - 1; ++i) {
        b.petal_blocks(4 * i - 3, 6, -1, t);
        b.petal_blocks(4 * i - 2, 6, -1, t);
        b.petal_blocks(4 * i - 1, 6, -2, t);
      }
      b.petal_blocks(n - 1, 6, -1, t);
      b.petal_blocks(n, 6, -1, t);
      for (int p = 1; p <= blocks - 2; ++p) b.petal_blocks(4 * p, 6, -2, t);
      for (int l = 1; l <= blocks - 1; ++l) b.hubs(4 * l - 3, 4 * l - 2);
      b.hubs(n - 1, n);
      return b.take();
    }
    case 2: {
      DraftBuilder b(n, label(2, m, 6, "n=2 mod 4"));
      for (int i = 1; i <= blocks; ++i) {
        b.petal_blocks(4 * i - 3, 6, -1, t);
        b.petal_blocks(4 * i - 2, 6, -1, t);
      }
      for (int i = 1; i <= blocks - 1; ++i) {
        b.petal_blocks(4 * i - 1, 6, -2, t);
        b.petal_blocks(4 * i, 6, -2, t);
      }
      for (int l = 1; l <= blocks; ++l) b.hubs(4 * l - 3, 4 * l - 2);
      return b.take();
    }
    default: {
      DraftBuilder b(n, label(2, m, 6, "n=3 mod 4"));
      for (int i = 1; i <= blocks; ++i) {
        b.petal_blocks(4 * i - 3, 6, -1, t);
        b.petal_blocks(4 * i - 2, 6, -1, t);
        b.petal_blocks(4 * i - 1, 6, -2, t);
      }
      for (int p = 1; p <= blocks - 1; ++p) b.petal_blocks(4 * p, 6, -2, t);
      for (int l = 1; l <= blocks; ++l) b.hubs(4 * l - 3, 4 * l - 2);
      return b.take();
    }
  }
}

// Listed under a second "m = 4 (mod 6)" heading; its derivation and the
// closed form place it at m = 5 (mod 6).
DraftConstruction draft_k2_m5(int n, int m) {
  const int t = m / 6;
  const int blocks = static_cast<int>(ceil_div(n, 3));
  const std::string heading =
      "case is headed 'm = 4 (mod 6)' a second time; read as m = 5 (mod 6)";
  if (n == 3) {
    DraftBuilder b(n, label(2, m, 6, "n=3"));
    b.petal_blocks(1, 6, -1, t);
    b.petal_blocks(2, 6, -1, t);
    b.petal_blocks(3, 6, -2, t);
    b.hubs(1, 2);
    b.completed(heading);
    return b.take();
  }
  if (n == 4) {
    DraftBuilder b(n, label(2, m, 6, "n=4"));
    for (int i = 1; i <= 4; ++i) b.petal_blocks(i, 6, -1, t);
    b.hubs(1, 2);
    b.hubs(3, 4);
    b.completed(heading);
    return b.take();
  }
  if (n == 5) {
    DraftBuilder b(n, label(2, m, 6, "n=5"));
    for (int i : {1, 2, 4, 5}) b.petal_blocks(i, 6, -1, t);
    b.petal_blocks(3, 6, -2, t);
    b.hubs(1, 2);
    b.hubs(3, 4);
    b.completed(heading);
    return b.take();
  }
  switch (n % 3) {
    case 0: {
      DraftBuilder b(n, label(2, m, 6, "n=0 mod 3"));
      for (int i = 1; i <= blocks; ++i) {
        b.petal_blocks(3 * i - 2, 6, -1, t);
        b.petal_blocks(3 * i - 1, 6, -1, t);
        b.petal_blocks(3 * i, 6, -2, t);
      }
      for (int l = 1; l <= blocks; ++l) b.hubs(3 * l - 2, 3 * l - 1);
      b.completed(heading);
      return b.take();
    }
    case 1: {
      DraftBuilder b(n, label(2, m, 6, "n=1 mod 3"));
      for (int i = 1; i <= blocks - 1; ++i) {
        b.petal_blocks(3 * i - 2, 6, -1, t);
        b.petal_blocks(3 * i - 1, 6, -1, t);
      }
      b.petal_blocks(n - 1, 6, -1, t);
      b.petal_blocks(n, 6, -1, t);
      for (int i = 1; i <= blocks - 2; ++i) b.petal_blocks(3 * i, 6, -2, t);
      for (int l = 1; l <= blocks - 1; ++l) b.hubs(3 * l - 2, 3 * l - 1);
      b.hubs(n - 1, n);
      b.completed(heading);
      return b.take();
    }
    default: {
      DraftBuilder b(n, label(2, m, 6, "n=2 mod 3"));
      for (int i = 1; i <= blocks; ++i) {
        b.petal_blocks(3 * i - 2, 6, -1, t);
        b.petal_blocks(3 * i - 1, 6, -1, t);
      }
      for (int i = 1; i <= blocks - 1; ++i) b.petal_blocks(3 * i, 6, -2, t);
      for (int l = 1; l <= blocks; ++l) b.hubs(3 * l - 2, 3 * l - 1);
      b.completed(heading);
      return b.take();
    }
  }
}

// ---------------------------------------------------------------------------
// Documented repairs: alternative readings for the drafts known to fail.

std::optional<DraftConstruction> documented_repair(int n, int m, int k) {
  if (k == 1 && m % 4 == 2 && n % 4 == 1 && n != 5) {
    // Last hub block (u_n, u_{n+1} = u_1) collides with (u_1, u_2). The
    // reference n = 5 set already uses (u_{n-1}, u_n) instead.
    auto draft = draft_k1_m2(n, m);
    const auto blocks = static_cast<int>(ceil_div(n, 4));
    draft.pairs.erase(std::remove(draft.pairs.begin(), draft.pairs.end(),
                                  VertexPair{Vertex::Hub(n), Vertex::Hub(1)}),
                      draft.pairs.end());
    draft.pairs.emplace_back(Vertex::Hub(n - 1), Vertex::Hub(n));
    draft.notes.push_back(
        "hub block l = " + std::to_string(blocks) +
        " wraps to (u_n, u_1) and collides with (u_1, u_2); replaced by "
        "(u_{n-1}, u_n), the pattern of the reference n = 5 set");
    return draft;
  }
  if (k == 2 && m % 6 == 2 && n % 6 == 1) {
    // The hub term lists u_{6l-5}, u_{6l-4}, u_{n-1}, u_n for l up to
    // ceil(n/6): one block too many, and its last block wraps onto u_1.
    auto draft = draft_k2_m2(n, m);
    draft.pairs.erase(std::remove(draft.pairs.begin(), draft.pairs.end(),
                                  VertexPair{Vertex::Hub(n), Vertex::Hub(1)}),
                      draft.pairs.end());
    draft.notes.push_back(
        "hub term {u_{6l-5}, u_{6l-4}, u_{n-1}, u_n : l <= ceil(n/6)} read with "
        "l <= ceil(n/6)-1 so the last block is (u_{n-1}, u_n) only");
    return draft;
  }
  if (k == 2 && m % 6 == 3 && n == 6) {
    // n = 6 is listed both with n = 4 and as n = 5t+1 (t = 1); the first
    // leaves petal 5 undominated, the second is sound.
    DraftBuilder b(6, label(2, m, 6, "n=1 mod 5"));
    const int t = m / 6;
    b.petal_blocks(1, 6, -1, t);
    b.petal_blocks(2, 6, -1, t);
    b.petal_blocks(3, 6, -2, t);
    b.petal_blocks(4, 6, -2, t);
    b.petal_blocks(5, 6, -1, t);
    b.petal_blocks(6, 6, -1, t);
    b.hubs(1, 2);
    b.hubs(5, 6);
    b.note("n = 6 is covered by both the 'n = 4, 6' set and the n = 5t+1 (t = 1) "
           "family; the former misses petal 5, the latter is used");
    return b.take();
  }
  if (k == 2 && m % 6 == 5 && n == 5) {
    auto draft = draft_k2_m5(n, m);
    std::replace(draft.pairs.begin(), draft.pairs.end(),
                 VertexPair{Vertex::Hub(3), Vertex::Hub(4)},
                 VertexPair{Vertex::Hub(4), Vertex::Hub(5)});
    draft.notes.push_back(
        "n = 5 hub set {u_1, u_2, u_3, u_4} leaves v_{5,2} undominated when "
        "m > 5; {u_1, u_2, u_4, u_5} (the general n = 3t+2 pattern) is used");
    return draft;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Materialisation and checking.

struct Candidate {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // by index
  std::vector<std::string> problems;
};

// Maps draft pairs onto g. Identical pairs listed twice collapse (the
// reference sets are sets); pairs naming missing vertices or reusing a
// vertex are dropped and reported.
Candidate materialise(const FlowerGraph& g, const DraftConstruction& draft) {
  Candidate out;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  VertexSet used(g.num_vertices());
  for (const auto& [a, b] : draft.pairs) {
    if (!g.contains(a) || !g.contains(b)) {
      out.problems.push_back("pair (" + to_string(a) + ", " + to_string(b) +
                             ") names a vertex outside the graph");
      continue;
    }
    auto ia = g.index_of(a);
    auto ib = g.index_of(b);
    if (ib < ia) std::swap(ia, ib);
    if (!seen.insert({ia, ib}).second) continue;
    if (ia == ib || used.contains(ia) || used.contains(ib)) {
      out.problems.push_back("pair (" + to_string(a) + ", " + to_string(b) +
                             ") reuses a vertex");
      continue;
    }
    if (!g.adjacent(ia, ib)) {
      out.problems.push_back("pair (" + to_string(a) + ", " + to_string(b) +
                             ") is not an edge");
      continue;
    }
    used.insert(ia);
    used.insert(ib);
    out.pairs.emplace_back(ia, ib);
  }
  return out;
}

PairedSet to_paired_set(const FlowerGraph& g,
                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<VertexPair> out;
  out.reserve(pairs.size());
  for (auto [a, b] : pairs) out.emplace_back(g.vertex_at(a), g.vertex_at(b));
  return PairedSet::FromPairs(std::move(out)).canonical();
}

bool accepts(const FlowerGraph& g, const Candidate& c, int k, long long target) {
  if (!c.problems.empty()) return false;
  if (static_cast<long long>(c.pairs.size()) * 2 != target) return false;
  return is_k_paired_dominating(g, to_paired_set(g, c.pairs), k).valid();
}

// Greedy local repair: add the pair covering the most undominated vertices
// (hub pairs first on ties) while below target; at target, swap the pair
// whose replacement leaves the fewest undominated vertices. Returns nullopt
// when no step improves.
std::optional<Candidate> greedy_repair(const FlowerGraph& g, Candidate c, int k,
                                       long long target,
                                       std::vector<std::string>& log) {
  const auto count = g.num_vertices();
  const auto edges = g.edges();
  auto rank = [&](std::pair<std::size_t, std::size_t> e) {
    // 0 = hub pair, 1 = mixed, 2 = petal pair.
    return static_cast<int>(g.degree(e.first) != 4) +
           static_cast<int>(g.degree(e.second) != 4);
  };
  auto uncovered_after = [&](const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    VertexSet members(count);
    for (auto [a, b] : pairs) {
      members.insert(a);
      members.insert(b);
    }
    if (members.empty()) return count;
    const auto dist = distance_to_set(g, members, k);
    return static_cast<std::size_t>(
        std::count_if(dist.begin(), dist.end(), [k](int d) { return d > k; }));
  };
  auto used_set = [&](const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    VertexSet used(count);
    for (auto [a, b] : pairs) {
      used.insert(a);
      used.insert(b);
    }
    return used;
  };

  const int max_steps = static_cast<int>(target) + 8;
  for (int step = 0; step < max_steps; ++step) {
    const auto size = static_cast<long long>(c.pairs.size()) * 2;
    const auto uncovered = uncovered_after(c.pairs);
    if (uncovered == 0 && size == target) return c;
    if (size > target) return std::nullopt;

    const auto used = used_set(c.pairs);
    if (size < target) {
      // Add the best free edge.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      std::size_t best_left = count + 1;
      int best_rank = 3;
      for (auto e : edges) {
        if (used.contains(e.first) || used.contains(e.second)) continue;
        auto trial = c.pairs;
        trial.push_back(e);
        const auto left = uncovered_after(trial);
        const auto r = rank(e);
        if (left < best_left || (left == best_left && r < best_rank)) {
          best = e;
          best_left = left;
          best_rank = r;
        }
      }
      if (!best) return std::nullopt;
      c.pairs.push_back(*best);
      log.push_back("added pair (" + to_string(g.vertex_at(best->first)) + ", " +
                    to_string(g.vertex_at(best->second)) + ")");
      continue;
    }

    // At target size but not dominating: best single swap.
    std::optional<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> best;
    std::size_t best_left = uncovered;
    int best_rank = 3;
    for (std::size_t drop = 0; drop < c.pairs.size(); ++drop) {
      auto without = c.pairs;
      without.erase(without.begin() + static_cast<std::ptrdiff_t>(drop));
      const auto free = used_set(without);
      for (auto e : edges) {
        if (free.contains(e.first) || free.contains(e.second)) continue;
        if (e == c.pairs[drop]) continue;
        auto trial = without;
        trial.push_back(e);
        const auto left = uncovered_after(trial);
        const auto r = rank(e);
        if (left < best_left || (left == best_left && best && r < best_rank)) {
          best = {drop, e};
          best_left = left;
          best_rank = r;
        }
      }
    }
    if (!best) return std::nullopt;
    const auto old = c.pairs[best->first];
    c.pairs[best->first] = best->second;
    log.push_back("swapped (" + to_string(g.vertex_at(old.first)) + ", " +
                  to_string(g.vertex_at(old.second)) + ") for (" +
                  to_string(g.vertex_at(best->second.first)) + ", " +
                  to_string(g.vertex_at(best->second.second)) + ")");
  }
  return std::nullopt;
}

std::string join(const std::vector<std::string>& parts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out << "; ";
    out << parts[i];
  }
  return out.str();
}

ConstructionResult finish(const FlowerGraph& g, int k, long long target,
                          const Candidate& c, bool literal,
                          const std::vector<std::string>& notes) {
  ConstructionResult r;
  r.set = to_paired_set(g, c.pairs);
  r.formula_value = target;
  r.k = k;
  r.literal = literal;
  if (!notes.empty()) r.ledger_note = join(notes);
  return r;
}

ConstructionResult build(int n, int m, int k) {
  const FlowerGraph g(n, m);
  const long long target = formula_case(n, m, k).value;
  const DraftConstruction draft =
      k == 1 ? draft_paired_set(n, m) : draft_2distance_set(n, m);

  auto candidate = materialise(g, draft);
  if (accepts(g, candidate, k, target)) {
    return finish(g, k, target, candidate, !draft.completed, draft.notes);
  }

  std::vector<std::string> notes = draft.notes;
  notes.insert(notes.begin(), "reference set for " + draft.case_label +
                                  " does not verify as written");
  notes.insert(notes.end(), candidate.problems.begin(), candidate.problems.end());

  if (auto alt = documented_repair(n, m, k)) {
    auto repaired = materialise(g, *alt);
    if (accepts(g, repaired, k, target)) {
      std::vector<std::string> alt_notes = alt->notes;
      alt_notes.insert(alt_notes.begin(), notes.front());
      return finish(g, k, target, repaired, false, alt_notes);
    }
  }

  std::vector<std::string> log;
  if (auto fixed = greedy_repair(g, candidate, k, target, log)) {
    notes.push_back("greedy repair: " + join(log));
    return finish(g, k, target, *fixed, false, notes);
  }
  throw ConstructionError("no repair yields a valid set of size " +
                          std::to_string(target) + " for f_{" + std::to_string(n) +
                          "x" + std::to_string(m) + "}, k=" + std::to_string(k) +
                          ": " + join(notes));
}

}  // namespace

DraftConstruction draft_paired_set(int n, int m) {
  FlowerParams{n, m}.validate();
  switch (m % 4) {
    case 0: return draft_k1_m0(n, m);
    case 1: return draft_k1_m1(n, m);
    case 2: return draft_k1_m2(n, m);
    default: return draft_k1_m3(n, m);
  }
}

DraftConstruction draft_2distance_set(int n, int m) {
  FlowerParams{n, m}.validate();
  switch (m % 6) {
    case 0: return draft_k2_m0(n, m);
    case 1: return draft_k2_m1(n, m);
    case 2: return draft_k2_m2(n, m);
    case 3: return draft_k2_m3(n, m);
    case 4: return draft_k2_m4(n, m);
    default: return draft_k2_m5(n, m);
  }
}

ConstructionResult build_paired_set(int n, int m) { return build(n, m, 1); }

ConstructionResult build_2distance_set(int n, int m) { return build(n, m, 2); }

ConstructionResult build_construction(int n, int m, int k) {
  if (k != 1 && k != 2) {
    throw DomainError("constructions exist only for k = 1 and k = 2, got k = " +
                      std::to_string(k));
  }
  return build(n, m, k);
}

}  // namespace flowerdom
