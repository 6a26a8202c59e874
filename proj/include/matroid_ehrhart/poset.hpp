// Copyright 2026 The Authors.
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

// Finite posets and their order polynomials.

#ifndef MATROID_EHRHART_POSET_HPP_
#define MATROID_EHRHART_POSET_HPP_

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matroid_ehrhart/polynomial.hpp"

namespace matroid_ehrhart {

// A strict partial order on {0, ..., p-1}. Built from any generating set of
// relations a < b; only the cover relations (Hasse diagram edges) are kept.
class Poset {
 public:
  using Relation = std::pair<int, int>;

  // Largest poset the generic counter accepts (its state is 2^p order ideals).
  static constexpr int kMaxGenericSize = 20;

  Poset() = default;

  // Throws std::invalid_argument on out-of-range elements or cycles.
  Poset(int p, const std::vector<Relation>& relations) : p_(p) {
    if (p < 0) throw std::invalid_argument("poset size must be nonnegative");
    less_.assign(p, std::vector<bool>(p, false));
    for (auto [a, b] : relations) {
      if (a < 0 || a >= p || b < 0 || b >= p) {
        throw std::invalid_argument("relation element out of range");
      }
      if (a == b) throw std::invalid_argument("relation must be irreflexive");
      less_[a][b] = true;
    }
    // Warshall closure.
    for (int m = 0; m < p; ++m) {
      for (int a = 0; a < p; ++a) {
        if (!less_[a][m]) continue;
        for (int b = 0; b < p; ++b) {
          if (less_[m][b]) less_[a][b] = true;
        }
      }
    }
    for (int a = 0; a < p; ++a) {
      if (less_[a][a]) throw std::invalid_argument("relations contain a cycle");
    }
    for (int a = 0; a < p; ++a) {
      for (int b = 0; b < p; ++b) {
        if (!less_[a][b]) continue;
        bool shortcut = false;
        for (int m = 0; m < p && !shortcut; ++m) {
          shortcut = less_[a][m] && less_[m][b];
        }
        if (!shortcut) covers_.emplace_back(a, b);
      }
    }
  }

  int size() const { return p_; }
  // Cover pairs (a, b) meaning a is covered by b, sorted.
  const std::vector<Relation>& covers() const { return covers_; }
  bool Less(int a, int b) const { return less_[a][b]; }
  bool LessEqual(int a, int b) const { return a == b || less_[a][b]; }
  bool Comparable(int a, int b) const {
    return a == b || less_[a][b] || less_[b][a];
  }

  // Elements in the order of a path through the Hasse diagram when the
  // diagram (as an undirected graph) is a single path; empty otherwise.
  // Chains, fences, and the one-element poset all qualify.
  std::vector<int> FencePath() const {
    if (p_ == 0) return {};
    if (static_cast<int>(covers_.size()) != p_ - 1) return {};
    std::vector<std::vector<int>> adj(p_);
    for (auto [a, b] : covers_) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    int start = -1;
    for (int v = 0; v < p_; ++v) {
      if (adj[v].size() > 2) return {};
      if (adj[v].size() <= 1 && start < 0) start = v;
    }
    if (start < 0) return {};
    std::vector<int> path{start};
    int prev = -1;
    int cur = start;
    while (true) {
      int next = -1;
      for (int w : adj[cur]) {
        if (w != prev) next = w;
      }
      if (next < 0) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    if (static_cast<int>(path.size()) != p_) return {};
    return path;
  }

  bool IsFence() const { return p_ > 0 && !FencePath().empty(); }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.p_ == b.p_ && a.covers_ == b.covers_;
  }

 private:
  int p_ = 0;
  std::vector<std::vector<bool>> less_;
  std::vector<Relation> covers_;
};

// Literal "p; a<b, c<d" with 1-based elements, e.g. "3; 1<2, 1<3".
inline Poset ParsePoset(const std::string& text) {
  auto semi = text.find(';');
  std::istringstream head(text.substr(0, semi));
  int p = -1;
  if (!(head >> p) || p < 0) {
    throw std::invalid_argument("poset literal must start with its size");
  }
  std::vector<Poset::Relation> relations;
  if (semi != std::string::npos) {
    std::string body = text.substr(semi + 1);
    std::istringstream items(body);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.find_first_not_of(" \t") == std::string::npos) continue;
      std::istringstream rel(item);
      int a = 0;
      int b = 0;
      char op = 0;
      std::string extra;
      if (!(rel >> a >> op >> b) || op != '<' || (rel >> extra)) {
        throw std::invalid_argument("bad poset relation '" + item + "'");
      }
      relations.emplace_back(a - 1, b - 1);
    }
  }
  return Poset(p, relations);
}

inline std::string FormatPoset(const Poset& poset) {
  std::string out = std::to_string(poset.size()) + ";";
  bool first = true;
  for (auto [a, b] : poset.covers()) {
    out += first ? " " : ", ";
    out += std::to_string(a + 1) + "<" + std::to_string(b + 1);
    first = false;
  }
  return out;
}

namespace internal {

// Sweep along the fence path; ways[v] counts labelings of the prefix ending
// with value v + 1.
inline BigInt CountFenceMaps(const Poset& poset, const std::vector<int>& path,
                             int t) {
  std::vector<BigInt> ways(t, 1);
  for (std::size_t i = 1; i < path.size(); ++i) {
    const bool rising = poset.Less(path[i - 1], path[i]);
    std::vector<BigInt> next(t, 0);
    if (rising) {
      BigInt prefix = 0;
      for (int v = 0; v < t; ++v) {
        prefix += ways[v];
        next[v] = prefix;
      }
    } else {
      BigInt suffix = 0;
      for (int v = t; v-- > 0;) {
        suffix += ways[v];
        next[v] = suffix;
      }
    }
    ways = std::move(next);
  }
  BigInt total = 0;
  for (const BigInt& w : ways) total += w;
  return total;
}

// Order-preserving maps to a t-chain are chains of order ideals
// I_1 ⊆ ... ⊆ I_{t-1} ⊆ P, with I_j the preimage of {1..j}.
inline BigInt CountViaIdealChains(const Poset& poset, int t) {
  const int p = poset.size();
  const std::size_t count = std::size_t{1} << p;
  std::vector<std::uint32_t> below(p, 0);
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      if (poset.Less(b, a)) below[a] |= std::uint32_t{1} << b;
    }
  }
  std::vector<bool> ideal(count, true);
  for (std::size_t s = 0; s < count; ++s) {
    for (int a = 0; a < p && ideal[s]; ++a) {
      if ((s >> a & 1) && (below[a] & ~s) != 0) ideal[s] = false;
    }
  }
  std::vector<BigInt> chains(count);
  for (std::size_t s = 0; s < count; ++s) chains[s] = ideal[s] ? 1 : 0;
  for (int step = 1; step < t; ++step) {
    // Subset-sum (zeta) transform, then restrict back to ideals.
    for (int bit = 0; bit < p; ++bit) {
      for (std::size_t s = 0; s < count; ++s) {
        if (s >> bit & 1) chains[s] += chains[s ^ (std::size_t{1} << bit)];
      }
    }
    for (std::size_t s = 0; s < count; ++s) {
      if (!ideal[s]) chains[s] = 0;
    }
  }
  return chains[count - 1];
}

}  // namespace internal

// Number of maps f: P -> {1..t} with a <= b implying f(a) <= f(b).
// Fences use a linear sweep; other posets count chains of order ideals and
// are limited to kMaxGenericSize elements.
inline BigInt CountOrderPreservingMaps(const Poset& poset, int t) {
  if (t < 1) throw std::invalid_argument("t must be at least 1");
  if (poset.size() == 0) return 1;
  std::vector<int> path = poset.FencePath();
  if (!path.empty()) return internal::CountFenceMaps(poset, path, t);
  if (poset.size() > Poset::kMaxGenericSize) {
    throw std::invalid_argument("poset too large for the generic counter");
  }
  return internal::CountViaIdealChains(poset, t);
}

// Degree-p polynomial through the counts at t = 1..p+1.
inline RationalPolynomial OrderPolynomial(const Poset& poset) {
  const int p = poset.size();
  std::vector<Rational> nodes;
  std::vector<Rational> values;
  for (int t = 1; t <= p + 1; ++t) {
    nodes.emplace_back(t);
    values.emplace_back(CountOrderPreservingMaps(poset, t));
  }
  return Interpolate(nodes, values);
}

}  // namespace matroid_ehrhart

#endif  // MATROID_EHRHART_POSET_HPP_
