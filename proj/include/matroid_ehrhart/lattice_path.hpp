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

// Lattice-path matroids, skew shapes between two paths, and cell posets.
//
// Paths run from (0,0) to (n-k, k) with unit steps E = (1,0) and N = (0,1).
// A cell (x, y) is the unit square [x, x+1] x [y, y+1].

#ifndef MATROID_EHRHART_LATTICE_PATH_HPP_
#define MATROID_EHRHART_LATTICE_PATH_HPP_

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matroid_ehrhart/matroid.hpp"
#include "matroid_ehrhart/poset.hpp"

namespace matroid_ehrhart {

class LatticePath {
 public:
  // Throws std::invalid_argument unless `word` is over {N, E}.
  explicit LatticePath(std::string word) : word_(std::move(word)) {
    if (static_cast<int>(word_.size()) > kMaxGroundSetSize) {
      throw std::invalid_argument("path longer than the ground-set limit");
    }
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (word_[i] == 'N') {
        north_ |= Subset{1} << i;
      } else if (word_[i] != 'E') {
        throw std::invalid_argument("path letters must be N or E: " + word_);
      }
    }
  }

  static LatticePath FromNorthSet(int n, Subset north) {
    std::string word(n, 'E');
    for (int i = 0; i < n; ++i) {
      if (north >> i & 1) word[i] = 'N';
    }
    return LatticePath(std::move(word));
  }

  const std::string& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  int north_count() const { return Cardinality(north_); }
  // s(P): positions (1-based) of the N steps.
  Subset north_set() const { return north_; }

  // Lattice points visited, starting at (0,0).
  std::vector<std::pair<int, int>> Points() const {
    std::vector<std::pair<int, int>> pts{{0, 0}};
    int x = 0;
    int y = 0;
    for (char c : word_) {
      (c == 'N' ? y : x) += 1;
      pts.emplace_back(x, y);
    }
    return pts;
  }

  // Height of the east step that crosses column x, for x in [0, n-k).
  std::vector<int> EastStepHeights() const {
    std::vector<int> heights;
    int y = 0;
    for (char c : word_) {
      if (c == 'N') {
        ++y;
      } else {
        heights.push_back(y);
      }
    }
    return heights;
  }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::string word_;
  Subset north_ = 0;
};

using Cell = std::pair<int, int>;

class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(std::set<Cell> cells) : cells_(std::move(cells)) {}

  const std::set<Cell>& cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }
  bool empty() const { return cells_.empty(); }
  bool Contains(Cell c) const { return cells_.count(c) > 0; }

  // Cells reachable through shared edges from the first cell cover the shape.
  bool IsEdgeConnected() const {
    if (cells_.empty()) return true;
    std::set<Cell> seen{*cells_.begin()};
    std::vector<Cell> stack{*cells_.begin()};
    while (!stack.empty()) {
      auto [x, y] = stack.back();
      stack.pop_back();
      for (Cell nb : {Cell{x + 1, y}, Cell{x - 1, y}, Cell{x, y + 1},
                      Cell{x, y - 1}}) {
        if (Contains(nb) && seen.insert(nb).second) stack.push_back(nb);
      }
    }
    return seen.size() == cells_.size();
  }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  std::set<Cell> cells_;
};

namespace internal {

inline void RequireSameType(const LatticePath& a, const LatticePath& b) {
  if (a.length() != b.length() || a.north_count() != b.north_count()) {
    throw std::invalid_argument("paths differ in length or north-step count");
  }
}

}  // namespace internal

// |s(L) ∩ [m]| <= |s(U) ∩ [m]| for every m.
inline bool LiesBelow(const LatticePath& lower, const LatticePath& upper) {
  internal::RequireSameType(lower, upper);
  int lo = 0;
  int hi = 0;
  for (int i = 0; i < lower.length(); ++i) {
    lo += (lower.north_set() >> i) & 1;
    hi += (upper.north_set() >> i) & 1;
    if (lo > hi) return false;
  }
  return true;
}

// Bases are the north sets of all paths between `lower` and `upper`.
// Throws std::invalid_argument unless LiesBelow(lower, upper).
inline Matroid LatticePathMatroid(const LatticePath& lower,
                                  const LatticePath& upper) {
  if (!LiesBelow(lower, upper)) {
    throw std::invalid_argument("lower path does not lie below upper path");
  }
  const int n = lower.length();
  const int k = lower.north_count();
  std::vector<Subset> bases;
  for (Subset s = 0; s <= FullSet(n); ++s) {
    if (Cardinality(s) != k) continue;
    LatticePath p = LatticePath::FromNorthSet(n, s);
    if (LiesBelow(lower, p) && LiesBelow(p, upper)) bases.push_back(s);
  }
  return Matroid(n, std::move(bases), /*validate=*/false);
}

// The two paths share only their endpoints.
inline bool IsConnectedLpm(const LatticePath& lower, const LatticePath& upper) {
  if (!LiesBelow(lower, upper)) {
    throw std::invalid_argument("lower path does not lie below upper path");
  }
  auto lp = lower.Points();
  auto up = upper.Points();
  std::set<std::pair<int, int>> lower_points(lp.begin(), lp.end());
  int shared = 0;
  for (const auto& pt : up) shared += lower_points.count(pt);
  return shared == 2 || (lower.length() == 0 && shared == 1);
}

// Cells strictly between the two paths, column by column.
inline SkewShape ShapeBetween(const LatticePath& lower,
                              const LatticePath& upper) {
  if (!LiesBelow(lower, upper)) {
    throw std::invalid_argument("lower path does not lie below upper path");
  }
  auto lo = lower.EastStepHeights();
  auto hi = upper.EastStepHeights();
  std::set<Cell> cells;
  for (std::size_t x = 0; x < lo.size(); ++x) {
    for (int y = lo[x]; y < hi[x]; ++y) cells.emplace(static_cast<int>(x), y);
  }
  return SkewShape(std::move(cells));
}

// No four cells form a 2x2 block.
inline bool IsBorderStrip(const SkewShape& shape) {
  for (auto [x, y] : shape.cells()) {
    if (shape.Contains({x + 1, y}) && shape.Contains({x, y + 1}) &&
        shape.Contains({x + 1, y + 1})) {
      return false;
    }
  }
  return true;
}

// Adjacent cells are related so that, after the diagram is turned 45 degrees
// clockwise, a cell lies above its west and south neighbours: (x, y) < (x,
// y+1) and (x+1, y) < (x, y). Cells are numbered in (x, y) order.
inline Poset CellPoset(const SkewShape& shape) {
  std::map<Cell, int> index;
  for (const Cell& c : shape.cells()) {
    index.emplace(c, static_cast<int>(index.size()));
  }
  std::vector<Poset::Relation> relations;
  for (const auto& [cell, id] : index) {
    auto [x, y] = cell;
    if (auto it = index.find({x, y + 1}); it != index.end()) {
      relations.emplace_back(id, it->second);
    }
    if (auto it = index.find({x + 1, y}); it != index.end()) {
      relations.emplace_back(it->second, id);
    }
  }
  return Poset(static_cast<int>(index.size()), relations);
}

// A skew shape lambda/mu in English notation (row 1 on top, rows listed
// downward) placed with its bottom row at y = 0.
inline SkewShape ShapeFromPartitions(const std::vector<int>& lambda,
                                     const std::vector<int>& mu) {
  if (mu.size() > lambda.size()) {
    throw std::invalid_argument("mu has more parts than lambda");
  }
  const int rows = static_cast<int>(lambda.size());
  std::set<Cell> cells;
  for (int i = 0; i < rows; ++i) {
    int start = i < static_cast<int>(mu.size()) ? mu[i] : 0;
    if (start > lambda[i] || start < 0) {
      throw std::invalid_argument("mu is not contained in lambda");
    }
    if (i > 0 && (lambda[i] > lambda[i - 1] ||
                  (i < static_cast<int>(mu.size()) && mu[i] > mu[i - 1]))) {
      throw std::invalid_argument("partitions must be weakly decreasing");
    }
    for (int x = start; x < lambda[i]; ++x) cells.emplace(x, rows - 1 - i);
  }
  return SkewShape(std::move(cells));
}

// Parses "5,4,4,3/3,3,2,0".
inline std::pair<std::vector<int>, std::vector<int>> ParsePartitionPair(
    std::string_view text) {
  auto parse_list = [](std::string_view s) {
    std::vector<int> parts;
    std::istringstream in{std::string(s)};
    std::string item;
    while (std::getline(in, item, ',')) {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) {
        throw std::invalid_argument("bad partition part '" + item + "'");
      }
      parts.push_back(v);
    }
    return parts;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw std::invalid_argument("skew shape must be written lambda/mu");
  }
  try {
    return {parse_list(text.substr(0, slash)),
            parse_list(text.substr(slash + 1))};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad skew shape '" + std::string(text) + "'");
  }
}

// Bounding paths of lambda/mu in a (lambda_1) x (rows) box: the lower path
// hugs the bottom of each column, the upper path its top.
inline std::pair<LatticePath, LatticePath> PathsFromPartitions(
    const std::vector<int>& lambda, const std::vector<int>& mu) {
  ShapeFromPartitions(lambda, mu);  // validates
  const int rows = static_cast<int>(lambda.size());
  const int width = lambda.empty() ? 0 : lambda.front();
  auto column_height = [&](const std::vector<int>& part, int x) {
    int h = 0;
    for (int v : part) h += v > x ? 1 : 0;
    return h;
  };
  auto build = [&](auto height_at) {
    std::string word;
    int y = 0;
    for (int x = 0; x < width; ++x) {
      for (int target = height_at(x); y < target; ++y) word += 'N';
      word += 'E';
    }
    for (; y < rows; ++y) word += 'N';
    return LatticePath(word);
  };
  LatticePath lower = build([&](int x) { return rows - column_height(lambda, x); });
  LatticePath upper = build([&](int x) { return rows - column_height(mu, x); });
  return {lower, upper};
}

struct PathPair {
  LatticePath lower;
  LatticePath upper;
};

// All (L, U) with L below U, connected, and a border-strip shape.
inline std::vector<PathPair> EnumerateSnakePaths(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1) return {};
  if (n > kMaxGroundSetSize) throw std::invalid_argument("n too large");
  std::vector<LatticePath> paths;
  for (Subset s = 0; s <= FullSet(n); ++s) {
    if (Cardinality(s) == k) paths.push_back(LatticePath::FromNorthSet(n, s));
  }
  std::vector<PathPair> out;
  for (const auto& lower : paths) {
    for (const auto& upper : paths) {
      if (!LiesBelow(lower, upper) || !IsConnectedLpm(lower, upper)) continue;
      if (!IsBorderStrip(ShapeBetween(lower, upper))) continue;
      out.push_back({lower, upper});
    }
  }
  return out;
}

inline std::vector<Matroid> EnumerateSnakes(int n, int k) {
  std::vector<Matroid> out;
  for (const auto& pair : EnumerateSnakePaths(n, k)) {
    out.push_back(LatticePathMatroid(pair.lower, pair.upper));
  }
  return out;
}

}  // namespace matroid_ehrhart

#endif  // MATROID_EHRHART_LATTICE_PATH_HPP_
