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

// Named collections of small matroids used as verification corpora.
//
// Identifiers are deterministic, filesystem-safe, and zero-padded where they
// carry counters, so sorting by identifier reproduces generation order.

#ifndef MATROID_EHRHART_CATALOG_HPP_
#define MATROID_EHRHART_CATALOG_HPP_

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matroid_ehrhart/lattice_path.hpp"
#include "matroid_ehrhart/matroid.hpp"

namespace matroid_ehrhart {

enum class Provenance {
  kExhaustive,
  kLatticePath,
  kGraphic,
  kUniform,
  kDirectSum,
  kFile
};

inline const char* ProvenanceName(Provenance p) {
  switch (p) {
    case Provenance::kExhaustive:
      return "exhaustive";
    case Provenance::kLatticePath:
      return "lattice-path";
    case Provenance::kGraphic:
      return "graphic";
    case Provenance::kUniform:
      return "uniform";
    case Provenance::kDirectSum:
      return "direct-sum";
    case Provenance::kFile:
      return "file";
  }
  return "?";
}

struct CatalogEntry {
  std::string id;
  Matroid matroid;
  Provenance provenance;
};

using Catalog = std::vector<CatalogEntry>;

inline constexpr int kMaxExhaustiveSize = 6;
inline constexpr int kMaxGraphicEdges = 12;

namespace internal {

inline std::string Padded(long long value, int width) {
  std::string digits = std::to_string(value);
  if (static_cast<int>(digits.size()) < width) {
    digits.insert(0, width - digits.size(), '0');
  }
  return digits;
}

}  // namespace internal

// Every labeled matroid on [n] of rank k, in order of the bitmask that picks
// its bases out of the k-subsets of [n] (listed in increasing order).
inline Catalog ExhaustiveCatalog(int n, int k) {
  if (n < 0 || n > kMaxExhaustiveSize) {
    throw std::invalid_argument("exhaustive catalog supports n <= " +
                                std::to_string(kMaxExhaustiveSize));
  }
  if (k < 0 || k > n) throw std::invalid_argument("rank out of range");
  std::vector<Subset> ksets;
  for (Subset s = 0; s <= FullSet(n); ++s) {
    if (Cardinality(s) == k) ksets.push_back(s);
  }
  const std::uint64_t families = std::uint64_t{1} << ksets.size();
  Catalog out;
  std::vector<Subset> bases;
  long long index = 0;
  for (std::uint64_t pick = 1; pick < families; ++pick) {
    bases.clear();
    for (std::uint64_t bits = pick; bits != 0; bits &= bits - 1) {
      bases.push_back(ksets[std::countr_zero(bits)]);
    }
    if (!ValidateBases(n, bases)) continue;
    out.push_back({"exhaustive-n" + std::to_string(n) + "-k" +
                       std::to_string(k) + "-" + internal::Padded(index++, 7),
                   Matroid(n, bases, /*validate=*/false),
                   Provenance::kExhaustive});
  }
  return out;
}

inline Catalog ExhaustiveCatalog(int n) {
  Catalog out;
  for (int k = 0; k <= n; ++k) {
    Catalog part = ExhaustiveCatalog(n, k);
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

// Spanning-tree matroid of a connected multigraph on vertices
// 0..num_vertices-1. Self-loops become matroid loops. Throws
// std::invalid_argument for disconnected graphs or more than 12 edges.
inline Matroid GraphicMatroid(int num_vertices,
                              const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(edges.size());
  if (num_vertices < 1) throw std::invalid_argument("graph has no vertices");
  if (m > kMaxGraphicEdges) throw std::invalid_argument("too many edges");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
  std::vector<int> parent(num_vertices);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Forest test: union-find over the chosen edges.
  auto spans_acyclic = [&](Subset chosen) {
    std::iota(parent.begin(), parent.end(), 0);
    for (Subset bits = chosen; bits != 0; bits &= bits - 1) {
      auto [u, v] = edges[std::countr_zero(bits)];
      int a = find(u);
      int b = find(v);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  };
  std::iota(parent.begin(), parent.end(), 0);
  int components = num_vertices;
  for (auto [u, v] : edges) {
    int a = find(u);
    int b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  if (components != 1) throw std::invalid_argument("graph is disconnected");
  std::vector<Subset> bases;
  for (Subset s = 0; s <= FullSet(m); ++s) {
    if (Cardinality(s) == num_vertices - 1 && spans_acyclic(s)) {
      bases.push_back(s);
    }
  }
  return Matroid(m, std::move(bases), /*validate=*/false);
}

struct NamedGraph {
  std::string name;
  int vertices;
  std::vector<std::pair<int, int>> edges;
};

// A fixed list of small connected graphs.
inline std::vector<NamedGraph> StandardGraphs() {
  std::vector<NamedGraph> graphs;
  for (int len = 2; len <= 8; ++len) {
    NamedGraph cycle{"cycle" + std::to_string(len), len, {}};
    for (int i = 0; i < len; ++i) cycle.edges.emplace_back(i, (i + 1) % len);
    graphs.push_back(std::move(cycle));
  }
  graphs.push_back({"path3", 4, {{0, 1}, {1, 2}, {2, 3}}});
  graphs.push_back({"k4-minus-edge", 4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}});
  graphs.push_back({"k4", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}});
  graphs.push_back({"k23", 5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}});
  graphs.push_back(
      {"triangle-with-pendant", 4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}});
  graphs.push_back(
      {"fat-triangle", 3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}}});
  graphs.push_back(
      {"bowtie", 5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}});
  graphs.push_back({"wheel4", 5,
                    {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2},
                     {4, 3}}});
  graphs.push_back({"prism", 6,
                    {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3},
                     {1, 4}, {2, 5}}});
  graphs.push_back({"k33", 6,
                    {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3},
                     {2, 4}, {2, 5}}});
  return graphs;
}

inline Catalog UniformFamily(int max_n) {
  Catalog out;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      out.push_back({"uniform-n" + internal::Padded(n, 2) + "-k" +
                         internal::Padded(k, 2),
                     Uniform(k, n), Provenance::kUniform});
    }
  }
  return out;
}

inline Catalog SnakeFamily(int n, int k) {
  Catalog out;
  for (const auto& [lower, upper] : EnumerateSnakePaths(n, k)) {
    out.push_back({"snake-" + lower.word() + "-" + upper.word(),
                   LatticePathMatroid(lower, upper), Provenance::kLatticePath});
  }
  return out;
}

inline Catalog SnakeFamilyUpTo(int max_n) {
  Catalog out;
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 1; k < n; ++k) {
      Catalog part = SnakeFamily(n, k);
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
  }
  return out;
}

// All connected lattice-path matroids with 2 <= n <= max_n.
inline Catalog LatticePathFamily(int max_n) {
  Catalog out;
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 1; k < n; ++k) {
      std::vector<LatticePath> paths;
      for (Subset s = 0; s <= FullSet(n); ++s) {
        if (Cardinality(s) == k) paths.push_back(LatticePath::FromNorthSet(n, s));
      }
      for (const auto& lower : paths) {
        for (const auto& upper : paths) {
          if (!LiesBelow(lower, upper) || !IsConnectedLpm(lower, upper)) continue;
          out.push_back({"lpm-" + lower.word() + "-" + upper.word(),
                         LatticePathMatroid(lower, upper),
                         Provenance::kLatticePath});
        }
      }
    }
  }
  return out;
}

inline Catalog GraphicFamily(int max_n) {
  Catalog out;
  for (const auto& g : StandardGraphs()) {
    if (static_cast<int>(g.edges.size()) > max_n) continue;
    out.push_back({"graphic-" + g.name, GraphicMatroid(g.vertices, g.edges),
                   Provenance::kGraphic});
  }
  return out;
}

// Direct sums a ⊕ b over ordered pairs of entries with total size <= max_n.
inline Catalog PairwiseSums(const Catalog& summands, int max_n) {
  Catalog out;
  for (const auto& a : summands) {
    for (const auto& b : summands) {
      if (a.matroid.size() + b.matroid.size() > max_n) continue;
      out.push_back({"sum--" + a.id + "--" + b.id,
                     DirectSum(a.matroid, b.matroid), Provenance::kDirectSum});
    }
  }
  return out;
}

// Connected uniform matroids (1 <= k <= n-1) and snakes up to max_n - 2
// elements, summed pairwise.
inline Catalog SumFamily(int max_n) {
  Catalog atoms;
  for (int n = 2; n + 2 <= max_n; ++n) {
    for (int k = 1; k < n; ++k) {
      atoms.push_back({"uniform-n" + internal::Padded(n, 2) + "-k" +
                           internal::Padded(k, 2),
                       Uniform(k, n), Provenance::kUniform});
    }
  }
  Catalog snakes = SnakeFamilyUpTo(max_n - 2);
  std::move(snakes.begin(), snakes.end(), std::back_inserter(atoms));
  return PairwiseSums(atoms, max_n);
}

inline void SortById(Catalog& catalog) {
  std::sort(catalog.begin(), catalog.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) {
              return a.id < b.id;
            });
}

}  // namespace matroid_ehrhart

#endif  // MATROID_EHRHART_CATALOG_HPP_
