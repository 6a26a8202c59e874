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

// Matroids on [n] given by their family of bases.
//
// Elements are labeled 1..n in the public interface; element i is bit i-1 of
// a Subset. All rank queries are answered from a table over the 2^n subsets
// that is filled once at construction, so a Matroid is immutable and safe to
// share between threads.

#ifndef MATROID_EHRHART_MATROID_HPP_
#define MATROID_EHRHART_MATROID_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace matroid_ehrhart {

using Subset = std::uint32_t;

inline constexpr int kMaxGroundSetSize = 16;

inline int Cardinality(Subset s) { return std::popcount(s); }
inline Subset FullSet(int n) {
  return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1;
}
inline Subset ElementBit(int element) { return Subset{1} << (element - 1); }
inline bool Contains(Subset s, int element) {
  return (s & ElementBit(element)) != 0;
}

inline Subset MakeSubset(std::initializer_list<int> elements) {
  Subset s = 0;
  for (int e : elements) s |= ElementBit(e);
  return s;
}

// 1-based element labels of `s`, ascending.
inline std::vector<int> Elements(Subset s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

// Closes the gap left by removing `element`: bits above it shift down by one.
inline Subset RemoveElement(Subset s, int element) {
  Subset low = s & (ElementBit(element) - 1);
  Subset high = (s >> element) << (element - 1);
  return low | high;
}

// Nonempty, equicardinal, and the basis-exchange axiom holds. Members are
// assumed to be subsets of [n]; duplicates are tolerated.
inline bool ValidateBases(int n, std::span<const Subset> candidate) {
  if (candidate.empty() || n < 0 || n > kMaxGroundSetSize) return false;
  const Subset ground = FullSet(n);
  const int k = Cardinality(candidate.front());
  std::vector<bool> member(std::size_t{1} << n, false);
  for (Subset b : candidate) {
    if ((b & ~ground) != 0 || Cardinality(b) != k) return false;
    member[b] = true;
  }
  for (Subset b1 : candidate) {
    for (Subset b2 : candidate) {
      for (Subset rest = b1 & ~b2; rest != 0; rest &= rest - 1) {
        Subset e = rest & -rest;
        bool found = false;
        for (Subset opts = b2 & ~b1; opts != 0; opts &= opts - 1) {
          Subset f = opts & -opts;
          if (member[(b1 & ~e) | f]) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

class Matroid {
 public:
  // Throws std::invalid_argument unless `bases` is a valid base family on
  // [n]. With `validate` false the exchange axiom is not checked (the cheap
  // shape checks still run).
  Matroid(int n, std::vector<Subset> bases, bool validate = true)
      : n_(n), bases_(std::move(bases)) {
    if (n_ < 0 || n_ > kMaxGroundSetSize) {
      throw std::invalid_argument("ground set size must be in [0, " +
                                  std::to_string(kMaxGroundSetSize) + "]");
    }
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    if (bases_.empty()) throw std::invalid_argument("empty base family");
    k_ = Cardinality(bases_.front());
    for (Subset b : bases_) {
      if ((b & ~FullSet(n_)) != 0) {
        throw std::invalid_argument("basis is not a subset of [n]");
      }
      if (Cardinality(b) != k_) {
        throw std::invalid_argument("bases have different cardinalities");
      }
    }
    if (validate && !ValidateBases(n_, bases_)) {
      throw std::invalid_argument("basis-exchange axiom fails");
    }
    BuildRankTable();
  }

  int size() const { return n_; }
  int rank() const { return k_; }
  const std::vector<Subset>& bases() const { return bases_; }
  Subset ground_set() const { return FullSet(n_); }

  bool IsBasis(Subset s) const {
    return std::binary_search(bases_.begin(), bases_.end(), s);
  }

  // max over bases B of |A ∩ B|.
  int Rank(Subset a) const { return rank_[a & ground_set()]; }

  bool IsIndependent(Subset a) const { return Rank(a) == Cardinality(a); }

  // A set is closed when adding any outside element raises its rank.
  bool IsFlat(Subset a) const {
    const int r = Rank(a);
    for (Subset rest = ground_set() & ~a; rest != 0; rest &= rest - 1) {
      if (Rank(a | (rest & -rest)) == r) return false;
    }
    return true;
  }

  Subset Loops() const {
    Subset any = 0;
    for (Subset b : bases_) any |= b;
    return ground_set() & ~any;
  }

  Subset Coloops() const {
    Subset all = ground_set();
    for (Subset b : bases_) all &= b;
    return all;
  }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }

 private:
  void BuildRankTable() {
    const std::size_t count = std::size_t{1} << n_;
    std::vector<bool> independent(count, false);
    for (Subset b : bases_) independent[b] = true;
    // Independent sets are the down-closure of the bases.
    for (Subset s = static_cast<Subset>(count); s-- > 0;) {
      if (!independent[s]) continue;
      for (Subset bits = s; bits != 0; bits &= bits - 1) {
        independent[s & ~(bits & -bits)] = true;
      }
    }
    rank_.assign(count, 0);
    for (Subset s = 0; s < count; ++s) {
      if (independent[s]) {
        rank_[s] = static_cast<std::uint8_t>(Cardinality(s));
        continue;
      }
      std::uint8_t best = 0;
      for (Subset bits = s; bits != 0; bits &= bits - 1) {
        best = std::max(best, rank_[s & ~(bits & -bits)]);
      }
      rank_[s] = best;
    }
  }

  int n_ = 0;
  int k_ = 0;
  std::vector<Subset> bases_;
  std::vector<std::uint8_t> rank_;
};

inline Matroid Uniform(int k, int n) {
  if (k < 0 || n < 0 || k > n) {
    throw std::invalid_argument("uniform matroid needs 0 <= k <= n");
  }
  if (n > kMaxGroundSetSize) {
    throw std::invalid_argument("ground set too large");
  }
  std::vector<Subset> bases;
  for (Subset s = 0; s <= FullSet(n); ++s) {
    if (Cardinality(s) == k) bases.push_back(s);
  }
  return Matroid(n, std::move(bases), /*validate=*/false);
}

// M \ i. Throws std::invalid_argument if i is a coloop.
inline Matroid Delete(const Matroid& m, int element) {
  if (element < 1 || element > m.size()) {
    throw std::invalid_argument("element out of range");
  }
  if (Contains(m.Coloops(), element)) {
    throw std::invalid_argument("cannot delete a coloop");
  }
  std::vector<Subset> bases;
  for (Subset b : m.bases()) {
    if (!Contains(b, element)) bases.push_back(RemoveElement(b, element));
  }
  return Matroid(m.size() - 1, std::move(bases), /*validate=*/false);
}

// M / i. Throws std::invalid_argument if i is a loop.
inline Matroid Contract(const Matroid& m, int element) {
  if (element < 1 || element > m.size()) {
    throw std::invalid_argument("element out of range");
  }
  if (Contains(m.Loops(), element)) {
    throw std::invalid_argument("cannot contract a loop");
  }
  std::vector<Subset> bases;
  for (Subset b : m.bases()) {
    if (Contains(b, element)) bases.push_back(RemoveElement(b, element));
  }
  return Matroid(m.size() - 1, std::move(bases), /*validate=*/false);
}

// Elements of `second` are shifted up by first.size().
inline Matroid DirectSum(const Matroid& first, const Matroid& second) {
  const int n = first.size() + second.size();
  if (n > kMaxGroundSetSize) throw std::invalid_argument("ground set too large");
  std::vector<Subset> bases;
  bases.reserve(first.bases().size() * second.bases().size());
  for (Subset b1 : first.bases()) {
    for (Subset b2 : second.bases()) {
      bases.push_back(b1 | (b2 << first.size()));
    }
  }
  return Matroid(n, std::move(bases), /*validate=*/false);
}

inline Matroid Dual(const Matroid& m) {
  std::vector<Subset> bases;
  for (Subset b : m.bases()) bases.push_back(m.ground_set() & ~b);
  return Matroid(m.size(), std::move(bases), /*validate=*/false);
}

// Minimal dependent sets.
inline std::vector<Subset> Circuits(const Matroid& m) {
  std::vector<Subset> circuits;
  for (Subset s = 1; s <= m.ground_set() && s != 0; ++s) {
    if (m.IsIndependent(s)) continue;
    bool minimal = true;
    for (Subset bits = s; bits != 0; bits &= bits - 1) {
      if (!m.IsIndependent(s & ~(bits & -bits))) {
        minimal = false;
        break;
      }
    }
    if (minimal) circuits.push_back(s);
  }
  return circuits;
}

// Finest partition of [n] into connected components: two elements share a
// component when some circuit contains both. Parts are ordered by their
// smallest element.
inline std::vector<Subset> ConnectedComponents(const Matroid& m) {
  const int n = m.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Subset c : Circuits(m)) {
    int first = std::countr_zero(c);
    for (Subset bits = c & (c - 1); bits != 0; bits &= bits - 1) {
      int a = find(first);
      int b = find(std::countr_zero(bits));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<Subset> parts;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    int root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(parts.size());
      parts.push_back(0);
    }
    parts[slot[root]] |= Subset{1} << i;
  }
  return parts;
}

inline int NumComponents(const Matroid& m) {
  return static_cast<int>(ConnectedComponents(m).size());
}

inline bool IsConnected(const Matroid& m) { return NumComponents(m) <= 1; }

}  // namespace matroid_ehrhart

#endif  // MATROID_EHRHART_MATROID_HPP_
