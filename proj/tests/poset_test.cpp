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

#include "matroid_ehrhart/poset.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "matroid_ehrhart/ehrhart.hpp"
#include "matroid_ehrhart/lattice_path.hpp"
#include "oracles.hpp"

namespace matroid_ehrhart {
namespace {

Poset Chain(int p) {
  std::vector<Poset::Relation> rel;
  for (int i = 0; i + 1 < p; ++i) rel.emplace_back(i, i + 1);
  return Poset(p, rel);
}

Poset SnakeFence() {
  return CellPoset(
      ShapeBetween(LatticePath("EEENENNEN"), LatticePath("NEENENNEE")));
}

TEST(PosetTest, KeepsOnlyCoverRelations) {
  Poset p(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(p.covers(), (std::vector<Poset::Relation>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(p.Less(0, 2));
}

TEST(PosetTest, RejectsCyclesAndBadElements) {
  EXPECT_THROW(Poset(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Poset(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Poset(2, {{0, 2}}), std::invalid_argument);
}

TEST(PosetTest, ParseLiteral) {
  Poset p = ParsePoset("3; 1<2, 1<3");
  EXPECT_EQ(p.size(), 3);
  EXPECT_EQ(p.covers(), (std::vector<Poset::Relation>{{0, 1}, {0, 2}}));
  EXPECT_EQ(FormatPoset(p), "3; 1<2, 1<3");
  EXPECT_EQ(ParsePoset("2;").size(), 2);
  EXPECT_EQ(ParsePoset(FormatPoset(SnakeFence())), SnakeFence());
  EXPECT_THROW(ParsePoset("x; 1<2"), std::invalid_argument);
  EXPECT_THROW(ParsePoset("2; 1>2"), std::invalid_argument);
}

TEST(PosetTest, FenceDetection) {
  EXPECT_TRUE(Chain(1).IsFence());
  EXPECT_TRUE(Chain(4).IsFence());
  EXPECT_TRUE(SnakeFence().IsFence());
  EXPECT_EQ(Poset(3, {{0, 1}, {0, 2}, {1, 2}}).covers().size(), 2u);
  EXPECT_FALSE(Poset(4, {{0, 1}, {0, 2}, {0, 3}}).IsFence());  // claw
  EXPECT_FALSE(Poset(2, {}).IsFence());                         // antichain
  // Diamond: a 4-cycle in the Hasse diagram.
  EXPECT_FALSE(Poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}).IsFence());
}

TEST(CountOrderPreservingMapsTest, Examples) {
  for (int t = 1; t <= 6; ++t) {
    EXPECT_EQ(CountOrderPreservingMaps(Chain(1), t), t);
    EXPECT_EQ(CountOrderPreservingMaps(Chain(2), t), t * (t + 1) / 2);
  }
  EXPECT_THROW(CountOrderPreservingMaps(Chain(2), 0), std::invalid_argument);
}

// Omega(P(S), 2) = ehr(S, 1) = number of bases, with the base count taken
// by brute force over the 126 words of length 9.
TEST(CountOrderPreservingMapsTest, SnakeFenceAtTwo) {
  LatticePath lower("EEENENNEN");
  LatticePath upper("NEENENNEE");
  int bases = 0;
  for (Subset s = 0; s < (Subset{1} << 9); ++s) {
    if (Cardinality(s) != 4) continue;
    LatticePath p = LatticePath::FromNorthSet(9, s);
    bases += LiesBelow(lower, p) && LiesBelow(p, upper);
  }
  EXPECT_EQ(CountOrderPreservingMaps(SnakeFence(), 2), bases);
}

TEST(CountOrderPreservingMapsTest, MatchesBruteForceOnRandomPosets) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    int p = 1 + static_cast<int>(rng() % 6);
    std::vector<Poset::Relation> rel;
    for (int a = 0; a < p; ++a) {
      for (int b = a + 1; b < p; ++b) {
        if (rng() % 3 == 0) rel.emplace_back(a, b);
      }
    }
    Poset poset(p, rel);
    for (int t = 1; t <= 4; ++t) {
      ASSERT_EQ(CountOrderPreservingMaps(poset, t),
                oracle::BruteForceOrderMaps(poset, t))
          << FormatPoset(poset) << " t=" << t;
    }
  }
}

TEST(CountOrderPreservingMapsTest, FenceSweepMatchesBruteForce) {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      for (const auto& [lower, upper] : EnumerateSnakePaths(n, k)) {
        Poset fence = CellPoset(ShapeBetween(lower, upper));
        for (int t = 1; t <= 4; ++t) {
          ASSERT_EQ(CountOrderPreservingMaps(fence, t),
                    oracle::BruteForceOrderMaps(fence, t));
        }
      }
    }
  }
}

TEST(OrderPolynomialTest, Examples) {
  EXPECT_EQ(OrderPolynomial(Poset(2, {})),
            RationalPolynomial({0, 0, 1}));  // t^2
  EXPECT_EQ(OrderPolynomial(Chain(2)),
            RationalPolynomial({0, Rational(1, 2), Rational(1, 2)}));
  // [t^1] for this fence is 1 / (8 * C(7, 3)) = 1/280.
  EXPECT_EQ(OrderPolynomial(SnakeFence()).Coefficient(1), Rational(1, 280));
}

TEST(OrderPolynomialTest, Properties) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    int p = 1 + static_cast<int>(rng() % 7);
    std::vector<Poset::Relation> rel;
    for (int a = 0; a < p; ++a) {
      for (int b = a + 1; b < p; ++b) {
        if (rng() % 4 == 0) rel.emplace_back(a, b);
      }
    }
    Poset poset(p, rel);
    RationalPolynomial omega = OrderPolynomial(poset);
    EXPECT_EQ(omega.Degree(), p);
    EXPECT_GT(omega.LeadingCoefficient(), 0);
    EXPECT_EQ(omega.Evaluate(1), 1);
  }
  for (int p = 1; p <= 6; ++p) {
    std::vector<Rational> monomial(p + 1, 0);
    monomial[p] = 1;
    EXPECT_EQ(OrderPolynomial(Poset(p, {})), RationalPolynomial(monomial));
  }
}

// Omega(P(S), t) = ehr(S, t - 1) coefficientwise for snakes.
TEST(OrderPolynomialTest, EqualsShiftedEhrhartOnSnakes) {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      for (const auto& [lower, upper] : EnumerateSnakePaths(n, k)) {
        Poset fence = CellPoset(ShapeBetween(lower, upper));
        ASSERT_EQ(OrderPolynomial(fence),
                  ShiftByMinusOne(EhrhartPolynomial(
                      LatticePathMatroid(lower, upper))))
            << lower.word() << " " << upper.word();
      }
    }
  }
}

}  // namespace
}  // namespace matroid_ehrhart
