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

#include "matroid_ehrhart/matroid.hpp"

#include <vector>

#include "gtest/gtest.h"
#include "matroid_ehrhart/catalog.hpp"
#include "oracles.hpp"

namespace matroid_ehrhart {
namespace {

std::vector<Subset> Family(std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<Subset> out;
  for (auto s : sets) out.push_back(MakeSubset(s));
  return out;
}

TEST(ValidateBasesTest, Examples) {
  EXPECT_TRUE(ValidateBases(3, Family({{1, 2}, {1, 3}, {2, 3}})));
  EXPECT_FALSE(ValidateBases(4, Family({{1, 2}, {3, 4}})));
  EXPECT_TRUE(ValidateBases(2, Family({{1}, {2}})));
}

TEST(ValidateBasesTest, RejectsEmptyAndMixedCardinality) {
  EXPECT_FALSE(ValidateBases(3, {}));
  EXPECT_FALSE(ValidateBases(3, Family({{1}, {2, 3}})));
  EXPECT_FALSE(ValidateBases(2, Family({{3}})));
}

TEST(MatroidTest, ConstructorRejectsInvalidFamilies) {
  EXPECT_THROW(Matroid(4, Family({{1, 2}, {3, 4}})), std::invalid_argument);
  EXPECT_THROW(Matroid(3, {}), std::invalid_argument);
  EXPECT_THROW(Matroid(17, {0}), std::invalid_argument);
  EXPECT_NO_THROW(Matroid(4, Family({{1, 2}, {3, 4}}), /*validate=*/false));
}

TEST(MatroidTest, BasesAreSortedAndDeduplicated) {
  Matroid m(3, Family({{2, 3}, {1, 2}, {2, 3}, {1, 3}}));
  EXPECT_EQ(m.bases(), Family({{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(m.rank(), 2);
}

TEST(RankTest, Examples) {
  Matroid u24 = Uniform(2, 4);
  EXPECT_EQ(u24.Rank(MakeSubset({1})), 1);
  EXPECT_EQ(u24.Rank(MakeSubset({1, 2, 3})), 2);
  Matroid with_loop(3, Family({{1, 2}}));
  EXPECT_EQ(with_loop.Rank(MakeSubset({3})), 0);
  EXPECT_EQ(with_loop.Rank(with_loop.ground_set()), 2);
}

TEST(RankTest, MatchesBaseScanOnExhaustiveCatalog) {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& entry : ExhaustiveCatalog(n)) {
      const Matroid& m = entry.matroid;
      for (Subset a = 0; a <= m.ground_set(); ++a) {
        ASSERT_EQ(m.Rank(a), oracle::ScanRank(m.bases(), a)) << entry.id;
      }
    }
  }
}

TEST(RankTest, MonotoneAndSubmodular) {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& entry : ExhaustiveCatalog(n)) {
      const Matroid& m = entry.matroid;
      for (Subset a = 0; a <= m.ground_set(); ++a) {
        for (Subset b = 0; b <= m.ground_set(); ++b) {
          if ((a & b) == a) ASSERT_LE(m.Rank(a), m.Rank(b));
          ASSERT_GE(m.Rank(a) + m.Rank(b), m.Rank(a | b) + m.Rank(a & b));
        }
      }
    }
  }
  // Spot check on larger uniform and graphic matroids.
  for (const Matroid& m : {Uniform(3, 8), GraphicFamily(9).back().matroid}) {
    for (Subset a = 0; a <= m.ground_set(); a += 3) {
      for (Subset b = 0; b <= m.ground_set(); b += 5) {
        ASSERT_GE(m.Rank(a) + m.Rank(b), m.Rank(a | b) + m.Rank(a & b));
      }
    }
  }
}

TEST(LoopsColoopsTest, Examples) {
  EXPECT_EQ(Uniform(2, 4).Loops(), 0u);
  EXPECT_EQ(Uniform(2, 4).Coloops(), 0u);
  Matroid sum = DirectSum(Uniform(2, 4), Uniform(1, 1));
  EXPECT_EQ(sum.Coloops(), MakeSubset({5}));
  EXPECT_EQ(sum.Loops(), 0u);
  Matroid m(3, Family({{1, 2}}));
  EXPECT_EQ(m.Loops(), MakeSubset({3}));
  EXPECT_EQ(m.Coloops(), MakeSubset({1, 2}));
}

TEST(MinorTest, DeleteAndContractUniform) {
  EXPECT_EQ(Delete(Uniform(2, 4), 4), Uniform(2, 3));
  EXPECT_EQ(Contract(Uniform(2, 4), 4), Uniform(1, 3));
  EXPECT_EQ(Contract(Uniform(1, 2), 1), Uniform(0, 1));
}

TEST(MinorTest, RelabelingClosesTheGap) {
  // Bases {1,3}, {2,3}, {3,4} on [4]: element 3 is a coloop.
  Matroid m(4, Family({{1, 3}, {2, 3}, {3, 4}}));
  Matroid deleted = Delete(m, 2);
  EXPECT_EQ(deleted.bases(), Family({{1, 2}, {2, 3}}));
  Matroid contracted = Contract(m, 3);
  EXPECT_EQ(contracted.bases(), Family({{1}, {2}, {3}}));
}

TEST(MinorTest, PreconditionViolations) {
  Matroid m(3, Family({{1, 2}}));
  EXPECT_THROW(Delete(m, 1), std::invalid_argument);    // coloop
  EXPECT_THROW(Contract(m, 3), std::invalid_argument);  // loop
  EXPECT_THROW(Delete(m, 4), std::invalid_argument);
  EXPECT_NO_THROW(Delete(m, 3));
  EXPECT_NO_THROW(Contract(m, 1));
}

TEST(MinorTest, MinorsStayValid) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& entry : ExhaustiveCatalog(n)) {
      const Matroid& m = entry.matroid;
      for (int e = 1; e <= n; ++e) {
        if (!Contains(m.Coloops(), e)) {
          ASSERT_TRUE(ValidateBases(n - 1, Delete(m, e).bases())) << entry.id;
        }
        if (!Contains(m.Loops(), e)) {
          ASSERT_TRUE(ValidateBases(n - 1, Contract(m, e).bases())) << entry.id;
        }
      }
    }
  }
}

TEST(DirectSumTest, Examples) {
  Matroid a = DirectSum(Uniform(1, 1), Uniform(0, 1));
  EXPECT_EQ(a.size(), 2);
  EXPECT_EQ(a.bases(), Family({{1}}));
  Matroid b = DirectSum(Uniform(2, 4), Uniform(1, 1));
  EXPECT_EQ(b.bases().size(), 6u);
  EXPECT_EQ(b.size(), 5);
  EXPECT_EQ(b.rank(), 3);
  EXPECT_EQ(DirectSum(Uniform(1, 2), Uniform(1, 2)).bases().size(), 4u);
}

TEST(ConnectedComponentsTest, Examples) {
  EXPECT_EQ(ConnectedComponents(Uniform(2, 4)),
            std::vector<Subset>{MakeSubset({1, 2, 3, 4})});
  EXPECT_EQ(ConnectedComponents(DirectSum(Uniform(2, 4), Uniform(1, 1))),
            (std::vector<Subset>{MakeSubset({1, 2, 3, 4}), MakeSubset({5})}));
  EXPECT_EQ(ConnectedComponents(DirectSum(Uniform(0, 1), Uniform(1, 1))),
            (std::vector<Subset>{MakeSubset({1}), MakeSubset({2})}));
}

TEST(ConnectedComponentsTest, CountIsAdditiveUnderDirectSum) {
  Catalog small;
  for (int n = 1; n <= 3; ++n) {
    Catalog part = ExhaustiveCatalog(n);
    small.insert(small.end(), part.begin(), part.end());
  }
  for (const auto& a : small) {
    for (const auto& b : small) {
      ASSERT_EQ(NumComponents(DirectSum(a.matroid, b.matroid)),
                NumComponents(a.matroid) + NumComponents(b.matroid))
          << a.id << " + " << b.id;
    }
  }
}

TEST(UniformTest, Examples) {
  EXPECT_EQ(Uniform(3, 8).bases().size(), 56u);
  EXPECT_EQ(Uniform(0, 1).bases(), std::vector<Subset>{0});
  EXPECT_EQ(Uniform(1, 1).bases(), Family({{1}}));
  EXPECT_THROW(Uniform(3, 2), std::invalid_argument);
}

TEST(DualTest, ComplementsAreBases) {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& entry : ExhaustiveCatalog(n)) {
      Matroid d = Dual(entry.matroid);
      ASSERT_TRUE(ValidateBases(n, d.bases())) << entry.id;
      ASSERT_EQ(d.rank(), n - entry.matroid.rank());
      ASSERT_EQ(d.Loops(), entry.matroid.Coloops());
    }
  }
}

}  // namespace
}  // namespace matroid_ehrhart
