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

#include "matroid_ehrhart/polynomial.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "matroid_ehrhart/ehrhart.hpp"
#include "matroid_ehrhart/verification.hpp"
#include "oracles.hpp"

namespace matroid_ehrhart {
namespace {

RationalPolynomial Poly(std::vector<Rational> c) {
  return RationalPolynomial(std::move(c));
}

TEST(RationalPolynomialTest, TrimsTrailingZeros) {
  auto p = Poly({1, 2, 0, 0});
  EXPECT_EQ(p.Degree(), 1);
  EXPECT_TRUE(Poly({0, 0}).IsZero());
  EXPECT_EQ(Poly({0}).Degree(), -1);
}

TEST(RationalPolynomialTest, RationalsAreReduced) {
  auto p = Poly({Rational(2, 4), Rational(-6, 3)});
  EXPECT_EQ(ToFractionString(p.Coefficient(0)), "1/2");
  EXPECT_EQ(ToFractionString(p.Coefficient(1)), "-2/1");
}

TEST(RationalPolynomialTest, ToStringDescending) {
  EXPECT_EQ(Poly({0, Rational(1, 7), 0, Rational(-1, 10)}).ToString(),
            "-1/10 t^3 + 1/7 t");
  EXPECT_EQ(Poly({1, 1}).ToString(), "t + 1");
  EXPECT_EQ(RationalPolynomial().ToString(), "0");
  EXPECT_EQ(Poly({-3}).ToString(), "-3");
}

TEST(RationalPolynomialTest, ShiftExamples) {
  // t + 1 -> t
  EXPECT_EQ(ShiftByMinusOne(Poly({1, 1})), RationalPolynomial::Identity());
  // (2t^3 + 6t^2 + 7t + 3)/3 -> (2t^3 + t)/3, expanded by hand.
  auto ehr_u24 = Poly({1, Rational(7, 3), 2, Rational(2, 3)});
  EXPECT_EQ(ShiftByMinusOne(ehr_u24),
            Poly({0, Rational(1, 3), 0, Rational(2, 3)}));
}

TEST(RationalPolynomialTest, DerivativeAtExamples) {
  EXPECT_EQ(DerivativeAt(Poly({1, 1}), -1), 1);
  EXPECT_EQ(DerivativeAt(Poly({1}), 5), 0);
  EXPECT_EQ(DerivativeAt(Poly({0, 0, 3}), 2), 12);
}

TEST(RationalPolynomialTest, InterpolateRecoversPolynomial) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = oracle::RandomPolynomial(rng, 8);
    std::vector<Rational> nodes;
    std::vector<Rational> values;
    for (int i = 0; i <= std::max(p.Degree(), 0); ++i) {
      nodes.emplace_back(i * 2 - 3);
      values.push_back(p.Evaluate(nodes.back()));
    }
    EXPECT_EQ(Interpolate(nodes, values), p);
  }
}

TEST(RationalPolynomialTest, InterpolateRejectsRepeatedNodes) {
  std::vector<Rational> nodes{1, 1};
  std::vector<Rational> values{1, 2};
  EXPECT_THROW(Interpolate(nodes, values), std::invalid_argument);
}

// [t^1] p(t - 1) = p'(-1) for every polynomial.
TEST(RationalPolynomialTest, ShiftedLinearCoefficientIsDerivativeAtMinusOne) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = oracle::RandomPolynomial(rng, 10);
    EXPECT_EQ(ShiftByMinusOne(p).Coefficient(1), DerivativeAt(p, -1))
        << p.ToString();
  }
}

TEST(RationalPolynomialTest, TranslateMatchesEvaluation) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = oracle::RandomPolynomial(rng, 7);
    auto q = ShiftByMinusOne(p);
    for (int x = -4; x <= 4; ++x) {
      EXPECT_EQ(q.Evaluate(x), p.Evaluate(x - 1));
    }
  }
}

TEST(RationalPolynomialTest, ProductEvaluatesPointwise) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = oracle::RandomPolynomial(rng, 5);
    auto b = oracle::RandomPolynomial(rng, 5);
    for (int x = -3; x <= 3; ++x) {
      EXPECT_EQ((a * b).Evaluate(x), a.Evaluate(x) * b.Evaluate(x));
      EXPECT_EQ((a - b).Evaluate(x), a.Evaluate(x) - b.Evaluate(x));
    }
  }
}

TEST(RationalPolynomialTest, JsonRoundTrip) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = oracle::RandomPolynomial(rng, 6);
    EXPECT_EQ(PolynomialFromJson(PolynomialToJson(p)), p);
  }
  EXPECT_EQ(PolynomialToJson(Poly({1, Rational(1, 3)})),
            R"({"coeffs":["1/1","1/3"]})");
  EXPECT_THROW(PolynomialFromJson(R"({"coeffs":[1]})"), std::invalid_argument);
  EXPECT_THROW(PolynomialFromJson("[]"), std::invalid_argument);
  EXPECT_THROW(PolynomialFromJson(R"({"coeffs":["1/0"]})"),
               std::invalid_argument);
}

TEST(RationalTest, ParseRational) {
  EXPECT_EQ(ParseRational("397/1680"), Rational(397, 1680));
  EXPECT_EQ(ParseRational("-4/6"), Rational(-2, 3));
  EXPECT_EQ(ParseRational("12"), Rational(12));
  EXPECT_THROW(ParseRational("1/x"), std::invalid_argument);
  EXPECT_THROW(ParseRational(""), std::invalid_argument);
}

TEST(BinomialTest, SmallValues) {
  EXPECT_EQ(Binomial(6, 2), 15);
  EXPECT_EQ(Binomial(13, 7), 1716);
  EXPECT_EQ(Binomial(3, 5), 0);
  EXPECT_EQ(Binomial(0, 0), 1);
}

}  // namespace
}  // namespace matroid_ehrhart
