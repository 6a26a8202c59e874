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

// Lattice points in dilated matroid base polytopes and Ehrhart polynomials.
//
// The t-th dilate of the base polytope is
//   { x in R^n : x >= 0, x(E) = t*k, x(A) <= t*rk(A) for all A ⊆ E }.
// Points are enumerated coordinate by coordinate. Each subset constraint is
// checked at the coordinate of its largest element, where the admissible
// values of that coordinate form an interval. Upper bounds come from
// dependent flats A; lower bounds x(A) >= t*(k - rk(E \ A)) from sets whose
// complement is a dependent flat. For x in the box [0, t]^n with
// x(E) = t*k these imply every other rank inequality.

#ifndef MATROID_EHRHART_EHRHART_HPP_
#define MATROID_EHRHART_EHRHART_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "matroid_ehrhart/matroid.hpp"
#include "matroid_ehrhart/polynomial.hpp"

namespace matroid_ehrhart {

// Raised when the interpolated polynomial misses the extra check point.
class InterpolationGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace internal {

struct PrefixConstraint {
  Subset earlier;  // A minus its largest element
  int rank_bound;  // rk(A) for an upper bound, k - rk(E \ A) for a lower one
  bool upper;
};

class LatticePointCounter {
 public:
  LatticePointCounter(const Matroid& m, int t)
      : n_(m.size()), t_(t), target_(static_cast<long long>(t) * m.rank()),
        by_level_(m.size()), x_(m.size(), 0) {
    const Subset ground = m.ground_set();
    for (Subset a = 1; a <= ground && a != 0; ++a) {
      const int level = 31 - std::countl_zero(a);
      const Subset earlier = a & ~(Subset{1} << level);
      if (!m.IsIndependent(a) && m.IsFlat(a) && a != ground) {
        by_level_[level].push_back({earlier, m.Rank(a), true});
      }
      const Subset rest = ground & ~a;
      if (rest != 0 && !m.IsIndependent(rest) && m.IsFlat(rest)) {
        by_level_[level].push_back({earlier, m.rank() - m.Rank(rest), false});
      }
    }
  }

  std::uint64_t Count() {
    if (n_ == 0) return 1;
    return Descend(0, 0);
  }

 private:
  long long PrefixSum(Subset s) const {
    long long sum = 0;
    for (; s != 0; s &= s - 1) sum += x_[std::countr_zero(s)];
    return sum;
  }

  std::uint64_t Descend(int level, long long assigned) {
    const long long remaining_after = static_cast<long long>(n_ - 1 - level);
    long long lo = std::max<long long>(0, target_ - assigned - t_ * remaining_after);
    long long hi = std::min<long long>(t_, target_ - assigned);
    for (const PrefixConstraint& c : by_level_[level]) {
      const long long base = PrefixSum(c.earlier);
      const long long bound = static_cast<long long>(t_) * c.rank_bound - base;
      if (c.upper) {
        hi = std::min(hi, bound);
      } else {
        lo = std::max(lo, bound);
      }
      if (lo > hi) return 0;
    }
    if (lo > hi) return 0;
    if (level == n_ - 1) return 1;  // lo == hi == target - assigned
    std::uint64_t total = 0;
    for (long long v = lo; v <= hi; ++v) {
      x_[level] = static_cast<int>(v);
      total += Descend(level + 1, assigned + v);
    }
    x_[level] = 0;
    return total;
  }

  int n_;
  long long t_;
  long long target_;
  std::vector<std::vector<PrefixConstraint>> by_level_;
  std::vector<int> x_;
};

}  // namespace internal

// #(t * P(M) ∩ Z^n); 1 for t = 0.
inline std::uint64_t CountLatticePoints(const Matroid& m, int t) {
  if (t < 0) throw std::invalid_argument("dilation must be nonnegative");
  if (t == 0) return 1;
  return internal::LatticePointCounter(m, t).Count();
}

// Dimension of the base polytope, n - c(M).
inline int BasePolytopeDimension(const Matroid& m) {
  return m.size() - NumComponents(m);
}

// Fits a degree-`degree` polynomial to count(0..degree) and confirms it at
// degree + 1. Throws InterpolationGuardError on a mismatch.
template <typename CountFn>
RationalPolynomial InterpolateWithGuard(CountFn count, int degree) {
  std::vector<Rational> nodes;
  std::vector<Rational> values;
  for (int t = 0; t <= degree; ++t) {
    nodes.emplace_back(t);
    values.emplace_back(BigInt(count(t)));
  }
  RationalPolynomial fit = Interpolate(nodes, values);
  const BigInt guard(count(degree + 1));
  if (fit.Evaluate(Rational(degree + 1)) != Rational(guard)) {
    throw InterpolationGuardError(
        "interpolation of degree " + std::to_string(degree) +
        " disagrees with the direct count at t = " +
        std::to_string(degree + 1));
  }
  return fit;
}

// Interpolates the counts at t = 0..d, d = n - c(M), with the guard at d + 1.
inline RationalPolynomial EhrhartPolynomial(const Matroid& m) {
  return InterpolateWithGuard(
      [&m](int t) { return CountLatticePoints(m, t); },
      BasePolytopeDimension(m));
}

// q(t) = p(t - 1).
inline RationalPolynomial ShiftByMinusOne(const RationalPolynomial& p) {
  return p.Translate(Rational(-1));
}

inline Rational DerivativeAt(const RationalPolynomial& p, long long x) {
  return p.Derivative().Evaluate(Rational(x));
}

// [t^1] ehr(M, t - 1) for a precomputed ehr(M, t). Cross-checked against
// ehr'(-1); throws std::logic_error if the two routes ever disagree.
inline Rational LinearCoeffShifted(const RationalPolynomial& ehr) {
  Rational coeff = ShiftByMinusOne(ehr).Coefficient(1);
  if (coeff != DerivativeAt(ehr, -1)) {
    throw std::logic_error("shifted linear coefficient != derivative at -1");
  }
  return coeff;
}

inline Rational LinearCoeffShifted(const Matroid& m) {
  return LinearCoeffShifted(EhrhartPolynomial(m));
}

}  // namespace matroid_ehrhart

#endif  // MATROID_EHRHART_EHRHART_HPP_
