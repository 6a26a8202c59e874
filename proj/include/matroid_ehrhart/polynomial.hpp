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

// Exact univariate polynomials over the rationals.

#ifndef MATROID_EHRHART_POLYNOMIAL_HPP_
#define MATROID_EHRHART_POLYNOMIAL_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace matroid_ehrhart {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders a rational as "num/den" (always with a denominator).
inline std::string ToFractionString(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

// Parses "num/den" or a bare integer. Throws std::invalid_argument.
inline Rational ParseRational(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad integer literal");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw std::invalid_argument("bad integer literal: " + std::string(s));
      }
    }
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

inline BigInt Binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

// Coefficients c_0..c_d in increasing degree, trailing zeros trimmed. The
// zero polynomial has no coefficients and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs)
      : coeffs_(std::move(coeffs)) {
    Trim();
  }

  static RationalPolynomial Constant(Rational c) {
    return RationalPolynomial({std::move(c)});
  }
  // The monomial t.
  static RationalPolynomial Identity() { return RationalPolynomial({0, 1}); }

  int Degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool IsZero() const { return coeffs_.empty(); }
  const std::vector<Rational>& Coefficients() const { return coeffs_; }

  Rational Coefficient(int j) const {
    if (j < 0 || j >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[j];
  }

  Rational LeadingCoefficient() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
  }

  Rational Evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  RationalPolynomial Derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
      out[j - 1] = coeffs_[j] * static_cast<long long>(j);
    }
    return RationalPolynomial(std::move(out));
  }

  // q(t) = p(t + a), by binomial expansion of each (t + a)^j.
  RationalPolynomial Translate(const Rational& a) const {
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] == 0) continue;
      Rational a_pow = 1;
      // (t + a)^j = sum_i C(j, i) a^(j - i) t^i, walking i downward.
      for (std::size_t i = j + 1; i-- > 0;) {
        out[i] += coeffs_[j] * Rational(Binomial(j, i)) * a_pow;
        a_pow *= a;
      }
    }
    return RationalPolynomial(std::move(out));
  }

  friend RationalPolynomial operator+(const RationalPolynomial& a,
                                      const RationalPolynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j) out[j] += a.coeffs_[j];
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[j] += b.coeffs_[j];
    return RationalPolynomial(std::move(out));
  }

  friend RationalPolynomial operator-(const RationalPolynomial& a,
                                      const RationalPolynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j) out[j] += a.coeffs_[j];
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[j] -= b.coeffs_[j];
    return RationalPolynomial(std::move(out));
  }

  friend RationalPolynomial operator*(const RationalPolynomial& a,
                                      const RationalPolynomial& b) {
    if (a.IsZero() || b.IsZero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return RationalPolynomial(std::move(out));
  }

  friend bool operator==(const RationalPolynomial& a,
                         const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Descending degree, e.g. "397/1680 t^7 + 49/144 t^6 + 1/7 t".
  std::string ToString(std::string_view var = "t") const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int j = Degree(); j >= 0; --j) {
      const Rational& c = coeffs_[j];
      if (c == 0) continue;
      bool negative = c < 0;
      Rational magnitude = negative ? Rational(-c) : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string mag_text =
          boost::multiprecision::denominator(magnitude) == 1
              ? boost::multiprecision::numerator(magnitude).str()
              : ToFractionString(magnitude);
      if (j == 0) {
        out += mag_text;
        continue;
      }
      if (magnitude != 1) out += mag_text + " ";
      out += var;
      if (j > 1) out += "^" + std::to_string(j);
    }
    return out;
  }

 private:
  void Trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

// The unique polynomial of degree < nodes.size() through (nodes[i],
// values[i]). Newton divided differences, then expansion to monomials.
inline RationalPolynomial Interpolate(std::span<const Rational> nodes,
                                      std::span<const Rational> values) {
  if (nodes.size() != values.size()) {
    throw std::invalid_argument("Interpolate: node/value count mismatch");
  }
  const std::size_t m = nodes.size();
  std::vector<Rational> diff(values.begin(), values.end());
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      Rational gap = nodes[i] - nodes[i - level];
      if (gap == 0) throw std::invalid_argument("Interpolate: repeated node");
      diff[i] = (diff[i] - diff[i - 1]) / gap;
    }
  }
  // Horner on the Newton form: p = d0 + (t - x0)(d1 + (t - x1)(d2 + ...)).
  RationalPolynomial result;
  for (std::size_t i = m; i-- > 0;) {
    RationalPolynomial factor({-nodes[i], Rational(1)});
    result = result * factor + RationalPolynomial::Constant(diff[i]);
  }
  return result;
}

}  // namespace matroid_ehrhart

#endif  // MATROID_EHRHART_POLYNOMIAL_HPP_
