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

// Crapo's beta invariant, and the check that it equals (up to the factor
// (n-1) * C(n-2, k-1)) the linear coefficient of ehr(M, t - 1).

#ifndef MATROID_EHRHART_INVARIANTS_HPP_
#define MATROID_EHRHART_INVARIANTS_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "matroid_ehrhart/ehrhart.hpp"
#include "matroid_ehrhart/matroid.hpp"
#include "matroid_ehrhart/polynomial.hpp"

namespace matroid_ehrhart {

inline constexpr int kMaxBetaDefinitionSize = 20;

// (-1)^rk(M) * sum over A ⊆ E of (-1)^|A| rk(A).
inline long long BetaDefinition(const Matroid& m) {
  if (m.size() > kMaxBetaDefinitionSize) {
    throw std::invalid_argument("beta_definition: ground set too large");
  }
  long long sum = 0;
  for (Subset a = 0; a <= m.ground_set(); ++a) {
    long long term = m.Rank(a);
    sum += (Cardinality(a) % 2 == 0) ? term : -term;
    if (a == m.ground_set()) break;
  }
  long long beta = (m.rank() % 2 == 0) ? sum : -sum;
  if (beta < 0) throw std::logic_error("beta came out negative");
  return beta;
}

// beta(M) = beta(M \ i) + beta(M / i) on the smallest element i that is
// neither a loop nor a coloop.
inline long long BetaDelCon(const Matroid& m) {
  const int n = m.size();
  const Subset fixed = m.Loops() | m.Coloops();
  if (n == 0) return 0;
  if (n == 1) return m.rank() == 1 ? 1 : 0;
  if (fixed == m.ground_set()) return 0;
  const int element = std::countr_zero(~fixed & m.ground_set()) + 1;
  return BetaDelCon(Delete(m, element)) + BetaDelCon(Contract(m, element));
}

// (n-1) * C(n-2, k-1); zero outside 1 <= k <= n-1.
inline long long Normalization(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1) return 0;
  return static_cast<long long>(n - 1) *
         static_cast<long long>(Binomial(n - 2, k - 1));
}

enum class VerificationStatus { kPass, kFail, kRejected };

inline const char* StatusName(VerificationStatus s) {
  switch (s) {
    case VerificationStatus::kPass:
      return "pass";
    case VerificationStatus::kFail:
      return "fail";
    case VerificationStatus::kRejected:
      return "rejected";
  }
  return "?";
}

struct VerificationRecord {
  std::string id;
  int n = 0;
  int k = 0;
  bool has_loops = false;
  bool has_coloops = false;
  bool connected = false;
  long long beta = 0;
  long long normalization = 0;
  std::optional<Rational> lhs;  // beta / normalization; absent when rejected
                                // for degenerate rank
  Rational rhs = 0;             // [t^1] ehr(M, t - 1)
  VerificationStatus status = VerificationStatus::kFail;
  std::string rejection_reason;

  bool pass() const { return status == VerificationStatus::kPass; }
};

// Matroids outside the identity's hypotheses (loops, coloops, n < 2, or
// k not in [1, n-1]) come back kRejected with rhs still filled in.
inline VerificationRecord VerifyMainTheorem(const Matroid& m,
                                            std::string id = "") {
  VerificationRecord rec;
  rec.id = std::move(id);
  rec.n = m.size();
  rec.k = m.rank();
  rec.has_loops = m.Loops() != 0;
  rec.has_coloops = m.Coloops() != 0;
  rec.connected = IsConnected(m);
  rec.beta = BetaDefinition(m);
  rec.normalization = Normalization(rec.n, rec.k);
  rec.rhs = LinearCoeffShifted(m);
  if (rec.normalization > 0) {
    rec.lhs = Rational(rec.beta, rec.normalization);
  }

  if (rec.n < 2) {
    rec.rejection_reason = "ground set has fewer than 2 elements";
  } else if (rec.k < 1 || rec.k > rec.n - 1) {
    rec.rejection_reason = "rank outside [1, n-1]";
  } else if (rec.has_loops && rec.has_coloops) {
    rec.rejection_reason = "has loops and coloops";
  } else if (rec.has_loops) {
    rec.rejection_reason = "has a loop";
  } else if (rec.has_coloops) {
    rec.rejection_reason = "has a coloop";
  }
  if (!rec.rejection_reason.empty()) {
    rec.status = VerificationStatus::kRejected;
    return rec;
  }
  rec.status = (*rec.lhs == rec.rhs) ? VerificationStatus::kPass
                                     : VerificationStatus::kFail;
  return rec;
}

}  // namespace matroid_ehrhart

#endif  // MATROID_EHRHART_INVARIANTS_HPP_
