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

// Batch verification over a catalog, and the CSV / JSON report formats.

#ifndef MATROID_EHRHART_VERIFICATION_HPP_
#define MATROID_EHRHART_VERIFICATION_HPP_

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "matroid_ehrhart/catalog.hpp"
#include "matroid_ehrhart/invariants.hpp"
#include "matroid_ehrhart/polynomial.hpp"

namespace matroid_ehrhart {

struct VerificationOptions {
  unsigned workers = 0;  // 0 = std::thread::hardware_concurrency()
};

struct VerificationReport {
  std::vector<VerificationRecord> records;     // eligible entries
  std::vector<VerificationRecord> rejections;  // hypotheses not met

  int passed() const {
    return static_cast<int>(std::count_if(
        records.begin(), records.end(),
        [](const VerificationRecord& r) { return r.pass(); }));
  }
  int failed() const { return static_cast<int>(records.size()) - passed(); }
  bool all_pass() const { return failed() == 0; }
};

// Checks each entry on a pool of workers; records are sorted by id, so the
// result does not depend on scheduling. An exception from any entry (for
// example an InterpolationGuardError) is rethrown as std::runtime_error
// naming the offending id.
inline VerificationReport RunVerification(const Catalog& catalog,
                                          VerificationOptions options = {}) {
  unsigned workers = options.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(
      workers, std::max<std::size_t>(1, catalog.size()));

  std::vector<VerificationRecord> results(catalog.size());
  std::vector<std::exception_ptr> errors(catalog.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < catalog.size(); i = next++) {
      try {
        results[i] = VerifyMainTheorem(catalog[i].matroid, catalog[i].id);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  std::string first_failed_id;
  std::exception_ptr first_error;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (errors[i] && (first_error == nullptr || catalog[i].id < first_failed_id)) {
      first_error = errors[i];
      first_failed_id = catalog[i].id;
    }
  }
  if (first_error) {
    try {
      std::rethrow_exception(first_error);
    } catch (const std::exception& e) {
      throw std::runtime_error(first_failed_id + ": " + e.what());
    }
  }

  VerificationReport report;
  for (auto& rec : results) {
    if (rec.status == VerificationStatus::kRejected) {
      report.rejections.push_back(std::move(rec));
    } else {
      report.records.push_back(std::move(rec));
    }
  }
  auto by_id = [](const VerificationRecord& a, const VerificationRecord& b) {
    return a.id < b.id;
  };
  std::stable_sort(report.records.begin(), report.records.end(), by_id);
  std::stable_sort(report.rejections.begin(), report.rejections.end(), by_id);
  return report;
}

inline std::string ReportToCsv(const VerificationReport& report) {
  std::string out = "id,n,k,connected,beta,normalization,lhs,rhs,pass\n";
  for (const auto& r : report.records) {
    out += r.id + "," + std::to_string(r.n) + "," + std::to_string(r.k) + "," +
           (r.connected ? "true" : "false") + "," + std::to_string(r.beta) +
           "," + std::to_string(r.normalization) + "," +
           (r.lhs ? ToFractionString(*r.lhs) : std::string()) + "," +
           ToFractionString(r.rhs) + "," + (r.pass() ? "true" : "false") + "\n";
  }
  return out;
}

inline nlohmann::ordered_json RecordToJson(const VerificationRecord& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["n"] = r.n;
  j["k"] = r.k;
  j["loops"] = r.has_loops;
  j["coloops"] = r.has_coloops;
  j["connected"] = r.connected;
  j["beta"] = r.beta;
  j["normalization"] = r.normalization;
  j["lhs"] = r.lhs ? nlohmann::ordered_json(ToFractionString(*r.lhs))
                   : nlohmann::ordered_json(nullptr);
  j["rhs"] = ToFractionString(r.rhs);
  j["status"] = StatusName(r.status);
  if (r.status == VerificationStatus::kRejected) {
    j["reason"] = r.rejection_reason;
  } else {
    j["pass"] = r.pass();
  }
  return j;
}

inline std::string ReportToJson(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["summary"] = {{"checked", report.records.size()},
                  {"passed", report.passed()},
                  {"failed", report.failed()},
                  {"rejected", report.rejections.size()}};
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : report.records) j["records"].push_back(RecordToJson(r));
  j["rejections"] = nlohmann::ordered_json::array();
  for (const auto& r : report.rejections) {
    j["rejections"].push_back(RecordToJson(r));
  }
  return j.dump(2) + "\n";
}

// {"coeffs": ["c0", "c1", ...]} with every entry "num/den".
inline std::string PolynomialToJson(const RationalPolynomial& p) {
  nlohmann::ordered_json j;
  j["coeffs"] = nlohmann::ordered_json::array();
  for (const Rational& c : p.Coefficients()) {
    j["coeffs"].push_back(ToFractionString(c));
  }
  return j.dump();
}

// Throws std::invalid_argument on malformed input.
inline RationalPolynomial PolynomialFromJson(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad polynomial JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw std::invalid_argument("polynomial JSON needs a 'coeffs' array");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) {
      throw std::invalid_argument("coefficients must be \"num/den\" strings");
    }
    coeffs.push_back(ParseRational(c.get<std::string>()));
  }
  return RationalPolynomial(std::move(coeffs));
}

}  // namespace matroid_ehrhart

#endif  // MATROID_EHRHART_VERIFICATION_HPP_
