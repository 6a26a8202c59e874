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

// Command-line front end: compute invariants, build lattice-path matroids,
// write catalogs, and run batch verification.
//
// Exit codes: 0 success, 1 a verification failed, 2 bad input or usage.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "matroid_ehrhart/catalog.hpp"
#include "matroid_ehrhart/ehrhart.hpp"
#include "matroid_ehrhart/invariants.hpp"
#include "matroid_ehrhart/lattice_path.hpp"
#include "matroid_ehrhart/matroid_io.hpp"
#include "matroid_ehrhart/verification.hpp"

namespace me = matroid_ehrhart;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitBadInput = 2;

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

std::string FileId(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

int RunComputeBeta(const std::string& file, bool skip_validation,
                   const std::string& method) {
  me::Matroid m = me::ReadMatroidFile(file, skip_validation);
  long long beta =
      method == "delcon" ? me::BetaDelCon(m) : me::BetaDefinition(m);
  std::cout << beta << "\n";
  return 0;
}

int RunComputeEhrhart(const std::string& file, bool skip_validation,
                      bool shifted, bool json) {
  me::Matroid m = me::ReadMatroidFile(file, skip_validation);
  me::RationalPolynomial p = me::EhrhartPolynomial(m);
  if (shifted) p = me::ShiftByMinusOne(p);
  std::cout << (json ? me::PolynomialToJson(p) : p.ToString()) << "\n";
  return 0;
}

int RunComputeLpm(const std::string& lower, const std::string& upper,
                  const std::string& shape) {
  std::optional<me::LatticePath> lo;
  std::optional<me::LatticePath> hi;
  if (!shape.empty()) {
    auto [lambda, mu] = me::ParsePartitionPair(shape);
    auto paths = me::PathsFromPartitions(lambda, mu);
    lo = paths.first;
    hi = paths.second;
  } else {
    lo.emplace(lower);
    hi.emplace(upper);
  }
  std::cout << me::FormatMatroid(me::LatticePathMatroid(*lo, *hi));
  return 0;
}

struct VerifyArgs {
  int exhaustive = -1;
  std::vector<int> snakes;
  std::vector<std::string> files;
  std::string csv_path;
  std::string json_path;
  unsigned workers = 0;
  bool skip_validation = false;
};

int RunVerify(const VerifyArgs& args) {
  me::Catalog catalog;
  if (args.exhaustive >= 0) {
    for (int n = 0; n <= args.exhaustive; ++n) {
      me::Catalog part = me::ExhaustiveCatalog(n);
      std::move(part.begin(), part.end(), std::back_inserter(catalog));
    }
  }
  if (!args.snakes.empty()) {
    catalog = me::SnakeFamily(args.snakes[0], args.snakes[1]);
  }
  for (const auto& f : args.files) {
    catalog.push_back({FileId(f), me::ReadMatroidFile(f, args.skip_validation),
                       me::Provenance::kFile});
  }
  me::VerificationReport report =
      me::RunVerification(catalog, {.workers = args.workers});
  if (!args.csv_path.empty()) WriteFile(args.csv_path, me::ReportToCsv(report));
  if (!args.json_path.empty()) {
    WriteFile(args.json_path, me::ReportToJson(report));
  }
  for (const auto& r : report.records) {
    if (!r.pass()) {
      std::cout << "FAIL " << r.id << ": lhs="
                << (r.lhs ? me::ToFractionString(*r.lhs) : "-")
                << " rhs=" << me::ToFractionString(r.rhs) << "\n";
    }
  }
  if (catalog.size() <= 20) {
    for (const auto& r : report.records) {
      std::cout << r.id << ": beta=" << r.beta << " lhs="
                << me::ToFractionString(*r.lhs)
                << " rhs=" << me::ToFractionString(r.rhs) << " "
                << me::StatusName(r.status) << "\n";
    }
    for (const auto& r : report.rejections) {
      std::cout << r.id << ": rejected (" << r.rejection_reason
                << "), beta=" << r.beta
                << " rhs=" << me::ToFractionString(r.rhs) << "\n";
    }
  }
  std::cout << "checked " << report.records.size() << ", passed "
            << report.passed() << ", failed " << report.failed()
            << ", rejected " << report.rejections.size() << "\n";
  return report.all_pass() ? 0 : kExitFailed;
}

int RunCatalog(const std::string& family, int max_n,
               const std::string& out_dir) {
  me::Catalog catalog;
  if (family == "uniform") {
    catalog = me::UniformFamily(max_n);
  } else if (family == "lattice-path") {
    catalog = me::LatticePathFamily(max_n);
  } else if (family == "graphic") {
    catalog = me::GraphicFamily(max_n);
  } else {
    catalog = me::SumFamily(max_n);
  }
  std::filesystem::create_directories(out_dir);
  for (const auto& entry : catalog) {
    WriteFile((std::filesystem::path(out_dir) / (entry.id + ".mat")).string(),
              me::FormatMatroid(entry.matroid));
  }
  std::cout << "wrote " << catalog.size() << " matroids to " << out_dir
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Beta invariants and Ehrhart polynomials of matroids"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Compute one invariant");
  compute->require_subcommand(1);

  std::string file;
  bool skip_validation = false;
  std::string method = "definition";
  auto* beta = compute->add_subcommand("beta", "Beta invariant");
  beta->add_option("matroid-file", file, "Matroid text file")->required();
  beta->add_flag("--skip-validation", skip_validation,
                 "Do not check the basis-exchange axiom");
  beta->add_option("--method", method, "Algorithm")
      ->check(CLI::IsMember({"definition", "delcon"}));

  bool shifted = false;
  bool json = false;
  auto* ehrhart = compute->add_subcommand("ehrhart", "Ehrhart polynomial");
  ehrhart->add_option("matroid-file", file, "Matroid text file")->required();
  ehrhart->add_flag("--shifted", shifted, "Print ehr(M, t - 1)");
  ehrhart->add_flag("--json", json, "Emit {\"coeffs\": [...]}");
  ehrhart->add_flag("--skip-validation", skip_validation,
                    "Do not check the basis-exchange axiom");

  std::string lower;
  std::string upper;
  std::string shape;
  auto* lpm = compute->add_subcommand("lpm", "Lattice-path matroid");
  auto* lower_opt = lpm->add_option("--lower", lower, "Lower path, e.g. EEENENNEN");
  auto* upper_opt = lpm->add_option("--upper", upper, "Upper path, e.g. NEENENNEE");
  auto* shape_opt =
      lpm->add_option("--shape", shape, "Skew shape lambda/mu, e.g. 5,4,4,3/3,3,2,0");
  lower_opt->needs(upper_opt)->excludes(shape_opt);
  upper_opt->needs(lower_opt)->excludes(shape_opt);

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "Check the beta/Ehrhart identity");
  auto* ex_opt = verify->add_option("--exhaustive", vargs.exhaustive,
                                    "All labeled matroids with n <= N")
                     ->check(CLI::Range(0, me::kMaxExhaustiveSize));
  auto* snake_opt = verify->add_option("--snakes", vargs.snakes, "Snakes of size n, rank k")
                        ->expected(2);
  verify->add_option("--file", vargs.files, "Matroid files")
      ->check(CLI::ExistingFile);
  verify->add_option("--csv", vargs.csv_path, "Write the CSV report here");
  verify->add_option("--json", vargs.json_path, "Write the JSON report here");
  verify->add_option("--workers", vargs.workers, "Worker threads (0 = all)");
  verify->add_flag("--skip-validation", vargs.skip_validation,
                   "Do not check the basis-exchange axiom of --file inputs");
  ex_opt->excludes(snake_opt);
  snake_opt->excludes(ex_opt);

  std::string family;
  int max_n = 0;
  std::string out_dir = "catalog";
  auto* catalog = app.add_subcommand("catalog", "Write a family of matroid files");
  catalog->add_option("--family", family, "Family")
      ->required()
      ->check(CLI::IsMember({"uniform", "lattice-path", "graphic", "sums"}));
  catalog->add_option("--max-n", max_n, "Largest ground set")
      ->required()
      ->check(CLI::Range(1, me::kMaxGroundSetSize));
  catalog->add_option("--out-dir", out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (*beta) return RunComputeBeta(file, skip_validation, method);
    if (*ehrhart) return RunComputeEhrhart(file, skip_validation, shifted, json);
    if (*lpm) {
      if (shape.empty() && (lower.empty() || upper.empty())) {
        std::cerr << "lpm needs --lower and --upper, or --shape\n";
        return kExitBadInput;
      }
      return RunComputeLpm(lower, upper, shape);
    }
    if (*verify) {
      if (vargs.exhaustive < 0 && vargs.snakes.empty() && vargs.files.empty()) {
        std::cerr << "verify needs --exhaustive, --snakes, or --file\n";
        return kExitBadInput;
      }
      return RunVerify(vargs);
    }
    if (*catalog) return RunCatalog(family, max_n, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
