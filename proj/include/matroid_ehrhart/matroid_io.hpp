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

// Plain-text matroid records.
//
//   n k
//   0110...      one basis per line, character i is '1' iff element i is in it
//
// A stream may hold several records back to back; a header is recognized by
// its two whitespace-separated integers. Blank lines and lines starting with
// '#' are ignored. For n = 0 the single empty basis is implied.

#ifndef MATROID_EHRHART_MATROID_IO_HPP_
#define MATROID_EHRHART_MATROID_IO_HPP_

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "matroid_ehrhart/matroid.hpp"

namespace matroid_ehrhart {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string FormatMatroid(const Matroid& m) {
  std::string out = std::to_string(m.size()) + " " + std::to_string(m.rank()) +
                    "\n";
  for (Subset b : m.bases()) {
    if (m.size() == 0) break;
    for (int i = 1; i <= m.size(); ++i) out += Contains(b, i) ? '1' : '0';
    out += '\n';
  }
  return out;
}

namespace internal {

inline std::string Trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

struct PendingRecord {
  int n = 0;
  int k = 0;
  int header_line = 0;
  std::vector<Subset> bases;
};

inline Matroid FinishRecord(PendingRecord& rec, bool skip_validation) {
  if (rec.n == 0) rec.bases.push_back(0);
  if (rec.bases.empty()) {
    throw ParseError("line " + std::to_string(rec.header_line) +
                     ": record has no bases");
  }
  if (!skip_validation && !ValidateBases(rec.n, rec.bases)) {
    throw ParseError("line " + std::to_string(rec.header_line) +
                     ": basis-exchange axiom fails");
  }
  return Matroid(rec.n, std::move(rec.bases), /*validate=*/false);
}

}  // namespace internal

// Throws ParseError on malformed input.
inline std::vector<Matroid> ParseMatroids(std::istream& in,
                                          bool skip_validation = false) {
  std::vector<Matroid> out;
  internal::PendingRecord rec;
  bool open = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = internal::Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto fail = [&](const std::string& what) {
      throw ParseError("line " + std::to_string(line_no) + ": " + what);
    };
    if (line.find_first_of(" \t") != std::string::npos) {
      if (open) out.push_back(internal::FinishRecord(rec, skip_validation));
      std::istringstream header(line);
      rec = internal::PendingRecord{};
      std::string extra;
      if (!(header >> rec.n >> rec.k) || (header >> extra)) {
        fail("expected header 'n k'");
      }
      if (rec.n < 0 || rec.n > kMaxGroundSetSize) fail("n out of range");
      if (rec.k < 0 || rec.k > rec.n) fail("k out of range");
      rec.header_line = line_no;
      open = true;
      continue;
    }
    if (!open) fail("basis line before header");
    if (static_cast<int>(line.size()) != rec.n) {
      fail("basis width " + std::to_string(line.size()) + " != n = " +
           std::to_string(rec.n));
    }
    Subset b = 0;
    for (int i = 0; i < rec.n; ++i) {
      if (line[i] == '1') {
        b |= Subset{1} << i;
      } else if (line[i] != '0') {
        fail("basis characters must be 0 or 1");
      }
    }
    if (Cardinality(b) != rec.k) {
      fail("basis has " + std::to_string(Cardinality(b)) +
           " elements, expected k = " + std::to_string(rec.k));
    }
    rec.bases.push_back(b);
  }
  if (open) out.push_back(internal::FinishRecord(rec, skip_validation));
  return out;
}

inline Matroid ParseMatroid(std::istream& in, bool skip_validation = false) {
  auto all = ParseMatroids(in, skip_validation);
  if (all.size() != 1) {
    throw ParseError("expected exactly one matroid record, found " +
                     std::to_string(all.size()));
  }
  return std::move(all.front());
}

inline Matroid ParseMatroid(const std::string& text,
                            bool skip_validation = false) {
  std::istringstream in(text);
  return ParseMatroid(in, skip_validation);
}

inline Matroid ReadMatroidFile(const std::string& path,
                               bool skip_validation = false) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return ParseMatroid(in, skip_validation);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace matroid_ehrhart

#endif  // MATROID_EHRHART_MATROID_IO_HPP_
