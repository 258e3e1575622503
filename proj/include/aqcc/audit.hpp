// Copyright 2026 The aqcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AQCC_AUDIT_HPP
#define AQCC_AUDIT_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aqcc/aqec.hpp"

namespace aqcc {

struct ClassicalParams {
  std::uint32_t n;
  std::uint32_t k;
  std::uint32_t d;

  std::string to_string() const;
};

/// One printed row of the reference table of asymmetric cyclic codes.
struct ExpectedRow {
  int row;
  std::uint32_t q;
  ClassicalParams c1;
  ClassicalParams c2;
  std::uint32_t n;
  std::uint32_t k;
  std::uint32_t dz;
  std::uint32_t dx;
  /// Descriptors for the codes used. An empty c1 descriptor means "search
  /// for a code with the printed parameters".
  std::string c1_descriptor;
  std::string c2_descriptor;

  std::string label() const;
};

const std::vector<ExpectedRow>& reference_table();

enum class Verdict { kReproduced, kNotReproduced, kPartial };

/// "REPRODUCED", "NOT-REPRODUCED", "PARTIAL".
std::string to_string(Verdict v);

struct RowAudit {
  int row;
  ExpectedRow expected;
  std::string c1_descriptor;
  std::string c2_descriptor;
  std::optional<AqecParams> computed;
  Verdict verdict;
  std::vector<std::string> notes;
};

struct AuditOptions {
  WeightOptions weights;
  /// Empty audits every row.
  std::set<int> rows;
};

/// Verdicts: REPRODUCED needs k and both distances to match with exact
/// methods; PARTIAL means k matches and some distance is only a bound that
/// does not contradict the printed value; everything else is NOT-REPRODUCED.
std::vector<RowAudit> audit_table(const AuditOptions& opts = {});

RowAudit audit_row(const ExpectedRow& row, const WeightOptions& opts = {});

}  // namespace aqcc

#endif  // AQCC_AUDIT_HPP
