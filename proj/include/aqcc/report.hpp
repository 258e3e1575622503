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

#ifndef AQCC_REPORT_HPP
#define AQCC_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aqcc/aqec.hpp"
#include "aqcc/audit.hpp"

namespace aqcc {

enum class Format { kText, kJson, kCsv };

Format parse_format(std::string_view s);

nlohmann::json weight_json(const WeightReport& w);

nlohmann::json record(const AqecParams& a);
nlohmann::json record(const SubsystemParams& s);
nlohmann::json record(const RowAudit& r);
/// Code summary; d is included when known.
nlohmann::json record(const CyclicCode& c, const std::optional<WeightReport>& d);
nlohmann::json cosets_record(std::uint32_t n, std::uint32_t q);

/// {"records": [...]} for JSON, one line per record for text, a header plus one
/// row per record for CSV.
std::string render(const std::vector<nlohmann::json>& records, Format f);

}  // namespace aqcc

#endif  // AQCC_REPORT_HPP
