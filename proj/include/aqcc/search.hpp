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

#ifndef AQCC_SEARCH_HPP
#define AQCC_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aqcc/aqec.hpp"

namespace aqcc {

enum class SearchRoute { kCss, kExtendPoly, kExtendSet };

std::string to_string(SearchRoute r);
/// "css", "extend-poly", "extend-set".
SearchRoute parse_search_route(std::string_view s);

/// A nested pair with dual(c2) ⊆ c1.
struct NestedPair {
  CyclicCode c1;
  CyclicCode c2;
};

struct SearchOptions {
  AqecOptions aqec{{}, false};
  /// 0 keeps everything.
  std::size_t max_results = 0;
  /// Upper bound on the number of candidate constructions examined.
  std::uint64_t candidate_limit = std::uint64_t{1} << 22;
  /// Keep k = 0 results.
  bool include_degenerate = false;
};

/// Every pair (C1, C2) of cyclic codes of length n over GF(q) with
/// dual(C2) ⊆ C1, in coset-mask order. Throws PreconditionError when 4^cosets
/// exceeds the limit.
std::vector<NestedPair> nested_pairs(std::uint32_t n, std::uint32_t q, std::uint64_t limit = std::uint64_t{1} << 22);

/// Derived codes sorted by (dz - dx, k) descending, duplicates suppressed.
std::vector<AqecParams> search(std::uint32_t n, std::uint32_t q, SearchRoute route, const SearchOptions& opts = {});

}  // namespace aqcc

#endif  // AQCC_SEARCH_HPP
