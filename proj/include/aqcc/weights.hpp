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

#ifndef AQCC_WEIGHTS_HPP
#define AQCC_WEIGHTS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aqcc/cyclic.hpp"
#include "aqcc/weights_kernel.hpp"

namespace aqcc {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 28;

enum class DistanceMethod { kExhaustive, kMacWilliams, kBoundOnly };

/// "exhaustive", "macwilliams", "bound-only".
std::string to_string(DistanceMethod m);

/// A minimum weight and how it was established. Bound-only values are lower
/// bounds and always render with a leading "≥".
struct WeightReport {
  std::uint32_t value = 0;
  DistanceMethod method = DistanceMethod::kExhaustive;
  /// Size of the codeword space the result covers (scalar classes for q > 2).
  /// Independent of worker count and early cutoff.
  std::uint64_t enumerated = 0;
  std::uint64_t budget = kDefaultBudget;

  bool exact() const { return method != DistanceMethod::kBoundOnly; }
  std::string render() const;
  bool operator==(const WeightReport&) const = default;
};

struct WeightOptions {
  std::uint64_t budget = kDefaultBudget;
  /// OpenMP threads; <= 0 uses the runtime default.
  int workers = 0;
};

/// q^k, saturating at UINT64_MAX.
std::uint64_t enumeration_size(std::uint32_t q, std::uint32_t k);

/// Exact minimum nonzero weight. Enumerates C when q^k fits the budget,
/// otherwise its dual followed by the MacWilliams transform; throws
/// BudgetExceeded when neither fits. The zero code is a PreconditionError.
WeightReport min_weight(const CyclicCode& c, const WeightOptions& opts = {});

/// Exact min weight over codewords of outer that are not in inner.
/// Throws NotNested unless inner is a subcode of outer, PreconditionError
/// when the difference is empty, BudgetExceeded when q^k(outer) > budget.
WeightReport min_weight_difference(const CyclicCode& outer, const CyclicCode& inner, const WeightOptions& opts = {});

/// Lower bound used when the budget is exceeded: the BCH bound of the code.
WeightReport bound_only(const CyclicCode& c, std::uint64_t budget);

struct WeightDistribution {
  /// counts[w] = number of codewords of weight w.
  std::vector<std::uint64_t> counts;
  DistanceMethod method = DistanceMethod::kExhaustive;
};

/// Direct enumeration when q^k fits the budget, else dual enumeration plus MacWilliams.
WeightDistribution weight_distribution(const CyclicCode& c, const WeightOptions& opts = {});

/// Weight distribution of the dual of a dimension-k code with distribution
/// `dist` (length n + 1). Exact big-integer arithmetic; throws
/// PreconditionError on malformed input (wrong total, non-integral result).
std::vector<std::uint64_t> macwilliams_transform(std::span<const std::uint64_t> dist, std::uint32_t n, std::uint32_t q,
                                                 std::uint32_t k);

/// Smallest nonzero weight of the dual of a dimension-k code with distribution
/// `dist`; n + 1 when the dual is the zero code. Stops at the first nonzero
/// coefficient, so counts beyond 64 bits are never materialised.
std::uint32_t macwilliams_min_weight(std::span<const std::uint64_t> dist, std::uint32_t n, std::uint32_t q,
                                     std::uint32_t k);

/// Positions where (a_i, b_i) != (0, 0).
std::uint32_t symplectic_weight(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

/// Enumeration plan for C (inner == nullptr) or C_outer \ C_inner.
kernel::SearchPlan make_search_plan(const CyclicCode& outer, const CyclicCode* inner);

}  // namespace aqcc

#endif  // AQCC_WEIGHTS_HPP
