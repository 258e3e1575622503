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

#include "aqcc/weights.hpp"

#include <limits>

namespace aqcc {

std::string to_string(DistanceMethod m) {
  switch (m) {
    case DistanceMethod::kExhaustive:
      return "exhaustive";
    case DistanceMethod::kMacWilliams:
      return "macwilliams";
    case DistanceMethod::kBoundOnly:
      return "bound-only";
  }
  return "unknown";
}

std::string WeightReport::render() const {
  return (exact() ? "" : "≥") + std::to_string(value);
}

std::uint64_t enumeration_size(std::uint32_t q, std::uint32_t k) {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (v > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    v *= q;
  }
  return v;
}

namespace {

// Nonzero codewords, or nonzero scalar classes when q > 2.
std::uint64_t class_count(std::uint32_t q, std::uint32_t k) {
  const std::uint64_t all = enumeration_size(q, k);
  return q == 2 ? all - 1 : (all - 1) / (q - 1);
}

std::string budget_message(const std::string& what, std::uint64_t required, std::uint64_t budget) {
  return what + " needs " + std::to_string(required) + " enumerations, budget is " + std::to_string(budget);
}

}  // namespace

kernel::SearchPlan make_search_plan(const CyclicCode& outer, const CyclicCode* inner) {
  kernel::SearchPlan plan;
  plan.field = outer.field();
  plan.n = outer.n();
  plan.k = outer.k();
  plan.rows = generator_matrix(outer).matrix.data;
  if (inner != nullptr) {
    CheckMatrix h = parity_check_matrix(*inner);
    plan.inner_rows = static_cast<std::uint32_t>(h.matrix.rows);
    plan.inner_parity = std::move(h.matrix.data);
  }
  plan.lower_bound = bch_bound(outer);
  return plan;
}

WeightReport bound_only(const CyclicCode& c, std::uint64_t budget) {
  return {bch_bound(c), DistanceMethod::kBoundOnly, 0, budget};
}

WeightDistribution weight_distribution(const CyclicCode& c, const WeightOptions& opts) {
  const std::uint64_t direct = enumeration_size(c.q(), c.k());
  if (direct <= opts.budget) {
    return {kernel::histogram_omp(make_search_plan(c, nullptr), opts.workers), DistanceMethod::kExhaustive};
  }
  const std::uint64_t via_dual = enumeration_size(c.q(), c.n() - c.k());
  if (via_dual <= opts.budget) {
    CyclicCode d = dual(c);
    auto dual_dist = kernel::histogram_omp(make_search_plan(d, nullptr), opts.workers);
    return {macwilliams_transform(dual_dist, c.n(), c.q(), d.k()), DistanceMethod::kMacWilliams};
  }
  const std::uint64_t need = std::min(direct, via_dual);
  throw BudgetExceeded(budget_message("weight distribution of " + c.label(), need, opts.budget), need, opts.budget);
}

WeightReport min_weight(const CyclicCode& c, const WeightOptions& opts) {
  if (c.k() == 0) throw PreconditionError("the zero code " + c.label() + " has no nonzero codewords");
  const std::uint64_t direct = enumeration_size(c.q(), c.k());
  if (direct <= opts.budget) {
    auto r = kernel::min_weight_omp(make_search_plan(c, nullptr), opts.workers);
    return {r.min_weight, DistanceMethod::kExhaustive, class_count(c.q(), c.k()), opts.budget};
  }
  const std::uint64_t via_dual = enumeration_size(c.q(), c.n() - c.k());
  if (via_dual <= opts.budget) {
    CyclicCode d = dual(c);
    const auto dual_dist = kernel::histogram_omp(make_search_plan(d, nullptr), opts.workers);
    const std::uint32_t w = macwilliams_min_weight(dual_dist, c.n(), c.q(), d.k());
    if (w > c.n()) throw InternalConsistencyError("MacWilliams transform produced no nonzero codeword for " + c.label());
    return {w, DistanceMethod::kMacWilliams, class_count(c.q(), c.n() - c.k()), opts.budget};
  }
  const std::uint64_t need = std::min(direct, via_dual);
  throw BudgetExceeded(budget_message("minimum weight of " + c.label(), need, opts.budget), need, opts.budget);
}

WeightReport min_weight_difference(const CyclicCode& outer, const CyclicCode& inner, const WeightOptions& opts) {
  if (!contains(outer, inner)) {
    throw NotNested(inner.descriptor() + " is not a subcode of " + outer.descriptor());
  }
  if (outer.k() == inner.k()) {
    throw PreconditionError("set difference " + outer.label() + " \\ " + inner.label() + " is empty");
  }
  const std::uint64_t need = enumeration_size(outer.q(), outer.k());
  if (need > opts.budget) {
    throw BudgetExceeded(budget_message("wt(" + outer.label() + " \\ " + inner.label() + ")", need, opts.budget), need,
                         opts.budget);
  }
  auto r = kernel::min_weight_omp(make_search_plan(outer, &inner), opts.workers);
  if (r.min_weight > outer.n()) {
    throw InternalConsistencyError("no codeword of " + outer.descriptor() + " outside " + inner.descriptor());
  }
  return {r.min_weight, DistanceMethod::kExhaustive, class_count(outer.q(), outer.k()), opts.budget};
}

std::uint32_t symplectic_weight(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  if (a.size() != b.size()) {
    throw PreconditionError("symplectic halves differ in length: " + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
  }
  std::uint32_t w = 0;
  for (std::size_t i = 0; i < a.size(); ++i) w += (a[i] != 0 || b[i] != 0);
  return w;
}

}  // namespace aqcc
