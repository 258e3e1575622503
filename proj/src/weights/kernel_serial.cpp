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

// Slow but obvious enumeration used to cross-check the parallel kernels.

#include "aqcc/weights_kernel.hpp"

namespace aqcc::kernel {

namespace {

template <typename Visit>
void for_each_codeword(const SearchPlan& plan, Visit&& visit) {
  const Field& f = *plan.field;
  const std::uint32_t q = f.size();
  std::vector<std::uint32_t> msg(plan.k, 0);
  std::vector<std::uint32_t> c(plan.n);
  while (true) {
    for (std::uint32_t t = 0; t < plan.n; ++t) {
      std::uint32_t acc = 0;
      for (std::uint32_t i = 0; i < plan.k; ++i) {
        acc = f.add(acc, f.mul(msg[i], plan.rows[static_cast<std::size_t>(i) * plan.n + t]));
      }
      c[t] = acc;
    }
    bool outside_inner = false;
    for (std::uint32_t r = 0; r < plan.inner_rows && !outside_inner; ++r) {
      std::uint32_t acc = 0;
      for (std::uint32_t t = 0; t < plan.n; ++t) {
        acc = f.add(acc, f.mul(plan.inner_parity[static_cast<std::size_t>(r) * plan.n + t], c[t]));
      }
      outside_inner = acc != 0;
    }
    std::uint32_t w = 0;
    for (auto v : c) w += v != 0;
    visit(w, outside_inner);

    std::uint32_t j = 0;
    for (; j < plan.k; ++j) {
      if (++msg[j] < q) break;
      msg[j] = 0;
    }
    if (j == plan.k) break;
  }
}

}  // namespace

SearchResult min_weight_serial(const SearchPlan& plan) {
  std::uint32_t best = plan.n + 1;
  std::uint64_t visited = 0;
  for_each_codeword(plan, [&](std::uint32_t w, bool outside_inner) {
    ++visited;
    const bool counts = plan.filtered() ? outside_inner : w > 0;
    if (counts && w < best) best = w;
  });
  return {best, visited};
}

std::vector<std::uint64_t> histogram_serial(const SearchPlan& plan) {
  std::vector<std::uint64_t> hist(plan.n + 1, 0);
  for_each_codeword(plan, [&](std::uint32_t w, bool outside_inner) {
    if (!plan.filtered() || outside_inner) ++hist[w];
  });
  return hist;
}

}  // namespace aqcc::kernel
