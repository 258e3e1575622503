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

#include "aqcc/search.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace aqcc {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    v *= base;
    if (v > limit) return limit + 1;
  }
  return v;
}

void require_within(std::uint64_t count, std::uint64_t limit, const std::string& what) {
  if (count > limit) {
    throw PreconditionError("search space too large: " + what + " exceeds the limit of " + std::to_string(limit) +
                            " candidates");
  }
}

std::uint64_t mask_of(const CodeSpace& space, const DefiningSet& t) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < space.cosets.size(); ++i) {
    if (t.contains(space.cosets[i].representative)) m |= std::uint64_t{1} << i;
  }
  return m;
}

}  // namespace

std::string to_string(SearchRoute r) {
  switch (r) {
    case SearchRoute::kCss:
      return "css";
    case SearchRoute::kExtendPoly:
      return "extend-poly";
    case SearchRoute::kExtendSet:
      return "extend-set";
  }
  return "unknown";
}

SearchRoute parse_search_route(std::string_view s) {
  if (s == "css") return SearchRoute::kCss;
  if (s == "extend-poly") return SearchRoute::kExtendPoly;
  if (s == "extend-set") return SearchRoute::kExtendSet;
  throw PreconditionError("unknown route '" + std::string(s) + "' (expected css, extend-poly or extend-set)");
}

std::vector<NestedPair> nested_pairs(std::uint32_t n, std::uint32_t q, std::uint64_t limit) {
  auto space = code_space(n, q);
  const std::size_t c = space->cosets.size();
  require_within(checked_power(4, c, limit), limit, std::to_string(c) + " cosets give 4^" + std::to_string(c) + " pairs");
  const std::uint64_t full = (std::uint64_t{1} << c) - 1;
  // dual(C2) ⊆ C1  <=>  T(C1) ⊆ T(dual(C2)), and T(dual(C2)) is a coset mask too.
  std::vector<std::uint64_t> dual_mask(full + 1);
  for (std::uint64_t m = 0; m <= full; ++m) {
    const CyclicCode code = from_coset_mask(space, m);
    dual_mask[m] = mask_of(*space, code.defining_set().complement().negated());
  }
  std::vector<NestedPair> out;
  for (std::uint64_t m1 = 0; m1 <= full; ++m1) {
    for (std::uint64_t m2 = 0; m2 <= full; ++m2) {
      if ((m1 & ~dual_mask[m2]) != 0) continue;
      out.push_back({from_coset_mask(space, m1), from_coset_mask(space, m2)});
    }
  }
  return out;
}

std::vector<AqecParams> search(std::uint32_t n, std::uint32_t q, SearchRoute route, const SearchOptions& opts) {
  auto space = code_space(n, q);
  const std::size_t c = space->cosets.size();
  const std::uint64_t full = (std::uint64_t{1} << c) - 1;
  std::vector<AqecParams> found;
  auto keep = [&](AqecParams p) {
    if (p.k == 0 && !opts.include_degenerate) return;
    found.push_back(std::move(p));
  };

  switch (route) {
    case SearchRoute::kCss:
      for (const auto& pair : nested_pairs(n, q, opts.candidate_limit)) {
        const bool degenerate = pair.c1.k() + pair.c2.k() == n;
        if (degenerate && (!opts.include_degenerate || pair.c1.k() == 0 || pair.c2.k() == 0)) continue;
        keep(css_aqec(pair.c1, pair.c2, opts.aqec));
      }
      break;
    case SearchRoute::kExtendPoly: {
      require_within(checked_power(3, c, opts.candidate_limit), opts.candidate_limit,
                     "3^" + std::to_string(c) + " (C1, f) choices");
      for (std::uint64_t m1 = 0; m1 <= full; ++m1) {
        const CyclicCode c1 = from_coset_mask(space, m1);
        const std::uint64_t free = full & ~m1;
        for (std::uint64_t s = free; s != 0; s = (s - 1) & free) {
          Polynomial f = Polynomial::one(space->field());
          for (std::size_t i = 0; i < c; ++i) {
            if (s >> i & 1) f = f * space->minimal[i];
          }
          keep(extend_by_polynomial(c1, f, opts.aqec).params);
        }
      }
      break;
    }
    case SearchRoute::kExtendSet: {
      require_within(checked_power(3, c, opts.candidate_limit), opts.candidate_limit,
                     "3^" + std::to_string(c) + " (C1, T) choices");
      for (std::uint64_t m1 = 0; m1 <= full; ++m1) {
        const CyclicCode c1 = from_coset_mask(space, m1);
        const DefiningSet allowed = dual(c1).defining_set() - c1.defining_set();
        const std::uint64_t free = mask_of(*space, allowed);
        std::set<std::vector<std::uint32_t>> seen;
        for (std::uint64_t s = free; s != 0; s = (s - 1) & free) {
          std::vector<std::uint32_t> t;
          for (std::size_t i = 0; i < c; ++i) {
            if (s >> i & 1) t.insert(t.end(), space->cosets[i].members.begin(), space->cosets[i].members.end());
          }
          const DefiningSet ts(n, q, t);
          if (!seen.insert((ts | ts.negated()).members()).second) continue;
          keep(extend_by_defining_set(c1, t, opts.aqec).params);
        }
      }
      break;
    }
  }

  auto key = [](const AqecParams& p) {
    return std::make_tuple(p.k, p.dz.value, p.dx.value, p.c1.defining_set().members(), p.c2.defining_set().members());
  };
  std::stable_sort(found.begin(), found.end(), [&](const AqecParams& a, const AqecParams& b) {
    const auto ga = static_cast<std::int64_t>(a.dz.value) - a.dx.value;
    const auto gb = static_cast<std::int64_t>(b.dz.value) - b.dx.value;
    if (ga != gb) return ga > gb;
    if (a.k != b.k) return a.k > b.k;
    return key(a) < key(b);
  });
  found.erase(std::unique(found.begin(), found.end(), [&](const AqecParams& a, const AqecParams& b) { return key(a) == key(b); }),
              found.end());
  if (opts.max_results != 0 && found.size() > opts.max_results) found.erase(found.begin() + static_cast<std::ptrdiff_t>(opts.max_results), found.end());
  return found;
}

}  // namespace aqcc
