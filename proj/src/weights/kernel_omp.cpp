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

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>

#include "aqcc/weights_kernel.hpp"

namespace aqcc::kernel {

namespace {

constexpr std::uint32_t kMaxPrefixBits = 12;
constexpr std::uint64_t kCutoffPoll = 0xFFF;
constexpr std::uint64_t kChunk = 1u << 14;

int resolve_workers(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

void publish_min(std::atomic<std::uint32_t>& best, std::uint32_t value) {
  std::uint32_t cur = best.load(std::memory_order_relaxed);
  while (value < cur && !best.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

// ---------------------------------------------------------------------------
// q = 2, n <= 64 * W: bit-packed rows, Gray-code walk inside each partition.

template <int W>
using Bits = std::array<std::uint64_t, W>;

template <int W>
struct PackedPlan {
  std::uint32_t k;
  std::vector<Bits<W>> rows;
  std::vector<Bits<W>> syndromes;
  bool filtered;
};

template <int W>
Bits<W> pack(const std::uint32_t* v, std::size_t len) {
  Bits<W> b{};
  for (std::size_t i = 0; i < len; ++i) {
    if (v[i] & 1) b[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return b;
}

template <int W>
PackedPlan<W> pack_plan(const SearchPlan& plan) {
  PackedPlan<W> pp{plan.k, {}, {}, plan.filtered()};
  std::vector<std::uint32_t> syn(plan.inner_rows);
  for (std::uint32_t i = 0; i < plan.k; ++i) {
    const std::uint32_t* row = plan.rows.data() + static_cast<std::size_t>(i) * plan.n;
    pp.rows.push_back(pack<W>(row, plan.n));
    for (std::uint32_t r = 0; r < plan.inner_rows; ++r) {
      const std::uint32_t* h = plan.inner_parity.data() + static_cast<std::size_t>(r) * plan.n;
      std::uint32_t acc = 0;
      for (std::uint32_t t = 0; t < plan.n; ++t) acc ^= h[t] & row[t];
      syn[r] = acc;
    }
    pp.syndromes.push_back(pack<W>(syn.data(), syn.size()));
  }
  return pp;
}

template <int W>
inline void xor_into(Bits<W>& a, const Bits<W>& b) {
  for (int w = 0; w < W; ++w) a[w] ^= b[w];
}

template <int W>
inline bool any(const Bits<W>& a) {
  std::uint64_t acc = 0;
  for (int w = 0; w < W; ++w) acc |= a[w];
  return acc != 0;
}

template <int W>
inline std::uint32_t popcount(const Bits<W>& a) {
  std::uint32_t c = 0;
  for (int w = 0; w < W; ++w) c += static_cast<std::uint32_t>(std::popcount(a[w]));
  return c;
}

// Calls visit(codeword, syndrome) for every message in the partition; visit
// returns false to stop early.
template <int W, typename Visit>
void walk_partition(const PackedPlan<W>& pp, std::uint32_t low_bits, std::uint64_t prefix, Visit&& visit) {
  Bits<W> c{};
  Bits<W> s{};
  for (std::uint32_t j = 0; (prefix >> j) != 0; ++j) {
    if (prefix >> j & 1) {
      xor_into<W>(c, pp.rows[low_bits + j]);
      xor_into<W>(s, pp.syndromes[low_bits + j]);
    }
  }
  if (!visit(c, s, std::uint64_t{0})) return;
  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const int bit = std::countr_zero(i);
    xor_into<W>(c, pp.rows[bit]);
    xor_into<W>(s, pp.syndromes[bit]);
    if (!visit(c, s, i)) return;
  }
}

template <int W>
SearchResult binary_min_weight(const SearchPlan& plan, int workers) {
  const PackedPlan<W> pp = pack_plan<W>(plan);
  const std::uint32_t prefix_bits = std::min(plan.k, kMaxPrefixBits);
  const std::uint32_t low_bits = plan.k - prefix_bits;
  const auto parts = static_cast<std::int64_t>(std::uint64_t{1} << prefix_bits);
  const std::uint32_t lb = plan.lower_bound;
  std::atomic<std::uint32_t> best{plan.n + 1};
  std::atomic<std::uint64_t> visited{0};

#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_workers(workers))
  for (std::int64_t part = 0; part < parts; ++part) {
    if (best.load(std::memory_order_relaxed) <= lb) continue;
    std::uint32_t local = plan.n + 1;
    std::uint64_t count = 0;
    walk_partition<W>(pp, low_bits, static_cast<std::uint64_t>(part),
                      [&](const Bits<W>& c, const Bits<W>& s, std::uint64_t i) {
                        ++count;
                        if (pp.filtered ? any<W>(s) : any<W>(c)) {
                          const std::uint32_t w = popcount<W>(c);
                          if (w < local) {
                            local = w;
                            if (local <= lb) return false;
                          }
                        }
                        if ((i & kCutoffPoll) == 0) {
                          publish_min(best, local);
                          if (best.load(std::memory_order_relaxed) <= lb) return false;
                        }
                        return true;
                      });
    publish_min(best, local);
    visited.fetch_add(count, std::memory_order_relaxed);
  }
  return {best.load(), visited.load()};
}

template <int W>
std::vector<std::uint64_t> binary_histogram(const SearchPlan& plan, int workers) {
  const PackedPlan<W> pp = pack_plan<W>(plan);
  const std::uint32_t prefix_bits = std::min(plan.k, kMaxPrefixBits);
  const std::uint32_t low_bits = plan.k - prefix_bits;
  const auto parts = static_cast<std::int64_t>(std::uint64_t{1} << prefix_bits);
  std::vector<std::uint64_t> total(plan.n + 1, 0);

#pragma omp parallel num_threads(resolve_workers(workers))
  {
    std::vector<std::uint64_t> local(plan.n + 1, 0);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t part = 0; part < parts; ++part) {
      walk_partition<W>(pp, low_bits, static_cast<std::uint64_t>(part),
                        [&](const Bits<W>& c, const Bits<W>& s, std::uint64_t) {
                          if (!pp.filtered || any<W>(s)) ++local[popcount<W>(c)];
                          return true;
                        });
    }
#pragma omp critical
    for (std::size_t w = 0; w < local.size(); ++w) total[w] += local[w];
  }
  return total;
}

// ---------------------------------------------------------------------------
// Any q: one representative per scalar class (highest nonzero message digit
// equal to 1), walked with a mixed-radix counter.

struct GenericState {
  const SearchPlan& plan;
  const Field& f;
  std::vector<std::uint32_t> syn_rows;  // k x inner_rows

  explicit GenericState(const SearchPlan& p) : plan(p), f(*p.field) {
    syn_rows.assign(static_cast<std::size_t>(p.k) * p.inner_rows, 0);
    for (std::uint32_t i = 0; i < p.k; ++i) {
      for (std::uint32_t r = 0; r < p.inner_rows; ++r) {
        std::uint32_t acc = 0;
        for (std::uint32_t t = 0; t < p.n; ++t) {
          acc = f.add(acc, f.mul(p.inner_parity[static_cast<std::size_t>(r) * p.n + t],
                                 p.rows[static_cast<std::size_t>(i) * p.n + t]));
        }
        syn_rows[static_cast<std::size_t>(i) * p.inner_rows + r] = acc;
      }
    }
  }

  void axpy(std::vector<std::uint32_t>& c, std::vector<std::uint32_t>& s, std::uint32_t coef, std::uint32_t row) const {
    if (coef == 0) return;
    const std::uint32_t* g = plan.rows.data() + static_cast<std::size_t>(row) * plan.n;
    for (std::uint32_t t = 0; t < plan.n; ++t) c[t] = f.add(c[t], f.mul(coef, g[t]));
    const std::uint32_t* h = syn_rows.data() + static_cast<std::size_t>(row) * plan.inner_rows;
    for (std::uint32_t r = 0; r < plan.inner_rows; ++r) s[r] = f.add(s[r], f.mul(coef, h[r]));
  }
};

std::uint64_t class_offset(std::uint64_t q, std::uint32_t t) {
  std::uint64_t off = 0;
  std::uint64_t pw = 1;
  for (std::uint32_t i = 0; i < t; ++i, pw *= q) off += pw;
  return off;
}

// Visits projective messages with global index in [start, end).
template <typename Visit>
void walk_classes(const GenericState& st, std::uint64_t start, std::uint64_t end, Visit&& visit) {
  const SearchPlan& plan = st.plan;
  const std::uint64_t q = st.f.size();
  std::vector<std::uint32_t> digits(plan.k, 0);
  std::vector<std::uint32_t> c(plan.n, 0);
  std::vector<std::uint32_t> s(plan.inner_rows, 0);
  std::uint32_t top = 0;
  std::uint64_t next_boundary = 0;

  auto reset = [&](std::uint64_t idx) {
    top = 0;
    while (class_offset(q, top + 1) <= idx) ++top;
    next_boundary = class_offset(q, top + 1);
    std::uint64_t rem = idx - class_offset(q, top);
    std::fill(digits.begin(), digits.end(), 0);
    std::fill(c.begin(), c.end(), 0);
    std::fill(s.begin(), s.end(), 0);
    digits[top] = 1;
    st.axpy(c, s, 1, top);
    for (std::uint32_t j = 0; j < top; ++j, rem /= q) {
      digits[j] = static_cast<std::uint32_t>(rem % q);
      st.axpy(c, s, digits[j], j);
    }
  };

  reset(start);
  for (std::uint64_t idx = start; idx < end; ++idx) {
    if (idx == next_boundary) reset(idx);
    if (!visit(c, s, idx)) return;
    // advance the digits below top
    for (std::uint32_t j = 0; j < top; ++j) {
      const std::uint32_t old = digits[j];
      const std::uint32_t nxt = old + 1 == q ? 0 : old + 1;
      digits[j] = nxt;
      st.axpy(c, s, st.f.sub(nxt, old), j);
      if (nxt != 0) break;
    }
  }
}

std::uint32_t weight_of(const std::vector<std::uint32_t>& c) {
  return static_cast<std::uint32_t>(std::count_if(c.begin(), c.end(), [](std::uint32_t v) { return v != 0; }));
}

bool nonzero(const std::vector<std::uint32_t>& v) {
  return std::any_of(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
}

SearchResult generic_min_weight(const SearchPlan& plan, int workers) {
  const GenericState st(plan);
  const std::uint64_t total = class_offset(st.f.size(), plan.k);
  const auto chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
  const std::uint32_t lb = plan.lower_bound;
  std::atomic<std::uint32_t> best{plan.n + 1};
  std::atomic<std::uint64_t> visited{0};

#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_workers(workers))
  for (std::int64_t ch = 0; ch < chunks; ++ch) {
    if (best.load(std::memory_order_relaxed) <= lb) continue;
    const std::uint64_t start = static_cast<std::uint64_t>(ch) * kChunk;
    const std::uint64_t end = std::min(total, start + kChunk);
    std::uint32_t local = plan.n + 1;
    std::uint64_t count = 0;
    walk_classes(st, start, end, [&](const std::vector<std::uint32_t>& c, const std::vector<std::uint32_t>& s, std::uint64_t) {
      ++count;
      if (!plan.filtered() || nonzero(s)) {
        local = std::min(local, weight_of(c));
        if (local <= lb) return false;
      }
      return true;
    });
    publish_min(best, local);
    visited.fetch_add(count, std::memory_order_relaxed);
  }
  return {best.load(), visited.load()};
}

std::vector<std::uint64_t> generic_histogram(const SearchPlan& plan, int workers) {
  const GenericState st(plan);
  const std::uint64_t q = st.f.size();
  const std::uint64_t total = class_offset(q, plan.k);
  const auto chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
  std::vector<std::uint64_t> hist(plan.n + 1, 0);

#pragma omp parallel num_threads(resolve_workers(workers))
  {
    std::vector<std::uint64_t> local(plan.n + 1, 0);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t ch = 0; ch < chunks; ++ch) {
      const std::uint64_t start = static_cast<std::uint64_t>(ch) * kChunk;
      walk_classes(st, start, std::min(total, start + kChunk),
                   [&](const std::vector<std::uint32_t>& c, const std::vector<std::uint32_t>& s, std::uint64_t) {
                     if (!plan.filtered() || nonzero(s)) local[weight_of(c)] += q - 1;
                     return true;
                   });
    }
#pragma omp critical
    for (std::size_t w = 0; w < local.size(); ++w) hist[w] += local[w];
  }
  if (!plan.filtered()) hist[0] += 1;
  return hist;
}

}  // namespace

SearchResult min_weight_omp(const SearchPlan& plan, int workers) {
  if (plan.k == 0) return {plan.n + 1, 0};
  if (plan.field->size() == 2 && plan.n <= 64) return binary_min_weight<1>(plan, workers);
  if (plan.field->size() == 2 && plan.n <= 128) return binary_min_weight<2>(plan, workers);
  return generic_min_weight(plan, workers);
}

std::vector<std::uint64_t> histogram_omp(const SearchPlan& plan, int workers) {
  if (plan.k == 0) {
    std::vector<std::uint64_t> h(plan.n + 1, 0);
    if (!plan.filtered()) h[0] = 1;
    return h;
  }
  if (plan.field->size() == 2 && plan.n <= 64) return binary_histogram<1>(plan, workers);
  if (plan.field->size() == 2 && plan.n <= 128) return binary_histogram<2>(plan, workers);
  return generic_histogram(plan, workers);
}

}  // namespace aqcc::kernel
