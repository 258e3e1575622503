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

// Prints one PASS/FAIL line per acceptance criterion and exits nonzero on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "aqcc/audit.hpp"
#include "aqcc/search.hpp"
#include "bridge.hpp"

namespace {

using namespace aqcc;
using Clock = std::chrono::steady_clock;

constexpr double kAc1Seconds = 10.0;
constexpr double kAc2Seconds = 1800.0;
constexpr double kAc3Seconds = 1.0;
constexpr double kAc4Seconds = 60.0;
constexpr std::uint64_t kAc2SideLimit = std::uint64_t{1} << 26;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const RowAudit& row(const std::vector<RowAudit>& rows, int r) {
  for (const auto& a : rows) {
    if (a.row == r) return a;
  }
  throw std::runtime_error("row missing");
}

bool exact_match(const RowAudit& a, const std::string& label) {
  return a.verdict == Verdict::kReproduced && a.computed && a.computed->label() == label &&
         a.computed->dz.method == DistanceMethod::kExhaustive && a.computed->dx.method == DistanceMethod::kExhaustive;
}

Outcome ac1() {
  const auto t0 = Clock::now();
  const auto rows = audit_table({{}, {1, 2}});
  const double secs = seconds_since(t0);
  const auto& r1 = row(rows, 1);
  const auto& r2 = row(rows, 2);
  const bool ok1 = exact_match(r1, "[[15,3,5/3]]_2");
  const bool ok2 = r2.verdict == Verdict::kReproduced && r2.computed && r2.computed->label() == "[[15,0,5/4]]_2";
  std::ostringstream os;
  os << "row1=" << (r1.computed ? r1.computed->label() : "-") << " " << to_string(r1.verdict)
     << "; row2=" << (r2.computed ? r2.computed->label() : "-") << " " << to_string(r2.verdict) << " via "
     << r2.c1_descriptor << "; " << secs << "s (limit " << kAc1Seconds << "s)";
  return {ok1 && ok2 && secs < kAc1Seconds, os.str()};
}

Outcome ac2() {
  const auto t0 = Clock::now();
  const auto rows = audit_table({{}, {3, 4, 5, 6, 7}});
  const double secs = seconds_since(t0);
  bool ok = true;
  std::ostringstream os;
  const std::vector<std::pair<int, std::string>> want = {
      {3, "[[31,6,7/5]]_2"}, {4, "[[31,11,7/3]]_2"}, {6, "[[31,6,11/3]]_2"}, {7, "[[31,1,15/3]]_2"}};
  for (const auto& [r, label] : want) {
    const auto& a = row(rows, r);
    const bool side_ok = a.computed && a.computed->c1_side.enumerated <= kAc2SideLimit &&
                         a.computed->c2_side.enumerated <= kAc2SideLimit;
    const bool good = exact_match(a, label) && side_ok;
    ok = ok && good;
    os << "row" << r << "=" << (a.computed ? a.computed->label() : "-") << (good ? "" : "(mismatch)") << " ";
  }
  const auto& r5 = row(rows, 5);
  const bool ok5 = r5.verdict == Verdict::kNotReproduced && r5.computed && r5.computed->k == 11;
  os << "row5=" << to_string(r5.verdict) << " k=" << (r5.computed ? r5.computed->k : 0) << "; " << secs
     << "s (limit " << kAc2Seconds << "s, <= 2^26 per side)";
  return {ok && ok5 && secs < kAc2Seconds, os.str()};
}

Outcome ac3() {
  const auto t0 = Clock::now();
  const auto rows = audit_table({{}, {8, 9}});
  const double secs = seconds_since(t0);
  const auto& r8 = row(rows, 8);
  const auto& r9 = row(rows, 9);
  auto bound_ok = [](const RowAudit& a, std::uint32_t delta1, std::uint32_t delta2) {
    return a.computed && !a.computed->dz.exact() && !a.computed->dx.exact() && a.computed->dz.value >= delta2 &&
           a.computed->dx.value >= delta1 && a.verdict == Verdict::kPartial;
  };
  const bool dims = r8.computed && r8.computed->k == 64 && r9.computed && r9.computed->k == 56;
  const bool bounds = bound_ok(r8, 5, 15) && bound_ok(r9, 7, 16);
  const bool flagged = std::any_of(r9.notes.begin(), r9.notes.end(), [](const std::string& n) {
    return n.find("25/7") != std::string::npos && n.find("27") != std::string::npos;
  });
  std::ostringstream os;
  os << "row8=" << (r8.computed ? r8.computed->label() : "-") << " row9=" << (r9.computed ? r9.computed->label() : "-")
     << "; discrepancy flagged=" << (flagged ? "yes" : "no") << "; " << secs << "s (limit " << kAc3Seconds << "s)";
  return {dims && bounds && flagged && secs < kAc3Seconds, os.str()};
}

std::size_t set_calculus_mismatches(std::uint32_t n) {
  const auto field = bridge::field_for(n);
  const auto sets = oracle::all_binary_defining_sets(n);
  std::vector<oracle::WordSet> brute;
  std::vector<CyclicCode> codes;
  for (const auto& t : sets) {
    brute.push_back(oracle::codewords_by_roots(field, n, t));
    codes.push_back(from_defining_set(n, 2, t));
  }
  std::size_t bad = 0;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    bad += bridge::codewords(codes[i]) != brute[i];
    bad += bridge::codewords(dual(codes[i])) != oracle::dual(brute[i], n);
    for (std::size_t j = 0; j < codes.size(); ++j) {
      bad += bridge::codewords(intersect(codes[i], codes[j])) != oracle::intersect(brute[i], brute[j]);
      bad += bridge::codewords(sum(codes[i], codes[j])) != oracle::sum(brute[i], brute[j]);
      bad += contains(codes[i], codes[j]) != oracle::subset(brute[j], brute[i]);
    }
  }
  return bad;
}

Outcome ac4() {
  const auto t0 = Clock::now();
  const std::size_t bad = set_calculus_mismatches(7) + set_calculus_mismatches(15);
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << "8 codes at n=7, 32 at n=15; mismatches=" << bad << "; " << secs << "s (limit " << kAc4Seconds << "s)";
  return {bad == 0 && secs < kAc4Seconds, os.str()};
}

Outcome ac5() {
  std::size_t total = 0;
  std::size_t pass = 0;
  auto check = [&](const CyclicCode& c1, const CyclicCode& c2) {
    ++total;
    const auto m = build_stabilizer_matrix(c1, c2);
    pass += check_css_commutativity(m.hx, m.hz);
  };
  SearchOptions opts;
  opts.include_degenerate = true;
  for (auto route : {SearchRoute::kCss, SearchRoute::kExtendPoly, SearchRoute::kExtendSet}) {
    for (const auto& a : search(15, 2, route, opts)) check(a.c1, a.c2);
  }
  // Candidate pairs of the n = 31 search; distances are not needed here.
  for (const auto& p : nested_pairs(31, 2)) check(p.c1, p.c2);
  std::ostringstream os;
  os << pass << "/" << total << " nested pairs commute (n=15 searches, n=31 candidate pairs)";
  return {total > 0 && pass == total, os.str()};
}

Outcome ac6() {
  const auto c1 = hamming(4, 2);
  const auto space = c1.space();
  const auto allowed = dual(c1).defining_set() - c1.defining_set();
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < space->cosets.size(); ++i) {
    if (allowed.contains(space->cosets[i].representative)) free.push_back(i);
  }
  std::size_t choices = 0;
  std::size_t equal = 0;
  std::size_t identity = 0;
  std::size_t reports = 0;
  for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
    std::vector<std::uint32_t> t;
    for (std::size_t j = 0; j < free.size(); ++j) {
      if (mask >> j & 1) t.insert(t.end(), space->cosets[free[j]].members.begin(), space->cosets[free[j]].members.end());
    }
    const auto by_set = extend_by_defining_set(c1, t);
    ++choices;
    identity += by_set.params.k == c1.k() - dual(by_set.c2).k();
    reports += by_set.params.closed_form.has_value();
    if (mask == 0) {
      ++equal;  // f must have degree >= 1, so the empty choice has no polynomial counterpart.
      continue;
    }
    const DefiningSet ts(15, 2, t);
    const auto sym = ts | ts.negated();
    Polynomial f = Polynomial::one(c1.field());
    for (std::size_t i = 0; i < space->cosets.size(); ++i) {
      if (sym.contains(space->cosets[i].representative)) f = f * space->minimal[i];
    }
    const auto by_poly = extend_by_polynomial(c1, f);
    identity += by_poly.params.k == c1.k() - dual(by_poly.c2).k();
    reports += by_poly.params.closed_form.has_value();
    equal += by_set.c2 == by_poly.c2 && by_set.params.k == by_poly.params.k && by_set.params.dz == by_poly.params.dz &&
             by_set.params.dx == by_poly.params.dx;
  }
  const std::size_t derivations = 2 * choices - 1;
  std::ostringstream os;
  os << "C1=[15,11]: " << equal << "/" << choices << " choices agree across routes; identity holds on " << identity
     << "/" << derivations << " derivations; closed-form reports " << reports << "/" << derivations;
  return {equal == choices && identity == derivations && reports == derivations, os.str()};
}

Outcome ac7() {
  const auto c1 = bch(15, 2, 5);
  const auto [s, t] = subsystem_euclidean(c1);
  const std::uint32_t n = 15;
  const std::uint32_t k1 = c1.k();
  const std::uint32_t k2 = s.c2.k();
  const bool shapes = s.k == 4 && s.r == 3 && t.k == 3 && t.r == 4;
  const bool books = s.k + k1 + k2 == n && s.r == k1 - k2 && t.r + k1 + k2 == n && t.k == k1 - k2;
  bool chains = true;
  std::size_t steps = 0;
  for (auto cur : {s, t}) {
    const auto total = cur.k + cur.r;
    while (cur.k > 1) {
      cur = trade_dimension(cur);
      chains = chains && cur.k + cur.r == total;
      ++steps;
    }
  }
  std::ostringstream os;
  os << s.label() << " and " << t.label() << "; k1=" << k1 << " k2=" << k2
     << "; bookkeeping k + (k1+k2) = n with r = k1-k2 (literal k+r+(k1+k2) = " << s.k + s.r + k1 + k2
     << "); trade chain steps=" << steps;
  return {shapes && books && chains, os.str()};
}

Outcome ac8() {
  std::ostringstream os;
  bool ok = true;
  const std::vector<std::pair<CyclicCode, std::uint32_t>> known = {
      {bch(15, 2, 3), 3}, {bch(31, 2, 7), 7}, {bch(31, 2, 11), 11}, {bch(31, 2, 15), 15}};
  for (const auto& [c, d] : known) {
    const auto w = min_weight(c);
    ok = ok && w.value == d;
    os << c.label() << "=" << w.value << " ";
  }
  std::size_t mac_ok = 0;
  std::size_t kernel_ok = 0;
  std::size_t kernel_total = 0;
  const auto codes = all_cyclic_codes(15, 2);
  for (const auto& c : codes) {
    const auto a = weight_distribution(c).counts;
    const auto b = macwilliams_transform(a, 15, 2, c.k());
    mac_ok += macwilliams_transform(b, 15, 2, 15 - c.k()) == a && b == weight_distribution(dual(c)).counts;
    for (const auto& inner : codes) {
      const bool plain = inner == c;
      if (!plain && (inner.k() == c.k() || !contains(c, inner))) continue;
      const auto plan = make_search_plan(c, plain ? nullptr : &inner);
      const auto hist = kernel::histogram_serial(plan);
      const auto mw = kernel::min_weight_serial(plan).min_weight;
      for (int workers : {1, 2, 4}) {
        ++kernel_total;
        kernel_ok += kernel::histogram_omp(plan, workers) == hist && kernel::min_weight_omp(plan, workers).min_weight == mw;
      }
    }
  }
  ok = ok && mac_ok == codes.size() && kernel_ok == kernel_total;
  os << "; MacWilliams involution " << mac_ok << "/" << codes.size() << "; parallel==serial " << kernel_ok << "/"
     << kernel_total;
  return {ok, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5}, {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}};
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %s %s\n", name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
