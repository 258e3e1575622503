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

// aqcc command-line front end.

#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aqcc/audit.hpp"
#include "aqcc/report.hpp"
#include "aqcc/search.hpp"

namespace {

using aqcc::Format;
using nlohmann::json;

constexpr int kExitPrecondition = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

struct Globals {
  std::string format = "text";
  std::uint64_t budget = aqcc::kDefaultBudget;
  int workers = 0;
  std::string purity = "auto";
  std::string modulus_table;

  aqcc::WeightOptions weights() const { return {budget, workers}; }
  aqcc::AqecOptions aqec() const {
    aqcc::AqecOptions o{weights(), std::nullopt};
    if (purity == "on") o.purity = true;
    if (purity == "off") o.purity = false;
    return o;
  }
};

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
  return s;
}

std::vector<std::uint32_t> parse_residues_arg(const std::string& text) { return aqcc::parse_residue_list(text); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic codes and the asymmetric quantum codes derived from them"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--budget", g.budget, "Maximum codeword enumerations per weight search");
  app.add_option("--workers", g.workers, "OpenMP threads (0 = runtime default)");
  app.add_option("--purity", g.purity, "Purity evaluation")->check(CLI::IsMember({"auto", "on", "off"}));
  app.add_option("--modulus-table", g.modulus_table, "File of 'p m polynomial' lines overriding field moduli");

  std::vector<json> records;

  std::uint32_t n = 0;
  std::uint32_t q = 2;
  auto* cosets = app.add_subcommand("cosets", "Cyclotomic cosets of q modulo n");
  cosets->add_option("--n", n)->required();
  cosets->add_option("--q", q);

  std::vector<std::string> code_desc;
  bool with_distance = false;
  auto* code = app.add_subcommand("code", "Build a cyclic code from a descriptor");
  code->add_option("descriptor", code_desc, "e.g. bch:n=15,q=2,delta=5 or 'q=2 n=15 T={1,2,4,8}'")->required();
  code->add_flag("--distance", with_distance, "Compute the minimum distance within the budget");

  auto* derive = app.add_subcommand("derive", "Derive a quantum code");
  derive->require_subcommand(1);
  derive->fallthrough();
  std::string c1_desc;
  std::string c2_desc;
  std::string f_text;
  std::string t_text;
  std::uint32_t gauge = 0;
  std::uint32_t trades = 0;
  auto* d_css = derive->add_subcommand("css", "CSS code from C2^perp ⊆ C1");
  d_css->add_option("--c1", c1_desc)->required();
  d_css->add_option("--c2", c2_desc)->required();
  d_css->add_option("--gauge", gauge, "Report the subsystem code with r gauge dimensions as well");
  auto* d_poly = derive->add_subcommand("extend-poly", "C2^perp generated by f*g1");
  d_poly->add_option("--c1", c1_desc)->required();
  d_poly->add_option("--f", f_text, "Monic divisor of h1, e.g. 'x^4 + x^3 + x^2 + x + 1'")->required();
  auto* d_set = derive->add_subcommand("extend-set", "T(C2) = T(C1^perp) minus (T ∪ -T)");
  d_set->add_option("--c1", c1_desc)->required();
  d_set->add_option("--T", t_text, "Residues, e.g. {3,6,9,12}")->required();
  auto* d_sub = derive->add_subcommand("subsystem", "Subsystem codes from C1 and C1 ∩ C1^perp");
  d_sub->add_option("--c1", c1_desc)->required();
  d_sub->add_option("--trade", trades, "Apply dimension trading this many times to both results");

  std::string rows_text;
  auto* table1 = app.add_subcommand("table1", "Audit the reference table of asymmetric cyclic codes");
  table1->add_option("--rows", rows_text, "Comma-separated row numbers (default: all)");

  std::string route = "css";
  std::size_t max_results = 0;
  bool degenerate = false;
  auto* search = app.add_subcommand("search", "Enumerate derived codes of a length");
  search->add_option("--n", n)->required();
  search->add_option("--q", q);
  search->add_option("--route", route)->check(CLI::IsMember({"css", "extend-poly", "extend-set"}));
  search->add_option("--max-results", max_results, "0 keeps every result");
  search->add_flag("--include-degenerate", degenerate, "Keep k = 0 codes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitPrecondition;
  }

  try {
    if (!g.modulus_table.empty()) aqcc::load_modulus_table(g.modulus_table);
    const Format fmt = aqcc::parse_format(g.format);

    if (*cosets) {
      records.push_back(aqcc::cosets_record(n, q));
    } else if (*code) {
      const auto c = aqcc::parse_code(join(code_desc));
      std::optional<aqcc::WeightReport> d;
      if (with_distance && c.k() > 0) d = aqcc::min_weight(c, g.weights());
      records.push_back(aqcc::record(c, d));
    } else if (*d_css) {
      const auto a = aqcc::css_aqec(aqcc::parse_code(c1_desc), aqcc::parse_code(c2_desc), g.aqec());
      records.push_back(aqcc::record(a));
      if (gauge > 0) records.push_back(aqcc::record(aqcc::aqec_to_subsystem(a, gauge)));
    } else if (*d_poly) {
      const auto c1 = aqcc::parse_code(c1_desc);
      const auto f = aqcc::Polynomial::parse(c1.field(), f_text);
      records.push_back(aqcc::record(aqcc::extend_by_polynomial(c1, f, g.aqec()).params));
    } else if (*d_set) {
      const auto ext = aqcc::extend_by_defining_set(aqcc::parse_code(c1_desc), parse_residues_arg(t_text), g.aqec());
      records.push_back(aqcc::record(ext.params));
    } else if (*d_sub) {
      auto [first, second] = aqcc::subsystem_euclidean(aqcc::parse_code(c1_desc), g.aqec());
      for (auto s : {first, second}) {
        records.push_back(aqcc::record(s));
        for (std::uint32_t i = 0; i < trades; ++i) {
          s = aqcc::trade_dimension(s);
          records.push_back(aqcc::record(s));
        }
      }
    } else if (*table1) {
      aqcc::AuditOptions opts{g.weights(), {}};
      for (auto r : parse_residues_arg(rows_text.empty() ? "" : "{" + rows_text + "}")) opts.rows.insert(static_cast<int>(r));
      for (const auto& row : aqcc::audit_table(opts)) records.push_back(aqcc::record(row));
    } else if (*search) {
      aqcc::SearchOptions opts;
      opts.aqec = g.aqec();
      if (g.purity == "auto") opts.aqec.purity = false;
      opts.max_results = max_results;
      opts.include_degenerate = degenerate;
      for (const auto& a : aqcc::search(n, q, aqcc::parse_search_route(route), opts)) records.push_back(aqcc::record(a));
    }
    std::cout << aqcc::render(records, fmt);
    return 0;
  } catch (const aqcc::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const aqcc::InternalConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
