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

#include "aqcc/report.hpp"

#include <sstream>

#include "aqcc/polyring.hpp"

namespace aqcc {

using nlohmann::json;

namespace {

std::string render_weight(const json& w) {
  const std::string v = std::to_string(w.at("value").get<std::uint32_t>());
  return w.at("method") == "bound-only" ? "≥" + v : v;
}

std::string quantum_label(const json& r) {
  std::string s = "[[" + std::to_string(r.at("n").get<int>()) + "," + std::to_string(r.at("k").get<int>()) + ",";
  if (r.contains("r")) s += std::to_string(r.at("r").get<int>()) + ",";
  return s + render_weight(r.at("dz")) + "/" + render_weight(r.at("dx")) + "]]_" + std::to_string(r.at("q").get<int>());
}

std::string text_line(const json& r) {
  const std::string kind = r.at("kind");
  std::ostringstream os;
  if (kind == "cosets") {
    os << "n=" << r["n"] << " q=" << r["q"] << " cosets:";
    for (const auto& c : r["cosets"]) os << " {" << c.get<std::string>() << "}";
    return os.str();
  }
  if (kind == "code") {
    os << r["label"].get<std::string>();
    if (r.contains("d")) os << " d=" << render_weight(r["d"]);
    os << "  " << r["descriptor"].get<std::string>() << "  g(x) = " << r["generator"].get<std::string>();
    return os.str();
  }
  if (r.contains("row")) os << "row " << r["row"] << ": ";
  os << quantum_label(r);
  if (r.contains("verdict")) os << "  " << r["verdict"].get<std::string>();
  if (r.contains("expected")) os << " (printed " << r["expected"].get<std::string>() << ")";
  os << "  route=" << r["route"].get<std::string>();
  if (r.contains("pure")) os << " pure=" << (r["pure"].get<bool>() ? "yes" : "no");
  if (r.contains("symmetric")) os << " symmetric=" << r["symmetric"].get<std::string>();
  os << "\n  C1: " << r["c1"].get<std::string>() << "\n  C2: " << r["c2"].get<std::string>();
  if (r.contains("closed_form")) os << "\n  " << r["closed_form"]["summary"].get<std::string>();
  if (r.contains("notes")) {
    for (const auto& n : r["notes"]) os << "\n  note: " << n.get<std::string>();
  }
  return os.str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_field(const json& r, const char* key) {
  if (!r.contains(key)) return "";
  const auto& v = r.at(key);
  if (v.is_string()) return csv_escape(v.get<std::string>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

}  // namespace

Format parse_format(std::string_view s) {
  if (s == "text") return Format::kText;
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  throw PreconditionError("unknown format '" + std::string(s) + "' (expected text, json or csv)");
}

json weight_json(const WeightReport& w) {
  return {{"value", w.value}, {"method", to_string(w.method)}, {"enumerated", w.enumerated}};
}

json record(const AqecParams& a) {
  json r = {{"kind", "aqec"},
            {"n", a.n},
            {"q", a.q},
            {"k", a.k},
            {"dz", weight_json(a.dz)},
            {"dx", weight_json(a.dx)},
            {"c1", a.c1.descriptor()},
            {"c2", a.c2.descriptor()},
            {"route", a.route},
            {"symmetric", a.symmetric_label()}};
  if (a.pure) r["pure"] = *a.pure;
  const auto cap = correction_capability(a);
  r["correction"] = {{"t_x", cap.t_x}, {"t_z", cap.t_z}, {"lower_bound", cap.lower_bound}};
  if (a.closed_form) {
    const auto& cf = *a.closed_form;
    r["closed_form"] = {{"b", cf.b},
                        {"ground_truth", cf.ground_truth},
                        {"two_k_minus_b_minus_n", cf.two_k_minus_b_minus_n},
                        {"two_k_plus_b_minus_n", cf.two_k_plus_b_minus_n},
                        {"summary", cf.describe()}};
  }
  if (!a.notes.empty()) r["notes"] = a.notes;
  return r;
}

json record(const SubsystemParams& s) {
  json r = {{"kind", "subsystem"},
            {"n", s.n},
            {"q", s.q},
            {"k", s.k},
            {"r", s.r},
            {"dz", weight_json(s.dz)},
            {"dx", weight_json(s.dx)},
            {"c1", s.c1.descriptor()},
            {"c2", s.c2.descriptor()},
            {"route", s.route}};
  if (s.pure) r["pure"] = *s.pure;
  if (!s.notes.empty()) r["notes"] = s.notes;
  return r;
}

json record(const RowAudit& a) {
  json r;
  if (a.computed) {
    r = record(*a.computed);
  } else {
    const WeightReport none{0, DistanceMethod::kBoundOnly, 0, 0};
    r = {{"kind", "aqec"},         {"n", a.expected.n},     {"q", a.expected.q},     {"k", 0},
         {"dz", weight_json(none)}, {"dx", weight_json(none)}, {"c1", a.c1_descriptor}, {"c2", a.c2_descriptor},
         {"route", "css"}};
  }
  r["kind"] = "audit";
  r["row"] = a.row;
  r["verdict"] = to_string(a.verdict);
  r["expected"] = a.expected.label();
  r["expected_c1"] = a.expected.c1.to_string();
  r["expected_c2"] = a.expected.c2.to_string();
  r["notes"] = a.notes;
  return r;
}

json record(const CyclicCode& c, const std::optional<WeightReport>& d) {
  json r = {{"kind", "code"},
            {"n", c.n()},
            {"q", c.q()},
            {"k", c.k()},
            {"label", c.label()},
            {"descriptor", c.descriptor()},
            {"defining_set", c.defining_set().to_string()},
            {"generator", c.generator().to_string()},
            {"bch_bound", bch_bound(c)}};
  if (d) r["d"] = weight_json(*d);
  return r;
}

json cosets_record(std::uint32_t n, std::uint32_t q) {
  json list = json::array();
  for (const auto& c : cyclotomic_cosets(n, q)) list.push_back(format_residues(c.members));
  return {{"kind", "cosets"}, {"n", n}, {"q", q}, {"cosets", list}};
}

std::string render(const std::vector<json>& records, Format f) {
  switch (f) {
    case Format::kJson:
      return json{{"records", records}}.dump(2) + "\n";
    case Format::kText: {
      std::string out;
      for (const auto& r : records) out += text_line(r) + "\n";
      return out;
    }
    case Format::kCsv: {
      static const char* kCols[] = {"kind", "n", "q", "k", "r", "dz", "dz_method", "dx", "dx_method",
                                    "pure", "c1", "c2", "route", "verdict"};
      std::string out;
      for (std::size_t i = 0; i < std::size(kCols); ++i) out += (i ? "," : "") + std::string(kCols[i]);
      out += "\n";
      for (const auto& r : records) {
        json flat = r;
        if (r.contains("dz")) {
          flat["dz"] = r["dz"]["value"];
          flat["dz_method"] = r["dz"]["method"];
          flat["dx"] = r["dx"]["value"];
          flat["dx_method"] = r["dx"]["method"];
        }
        if (r.value("kind", "") == "code") {
          flat["c1"] = r["descriptor"];
          if (r.contains("d")) {
            flat["dz"] = r["d"]["value"];
            flat["dz_method"] = r["d"]["method"];
          }
        }
        for (std::size_t i = 0; i < std::size(kCols); ++i) out += (i ? "," : "") + csv_field(flat, kCols[i]);
        out += "\n";
      }
      return out;
    }
  }
  return {};
}

}  // namespace aqcc
