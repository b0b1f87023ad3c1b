#pragma once

// JSON and CSV serialization for every result type, plus a structural
// validator for analysis reports. Needs the vendored json.hpp on the include path.

#include <cstdint>
#include <ostream>
#include <regex>
#include <string>
#include <vector>

#include <json.hpp>

#include "papnlab/differential.hpp"
#include "papnlab/exact.hpp"
#include "papnlab/expr.hpp"
#include "papnlab/families.hpp"
#include "papnlab/identities.hpp"
#include "papnlab/search.hpp"
#include "papnlab/spectral.hpp"

namespace papnlab {

using json = nlohmann::json;

inline std::string hex_string(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
  return buf;
}

inline json field_json(const Field& f) {
  return json{{"n", f.n()}, {"modulus", hex_string(f.modulus())}};
}

inline json vbf_json(const VBF& f) {
  json table = json::array();
  for (elem v : f.table()) table.push_back(hex_string(v));
  return json{{"n", f.n()}, {"modulus", hex_string(f.field().modulus())}, {"table", std::move(table)}};
}

inline VBF vbf_from_json(const json& j) {
  const FieldPtr field = make_field(j.at("n").get<unsigned>(), static_cast<std::uint32_t>(std::stoul(
                                                                  j.at("modulus").get<std::string>(), nullptr, 16)));
  std::vector<elem> t;
  for (const auto& v : j.at("table")) t.push_back(static_cast<elem>(std::stoul(v.get<std::string>(), nullptr, 16)));
  return VBF(field, std::move(t));
}

/// Rows "a,b,W" in (b, a) order after a header line.
inline void write_walsh_csv(std::ostream& os, const WalshTable& w) {
  os << "a,b,W\n";
  for (elem b = 0; b < w.size(); ++b)
    for (elem a = 0; a < w.size(); ++a) os << a << ',' << b << ',' << w(a, b) << '\n';
}

inline json moment_json(const MomentReport& m) {
  json twist = nullptr;
  if (m.twist) twist = json{{"x0", hex_string(m.twist->first)}, {"y0", hex_string(m.twist->second)}};
  return json{{"k", m.k}, {"twist", twist}, {"value", to_decimal(m.value)}};
}

inline void write_ddt_csv(std::ostream& os, const DDTable& d) {
  os << "a,b,count\n";
  for (elem a = 0; a < d.size(); ++a)
    for (elem b = 0; b < d.size(); ++b) os << a << ',' << b << ',' << d(a, b) << '\n';
}

inline json spectrum_json(const DifferentialSpectrum& s) {
  json j = json::object();
  for (auto [v, m] : s) j[std::to_string(v)] = m;
  return j;
}

inline json papn_report_json(const PapnReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"x0", hex_string(f.x0)},
                        {"derivative", {{"a", hex_string(f.derivative.a)}, {"x", hex_string(f.derivative.x)}}},
                        {"rodier", {{"u", hex_string(f.rodier.u)}, {"v", hex_string(f.rodier.v)}}}});
  std::uint64_t count = 0;
  for (auto v : r.verdict) count += v;
  return json{{"points", r.verdict.size()}, {"papn_points", count}, {"failures", std::move(failures)}};
}

inline json identity_result_json(const IdentityCheckResult& r) {
  json j{{"id", r.id},     {"function", r.function},       {"n", r.n},
         {"lhs", to_decimal(r.lhs)}, {"rhs", to_decimal(r.rhs)}, {"pass", r.pass}};
  j["x0"] = r.x0 ? json(hex_string(*r.x0)) : json(nullptr);
  j["eps"] = r.eps ? json(hex_string(*r.eps)) : json(nullptr);
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  if (r.vacuous) j["vacuous"] = *r.vacuous;
  return j;
}

inline json witness_json(const std::optional<RodierWitness>& w) {
  if (!w) return nullptr;
  return json{{"u", hex_string(w->u)}, {"v", hex_string(w->v)}};
}

inline json family_verdict_json(const FamilyVerdict& v) {
  json params = json::object();
  for (const auto& [k, val] : v.params) params[k] = val;
  json j{{"family", v.family},
         {"n", v.n},
         {"params", std::move(params)},
         {"observed_0apn", v.observed},
         {"agrees", v.agrees()},
         {"witness", witness_json(v.witness)},
         {"constructed_witness", witness_json(v.constructed)}};
  j["predicted_0apn"] = v.predicted ? json(*v.predicted) : json("not-applicable");
  j["nondegenerate"] = v.nondegenerate ? json(*v.nondegenerate) : json(nullptr);
  return j;
}

inline std::string join_exponents(const std::vector<std::uint32_t>& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? ";" : "") + std::to_string(e[i]);
  return s;
}

inline void write_table1_csv(std::ostream& os, const std::vector<Table1Row>& rows) {
  os << "n,exponents,delta\n";
  for (const auto& r : rows) os << r.n << ',' << join_exponents(r.exponents) << ',' << r.delta << '\n';
}

inline json table1_json(const std::vector<Table1Row>& rows) {
  json j = json::array();
  for (const auto& r : rows) j.push_back({{"n", r.n}, {"exponents", r.exponents}, {"delta", r.delta}});
  return j;
}

inline std::string spectrum_string(const DifferentialSpectrum& s) {
  std::string out = "{";
  for (auto [v, m] : s) out += (out.size() > 1 ? ", " : "") + std::to_string(v) + "^" + std::to_string(m);
  return out + "}";
}

inline json scan_summary_json(const ScanSummary& s) {
  json spectra = json::array();
  for (const auto& [spec, count] : s.spectra) spectra.push_back({{"spectrum", spectrum_json(spec)}, {"count", count}});
  json samples = json::array();
  for (auto code : s.samples) samples.push_back(polynomial_string(scan_code_polynomial(s.n, s.coefficients, code)));
  return json{{"n", s.n},
              {"coefficients", s.coefficients == CoefficientSet::F2 ? "f2" : "full"},
              {"x0", hex_string(s.x0)},
              {"candidates", s.candidates},
              {"hits", s.hits},
              {"spectra", std::move(spectra)},
              {"samples", std::move(samples)}};
}

inline json conjecture_json(const ConjectureEntryReport& r) {
  json cex = json::array();
  for (const auto& c : r.counterexamples) cex.push_back({{"x0", hex_string(c.x0)}, {"eps", hex_string(c.eps)}});
  return json{{"function", r.name},
              {"n", r.n},
              {"points", r.points},
              {"counterexamples", std::move(cex)},
              {"cross_checked", r.cross_checked},
              {"cross_check_disagreements", r.cross_check_disagreements}};
}

// ---------------------------------------------------------------------------
// Analysis reports

/// Stable identifiers accepted by --checks, in output order.
inline const std::vector<std::string>& analysis_check_ids() {
  static const std::vector<std::string> ids = {"apn",   "weak",    "delta",   "spectrum",
                                               "papn0", "papn-all", "moments", "walsh-csv"};
  return ids;
}

/// Structural check of an analysis report; returns the problems found.
inline std::vector<std::string> validate_analysis_report(const json& j) {
  std::vector<std::string> errs;
  static const std::regex hex_re("0x[0-9a-f]+");
  static const std::regex dec_re("-?[0-9]+");
  auto need = [&](const json& obj, const char* key, auto pred, const char* what) {
    if (!obj.is_object() || !obj.contains(key) || !pred(obj.at(key))) errs.push_back(std::string(key) + ": " + what);
  };
  auto is_hex = [&](const json& v) { return v.is_string() && std::regex_match(v.get<std::string>(), hex_re); };
  auto is_uint = [](const json& v) {
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
  };
  auto is_bool = [](const json& v) { return v.is_boolean(); };
  auto is_dec = [&](const json& v) { return v.is_string() && std::regex_match(v.get<std::string>(), dec_re); };

  if (!j.is_object()) return {"report must be an object"};
  for (const auto& [k, _] : j.items())
    if (k != "field" && k != "function" && k != "checks") errs.push_back("unexpected top-level key " + k);
  need(j, "field", [](const json& v) { return v.is_object(); }, "object required");
  if (j.contains("field")) {
    need(j["field"], "n", is_uint, "unsigned integer required");
    need(j["field"], "modulus", is_hex, "hex string required");
  }
  need(j, "function", [](const json& v) { return v.is_object(); }, "object required");
  if (j.contains("function")) need(j["function"], "source", [](const json& v) { return v.is_string(); }, "string");
  need(j, "checks", [](const json& v) { return v.is_object(); }, "object required");
  if (!j.contains("checks") || !j["checks"].is_object()) return errs;

  const json& c = j["checks"];
  for (const auto& [k, v] : c.items()) {
    if (k == "apn" || k == "weak" || k == "papn0") {
      if (!is_bool(v)) errs.push_back(k + ": boolean required");
    } else if (k == "delta") {
      if (!is_uint(v)) errs.push_back(k + ": unsigned integer required");
    } else if (k == "spectrum") {
      if (!v.is_object()) errs.push_back(k + ": object required");
      else
        for (const auto& [val, mult] : v.items())
          if (!std::regex_match(val, dec_re) || !is_uint(mult)) errs.push_back("spectrum: bad entry " + val);
    } else if (k == "papn-all") {
      need(v, "points", is_uint, "unsigned integer required");
      need(v, "papn_points", is_uint, "unsigned integer required");
      need(v, "failures", [](const json& x) { return x.is_array(); }, "array required");
    } else if (k == "moments") {
      if (!v.is_object()) errs.push_back(k + ": object required");
      else
        for (const auto& [order, val] : v.items())
          if ((order != "2" && order != "3" && order != "4") || !is_dec(val))
            errs.push_back("moments: bad entry " + order);
    } else if (k == "walsh-csv") {
      need(v, "path", [](const json& x) { return x.is_string(); }, "string required");
      need(v, "rows", is_uint, "unsigned integer required");
    } else {
      errs.push_back("unknown check " + k);
    }
  }
  return errs;
}

/// Flattens a report into "path,value" rows.
inline void write_flat_csv(std::ostream& os, const json& j) {
  os << "key,value\n";
  const json flat = j.flatten();
  for (const auto& [k, v] : flat.items()) os << k << ',' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

/// Flattens a report into "path: value" lines.
inline void write_human(std::ostream& os, const json& j) {
  const json flat = j.flatten();
  for (const auto& [k, v] : flat.items()) os << k.substr(1) << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                                             << '\n';
}

}  // namespace papnlab
