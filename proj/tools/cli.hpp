#pragma once

// Command-line front end. run() takes the argument list and output streams
// so tests can drive it in-process.
//
// Exit codes: 0 success, 1 analysis failure, 2 usage or input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "papnlab/papnlab.hpp"
#include "papnlab/report.hpp"

namespace papnlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::uint32_t parse_hex(const std::string& s, const char* what) {
  if (s.size() < 3 || s[0] != '0' || (s[1] != 'x' && s[1] != 'X'))
    throw UsageError(std::string(what) + " must be a hex constant like 0x1b");
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s.substr(2), &used, 16);
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": malformed hex constant '" + s + "'");
  }
  if (used != s.size() - 2 || v > 0xffffffffu) throw UsageError(std::string(what) + ": malformed hex constant '" + s + "'");
  return static_cast<std::uint32_t>(v);
}

inline FieldPtr field_from(unsigned n, const std::string& modulus) {
  if (modulus.empty()) return make_field(n);
  return make_field(n, parse_hex(modulus, "--modulus"));
}

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

inline unsigned resolve_jobs(int jobs, std::ostream& err) {
  const unsigned j = jobs > 0 ? static_cast<unsigned>(jobs) : default_jobs();
  err << "jobs: " << j << '\n';
  return j;
}

inline void emit(std::ostream& out, const json& j, const std::string& format) {
  if (format == "csv") {
    write_flat_csv(out, j);
  } else if (format == "human") {
    write_human(out, j);
  } else {
    out << j.dump(2) << '\n';
  }
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  unsigned n = 0;
  std::string modulus;
  std::string fn;
  std::string checks;
  std::string format = "json";
  std::string walsh_out;
  int jobs = 0;
};

inline json build_analysis_report(const AnalyzeArgs& a, unsigned jobs) {
  const FieldPtr field = field_from(a.n, a.modulus);
  const FuncExpr e = parse_expression(a.fn, a.n);
  const VBF f = evaluate(field, e);
  std::vector<std::string> wanted = split_commas(a.checks);
  for (const auto& c : wanted)
    if (std::find(analysis_check_ids().begin(), analysis_check_ids().end(), c) == analysis_check_ids().end())
      throw UsageError("unknown check '" + c + "'");
  auto want = [&](const char* id) { return std::find(wanted.begin(), wanted.end(), id) != wanted.end(); };

  json checks = json::object();
  if (want("apn")) checks["apn"] = is_apn(f, jobs);
  if (want("weak")) {
    if (f.n() < 2) throw UsageError("weak APN is defined for n >= 2");
    checks["weak"] = is_weakly_apn(f);
  }
  if (want("delta")) checks["delta"] = differential_uniformity(f, jobs);
  if (want("spectrum")) checks["spectrum"] = spectrum_json(spectrum(f, jobs));
  if (want("papn0")) checks["papn0"] = is_x0_apn_rodier(f, 0);
  if (want("papn-all")) checks["papn-all"] = papn_report_json(papn_set(f, jobs));
  if (want("moments")) {
    json m = json::object();
    for (unsigned k = 2; k <= 4; ++k) m[std::to_string(k)] = to_decimal(moment_streaming(f, k, jobs).value);
    checks["moments"] = m;
  }
  if (want("walsh-csv")) {
    if (a.walsh_out.empty()) throw UsageError("walsh-csv needs --walsh-out PATH");
    const WalshTable w = walsh_full(f, jobs);
    std::ofstream os(a.walsh_out);
    if (!os) throw std::runtime_error("cannot write " + a.walsh_out);
    write_walsh_csv(os, w);
    checks["walsh-csv"] = json{{"path", a.walsh_out}, {"rows", std::uint64_t{f.size()} * f.size()}};
  }
  return json{{"field", field_json(*field)}, {"function", {{"source", to_string(e)}}}, {"checks", checks}};
}

inline int run_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  const unsigned jobs = resolve_jobs(a.jobs, err);
  emit(out, build_analysis_report(a, jobs), a.format);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct Table1Args {
  unsigned n_min = 1;
  unsigned n_max = 10;
  std::string csv;
  bool json_out = false;
  int jobs = 0;
};

inline int run_table1(const Table1Args& a, std::ostream& out, std::ostream& err) {
  if (a.n_min < 1 || a.n_max > kMaxDegree || a.n_min > a.n_max) throw UsageError("need 1 <= --n-min <= --n-max <= 16");
  const auto rows = table1_scan(a.n_min, a.n_max, resolve_jobs(a.jobs, err));
  if (!a.csv.empty()) {
    if (a.csv == "-") {
      write_table1_csv(out, rows);
    } else {
      std::ofstream os(a.csv);
      if (!os) throw std::runtime_error("cannot write " + a.csv);
      write_table1_csv(os, rows);
    }
  }
  if (a.json_out) out << table1_json(rows).dump(2) << '\n';
  if (a.csv.empty() && !a.json_out) {
    out << "n\texponents\tdelta\n";
    for (const auto& r : rows) {
      std::string e;
      for (std::size_t i = 0; i < r.exponents.size(); ++i) e += (i ? "," : "") + std::to_string(r.exponents[i]);
      out << r.n << '\t' << e << '\t' << r.delta << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ScanArgs {
  unsigned n = 3;
  std::string coeffs = "f2";
  std::string x0 = "0x1";
  std::string modulus;
  std::string format = "json";
  int jobs = 0;
};

inline int run_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  const FieldPtr field = field_from(a.n, a.modulus);
  const CoefficientSet c = a.coeffs == "full" ? CoefficientSet::FullField : CoefficientSet::F2;
  check_scan_feasible(a.n, c);
  const elem x0 = parse_hex(a.x0, "--x0");
  if (c == CoefficientSet::F2 && a.n == 5)
    err << "warning: F2 scan at n = 5 is about " << scan_cost(a.n, c) << " point evaluations\n";
  const ScanSummary s = papn_poly_scan(field, c, x0, resolve_jobs(a.jobs, err));
  if (a.format == "human") {
    out << "n: " << s.n << "\ncoefficients: " << a.coeffs << "\nx0: " << hex_string(s.x0)
        << "\ncandidates: " << s.candidates << "\nhits: " << s.hits << '\n';
    for (const auto& [spec, count] : s.spectra) out << "spectrum " << spectrum_string(spec) << ": " << count << '\n';
    for (auto code : s.samples) out << "sample: " << polynomial_string(scan_code_polynomial(s.n, c, code)) << '\n';
  } else {
    out << scan_summary_json(s).dump(2) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::vector<unsigned> n = {2, 3, 4, 5};
  unsigned trials = 100;
  std::uint64_t seed = 0;
  unsigned exhaustive = 1;
  unsigned exhaustive_max_n = 3;
};

inline int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::uint64_t total = 0;
  std::uint64_t failed = 0;
  std::uint64_t implication_cases = 0;
  std::uint64_t vacuous = 0;
  for (unsigned n : a.n) {
    if (n < 1 || n > 8) throw UsageError("verify supports 1 <= n <= 8");
    SuiteOptions opt;
    opt.n = n;
    opt.trials = a.trials;
    opt.seed = a.seed;
    opt.exhaustive_functions = n <= a.exhaustive_max_n ? a.exhaustive : 0;
    run_identity_suite(opt, [&](const IdentityCheckResult& r) {
      ++total;
      if (!r.pass) {
        ++failed;
        err << "identity mismatch: " << identity_result_json(r).dump() << '\n';
      }
      if (r.vacuous) {
        ++implication_cases;
        vacuous += *r.vacuous;
      }
      out << identity_result_json(r).dump() << '\n';
    });
  }
  json summary{{"total", total},
               {"passed", total - failed},
               {"failed", failed},
               {"seed", a.seed},
               {"trials", a.trials},
               {"n", a.n},
               {"implication_cases", implication_cases},
               {"implication_vacuous", vacuous}};
  out << json{{"summary", summary}}.dump() << '\n';
  return failed == 0 ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------

struct FamilyArgs {
  std::string family;
  unsigned n = 0;
  unsigned n_max = 8;
  bool grid = false;
  unsigned d = 1, r = 1, s = 1, c = 2;
  std::uint64_t a = 0, b = 0, m = 3;
  std::string beta = "0x1";
  std::string shape;
  std::string l = "identity", l1 = "identity", l2 = "identity";
};

inline LinearizedPoly linear_from(const std::string& name, unsigned n) {
  if (name == "identity") return LinearizedPoly::identity(n);
  if (name == "trace") return LinearizedPoly::trace(n);
  throw UsageError("linear map must be identity or trace, got '" + name + "'");
}

inline int run_families(const FamilyArgs& a, std::ostream& out, std::ostream&) {
  std::uint64_t total = 0;
  std::uint64_t mismatches = 0;
  auto report = [&](const FamilyVerdict& v, json extra = json::object()) {
    ++total;
    if (!v.agrees()) ++mismatches;
    json j = family_verdict_json(v);
    for (auto& [k, val] : extra.items()) j[k] = val;
    out << j.dump() << '\n';
  };

  if (a.grid) {
    GridOptions g;
    g.n_min = 2;
    g.n_max = a.n_max;
    family_grid(g, [&](const FamilyVerdict& v) {
      if (a.family.empty() || v.family.rfind(a.family, 0) == 0) report(v);
    });
  } else {
    if (a.n < 1 || a.n > kMaxDegree) throw UsageError("--n must lie in [1, 16]");
    const FieldPtr field = make_field(a.n);
    const elem beta = parse_hex(a.beta, "--beta");
    const std::string& f = a.family;
    if (f == "trace-f" || f == "trace-g") {
      report(trace_class_check(field, a.d, f == "trace-f" ? TraceVariant::F : TraceVariant::G, linear_from(a.l, a.n)));
    } else if (f == "l1l2") {
      report(l1l2_class_check(field, a.d, a.r, linear_from(a.l1, a.n), linear_from(a.l2, a.n)));
    } else if (f == "gold-trace") {
      report(gold_trace_check(field, a.d, a.r));
    } else if (f == "triple") {
      report(triple_class_check(field, a.d, a.s, linear_from(a.l1, a.n), linear_from(a.l2, a.n)));
    } else if (f == "binomial") {
      if (a.shape.empty()) {
        report(binomial_check(field, a.a, a.b, beta));
      } else {
        const std::map<std::string, BinomialCase> shapes = {{"mersenne-mersenne", BinomialCase::MersenneMersenne},
                                                            {"gold-gold", BinomialCase::GoldGold},
                                                            {"gold-mersenne", BinomialCase::GoldMersenne},
                                                            {"mersenne-gold", BinomialCase::MersenneGold}};
        const auto it = shapes.find(a.shape);
        if (it == shapes.end()) throw UsageError("unknown --shape '" + a.shape + "'");
        const auto v = binomial_case_check(field, it->second, a.c, a.d, beta);
        if (!v) throw UsageError("shape parameters give a <= b");
        report(*v);
      }
    } else if (f == "leander-rodier") {
      report(leander_rodier_check(field, a.d, beta));
    } else if (f == "trace-general") {
      if (a.m < 1) throw UsageError("--m must be positive");
      const TraceGeneralVerdict t = trace_general_check(field, a.m, linear_from(a.l, a.n));
      json extra{{"stated_condition", t.stated_condition}, {"root_condition", t.root_condition}};
      if (t.stated_index) extra["stated_index"] = *t.stated_index;
      report(t.verdict, extra);
    } else if (f == "monomial") {
      if (a.m < 1) throw UsageError("--m must be positive");
      const FamilyVerdict v = monomial_check(field, a.m);
      const MinpolyForms forms = monomial_minpoly_forms(*field, reduce_exponent(a.m, a.n));
      report(v, json{{"minpoly_forms",
                      {{"derived", forms.derived}, {"indexed", forms.indexed}, {"composed", forms.composed}}},
                     {"minpoly_forms_diverge", forms.indexed != v.observed || forms.composed != v.observed}});
    } else {
      throw UsageError("unknown family '" + f + "'");
    }
  }
  out << json{{"summary", {{"verdicts", total}, {"mismatches", mismatches}}}}.dump() << '\n';
  return mismatches == 0 ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------

struct ConjectureArgs {
  std::string catalog = "cube";
  unsigned n_min = 3;
  unsigned n_max = 7;
  unsigned direct_max_n = 5;
  int jobs = 0;
};

inline int run_conjecture(const ConjectureArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n_min < 2 || a.n_max > 12 || a.n_min > a.n_max) throw UsageError("need 2 <= --n-min <= --n-max <= 12");
  const auto catalog = conjecture_catalog(a.catalog, a.n_min, a.n_max);
  const auto reports = conjecture_scan(catalog, resolve_jobs(a.jobs, err), a.direct_max_n);
  std::uint64_t cex = 0;
  std::uint64_t disagreements = 0;
  for (const auto& r : reports) {
    cex += r.counterexamples.size();
    disagreements += r.cross_check_disagreements;
    if (!r.counterexamples.empty())
      err << "x0-APN modification found for " << r.name << " at n = " << r.n << '\n';
    out << conjecture_json(r).dump() << '\n';
  }
  out << json{{"summary", {{"catalog", a.catalog}, {"counterexamples", cex}, {"cross_check_disagreements",
                                                                             disagreements}}}}
             .dump()
      << '\n';
  return disagreements == 0 ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------

inline int run_field(unsigned n, const std::string& modulus, std::ostream& out) {
  const FieldPtr field = field_from(n, modulus);
  json j = field_json(*field);
  j["generator"] = hex_string(field->generator());
  j["generator_order"] = field->order();
  out << j.dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differential and spectral analysis of functions over GF(2^n)", "papnlab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  const std::vector<std::string> formats = {"json", "csv", "human"};

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Analyze one function");
  analyze->add_option("--n", an.n, "Field degree")->required()->check(CLI::Range(1u, kMaxDegree));
  analyze->add_option("--modulus", an.modulus, "Primitive modulus override, hex");
  analyze->add_option("--fn", an.fn, "Function expression, e.g. \"x^3 + Tr(x^9)\"")->required();
  analyze->add_option("--checks", an.checks, "Comma list: apn,weak,delta,spectrum,papn0,papn-all,moments,walsh-csv");
  analyze->add_option("--format", an.format, "Output format")->check(CLI::IsMember(formats));
  analyze->add_option("--walsh-out", an.walsh_out, "CSV path for the walsh-csv check");
  analyze->add_option("--jobs", an.jobs, "Worker threads (default: PAPNLAB_JOBS or all cores)");

  Table1Args t1;
  auto* table1 = app.add_subcommand("table1", "Power maps that are 0-APN but not APN");
  table1->add_option("--n-min", t1.n_min, "Smallest n");
  table1->add_option("--n-max", t1.n_max, "Largest n");
  auto* csv_opt = table1->add_option("--csv", t1.csv, "Write CSV to PATH ('-' for stdout)");
  table1->add_flag("--json", t1.json_out, "Print JSON")->excludes(csv_opt);
  table1->add_option("--jobs", t1.jobs, "Worker threads");

  ScanArgs sc;
  auto* scan = app.add_subcommand("papn-scan", "Count x0-APN but not APN polynomials");
  scan->add_option("--n", sc.n, "Field degree")->required()->check(CLI::Range(1u, kMaxDegree));
  scan->add_option("--coeffs", sc.coeffs, "Coefficient set")->check(CLI::IsMember({"f2", "full"}));
  scan->add_option("--x0", sc.x0, "Point x0, hex (default 0x1)");
  scan->add_option("--modulus", sc.modulus, "Primitive modulus override, hex");
  scan->add_option("--format", sc.format, "Output format")->check(CLI::IsMember({"json", "human"}));
  scan->add_option("--jobs", sc.jobs, "Worker threads");

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "Run the moment identity suite on seeded random functions");
  verify->add_option("--n", vf.n, "Field degrees")->delimiter(',');
  verify->add_option("--trials", vf.trials, "Random trials per n");
  verify->add_option("--seed", vf.seed, "Run seed");
  verify->add_option("--exhaustive", vf.exhaustive, "Functions tested at every (x0, eps)");
  verify->add_option("--exhaustive-max-n", vf.exhaustive_max_n, "Largest n for the exhaustive pass");

  FamilyArgs fa;
  auto* families = app.add_subcommand("families", "Check family criteria against direct scans");
  families->add_option("--family", fa.family, "trace-f, trace-g, trace-general, l1l2, gold-trace, triple, binomial, leander-rodier, monomial");
  families->add_option("--n", fa.n, "Field degree");
  families->add_flag("--grid", fa.grid, "Run every family over the default parameter grid");
  families->add_option("--n-max", fa.n_max, "Largest n for --grid")->check(CLI::Range(2u, 10u));
  families->add_option("--d", fa.d, "Parameter d");
  families->add_option("--r", fa.r, "Parameter r");
  families->add_option("--s", fa.s, "Parameter s");
  families->add_option("--c", fa.c, "Parameter c (binomial shapes)");
  families->add_option("--a", fa.a, "Binomial exponent a");
  families->add_option("--b", fa.b, "Binomial exponent b");
  families->add_option("--m", fa.m, "Monomial exponent");
  families->add_option("--beta", fa.beta, "Coefficient beta, hex");
  families->add_option("--shape", fa.shape, "mersenne-mersenne, gold-gold, gold-mersenne, mersenne-gold");
  families->add_option("--L", fa.l, "identity or trace");
  families->add_option("--L1", fa.l1, "identity or trace");
  families->add_option("--L2", fa.l2, "identity or trace");

  ConjectureArgs cj;
  auto* conjecture = app.add_subcommand("conjecture", "Search APN maps for x0-APN single-point modifications");
  conjecture->add_option("--catalog", cj.catalog, "cube or cube-trace")->check(CLI::IsMember({"cube", "cube-trace"}));
  conjecture->add_option("--n-min", cj.n_min, "Smallest n");
  conjecture->add_option("--n-max", cj.n_max, "Largest n");
  conjecture->add_option("--direct-max-n", cj.direct_max_n, "Largest n for the direct cross-check");
  conjecture->add_option("--jobs", cj.jobs, "Worker threads");

  unsigned field_n = 0;
  std::string field_modulus;
  auto* field = app.add_subcommand("field", "Describe GF(2^n)");
  field->add_option("--n", field_n, "Field degree")->required()->check(CLI::Range(1u, kMaxDegree));
  field->add_option("--modulus", field_modulus, "Primitive modulus override, hex");

  std::vector<std::string> argv_store = {"papnlab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(an, out, err);
    if (*table1) return run_table1(t1, out, err);
    if (*scan) return run_scan(sc, out, err);
    if (*verify) return run_verify(vf, out, err);
    if (*families) {
      if (!fa.grid && fa.family.empty()) throw UsageError("--family is required unless --grid is given");
      if (!fa.grid && fa.n == 0) throw UsageError("--n is required unless --grid is given");
      return run_families(fa, out, err);
    }
    if (*conjecture) return run_conjecture(cj, out, err);
    if (*field) return run_field(field_n, field_modulus, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace papnlab::cli
