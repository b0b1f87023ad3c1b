// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "oracles.hpp"

using namespace papnlab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<oracle::u32> table_of(const VBF& f) { return {f.table().begin(), f.table().end()}; }

std::string spectrum_text(const DifferentialSpectrum& s) { return spectrum_string(s); }

// ---------------------------------------------------------------------------

Outcome table1_reproduction() {
  std::ostringstream out, err;
  const int rc = cli::run({"table1", "--n-min", "1", "--n-max", "10", "--csv", "-"}, out, err);
  const std::string expected =
      "n,exponents,delta\n"
      "6,27,12\n"
      "7,7;21;31;55,6\n"
      "7,19;47,4\n"
      "8,15;45,14\n"
      "8,21;111,4\n"
      "8,51,50\n"
      "8,63,6\n"
      "9,7;21;35;61;63;83;91;111;117;119;175,6\n"
      "9,41;187,8\n"
      "9,45;125,4\n"
      "10,15;27;45;75;111;117;147;189;207;255,6\n"
      "10,21;69;87;237;375,4\n"
      "10,51,8\n"
      "10,93,92\n"
      "10,105;351,10\n"
      "10,231;363;495,42\n"
      "10,447,12\n";
  const bool ok = rc == 0 && out.str() == expected;
  return {ok, ok ? "17 rows for n = 6..10, none for n <= 5, minimal coset leaders"
                 : "table differs:\n" + out.str()};
}

Outcome binary_coefficient_counts() {
  const ScanSummary s3 = papn_poly_scan(make_field(3), CoefficientSet::F2, 1, default_jobs());
  const ScanSummary s4 = papn_poly_scan(make_field(4), CoefficientSet::F2, 1, default_jobs());
  const DifferentialSpectrum a = {{0, 31}, {2, 22}, {4, 3}};
  const DifferentialSpectrum b = {{0, 42}, {2, 7}, {6, 7}};
  const std::map<DifferentialSpectrum, std::uint64_t> want = {{a, 48}, {b, 16}};
  const bool ok = s3.hits == 64 && s3.spectra == want && s4.hits == 6944;
  std::string hist;
  for (const auto& [spec, count] : s3.spectra) hist += " " + std::to_string(count) + "x" + spectrum_text(spec);
  return {ok, "n=3 hits " + std::to_string(s3.hits) + hist + "; n=4 hits " + std::to_string(s4.hits)};
}

Outcome full_field_count() {
  const ScanSummary s = papn_poly_scan(make_field(3), CoefficientSet::FullField, 1, default_jobs());
  return {s.hits > 6000000, std::to_string(s.hits) + " of " + std::to_string(s.candidates) + " polynomials"};
}

Outcome spot_claims() {
  std::string detail;
  bool ok = true;
  auto note = [&](bool cond, const std::string& what) {
    ok = ok && cond;
    detail += (detail.empty() ? "" : "; ") + what + (cond ? " ok" : " MISMATCH");
  };

  {
    const VBF f = from_power(make_field(11), 7);
    const bool zero_apn = is_x0_apn_rodier(f, 0);
    const bool weak = is_weakly_apn(f);
    const std::size_t img = oracle::min_derivative_image(table_of(f));
    note(zero_apn, "x^7 n=11 0-APN");
    note(!weak, "x^7 n=11 not weakly APN (smallest derivative image " + std::to_string(img) + ", threshold " +
                    std::to_string((1u << 9) + 1) + ")");
  }
  for (unsigned n : {4u, 6u}) {
    const auto fld = make_field(n);
    const VBF f = from_power(fld, fld->order() - 1);
    note(is_weakly_apn(f), "inverse n=" + std::to_string(n) + " weakly APN");
    note(papn_set(f).none(), "inverse n=" + std::to_string(n) + " x0-APN nowhere");
  }
  {
    const auto fld = make_field(5);
    note(is_x0_apn_rodier(from_expression(fld, "x^9 + Tr(x^3)"), 0), "x^9+Tr(x^3) n=5 0-APN");
  }
  {
    const VBF f = from_expression(make_field(3), "x^7 + x^6");
    note(is_x0_apn_rodier(f, 1) && !is_apn(f), "x^7+x^6 n=3 1-APN and not APN");
  }
  return {ok, detail};
}

Outcome theorem_sweeps() {
  std::uint64_t power_checks = 0, power_mismatch = 0;
  for (unsigned n = 2; n <= 10; ++n) {
    const auto fld = make_field(n);
    for (unsigned d = 1; d <= 2 * n + 1; ++d) {
      power_checks += 2;
      power_mismatch += !gold_power_check(fld, d).agrees();
      power_mismatch += !mersenne_power_check(fld, d).agrees();
    }
  }

  const PowerOneApnReport one = check_power_one_apn(8, default_jobs());

  std::uint64_t gold_maps = 0, quad_mismatch = 0;
  for (unsigned n = 2; n <= 8; ++n)
    for (unsigned d = 1; d < n; ++d) {
      ++gold_maps;
      quad_mismatch += !check_quadratic_prop(from_any_power(make_field(n), (1u << d) + 1), default_jobs()).consistent;
    }

  std::map<std::string, std::uint64_t> mismatch, degenerate_mismatch, predicted;
  std::uint64_t verdicts = 0;
  GridOptions g;
  g.n_max = 8;
  family_grid(g, [&](const FamilyVerdict& v) {
    ++verdicts;
    if (v.predicted) ++predicted[v.family];
    if (v.agrees()) return;
    ++mismatch[v.family];
    if (v.nondegenerate && !*v.nondegenerate) ++degenerate_mismatch[v.family];
  });

  std::uint64_t grid_mismatch = 0, grid_nondegenerate_mismatch = 0;
  std::string per_family;
  for (const auto& [fam, count] : mismatch) {
    grid_mismatch += count;
    grid_nondegenerate_mismatch += count - degenerate_mismatch[fam];
    per_family += " " + fam + "=" + std::to_string(count) + "/" + std::to_string(predicted[fam]);
  }

  const bool ok = power_mismatch == 0 && one.violations.empty() && quad_mismatch == 0 && grid_mismatch == 0;
  std::string detail = "gcd criteria " + std::to_string(power_mismatch) + "/" + std::to_string(power_checks) +
                       " mismatches; power 1-APN sweep " + std::to_string(one.violations.size()) + " violations over " +
                       std::to_string(one.exponents_checked) + " exponents; Gold all-or-nothing " +
                       std::to_string(quad_mismatch) + "/" + std::to_string(gold_maps) + "; family grid " +
                       std::to_string(grid_mismatch) + " mismatches in " + std::to_string(verdicts) + " verdicts";
  if (grid_mismatch)
    detail += " (mismatches/predictions:" + per_family + "; " + std::to_string(grid_nondegenerate_mismatch) +
              " where some alpha outside {0,1} has h_a(alpha) h_b(alpha) != 0)";
  return {ok, detail};
}

Outcome identity_suite() {
  std::uint64_t total = 0, failed = 0;
  std::map<std::string, std::uint64_t> per_id;
  for (unsigned n = 2; n <= 5; ++n) {
    SuiteOptions opt;
    opt.n = n;
    opt.trials = 100;
    opt.seed = 0;
    opt.exhaustive_functions = n <= 3 ? 1 : 0;
    run_identity_suite(opt, [&](const IdentityCheckResult& r) {
      ++total;
      ++per_id[r.id];
      if (!r.pass) {
        ++failed;
        std::fprintf(stderr, "identity failure: %s n=%u\n", r.id.c_str(), r.n);
      }
    });
  }
  return {failed == 0, std::to_string(total - failed) + "/" + std::to_string(total) + " exact checks over " +
                           std::to_string(per_id.size()) + " identities"};
}

Outcome cross_oracle() {
  std::uint64_t walsh_cases = 0, walsh_bad = 0, papn_cases = 0, papn_bad = 0;
  auto walsh_check = [&](const VBF& f) {
    ++walsh_cases;
    const WalshTable w = walsh_full(f);
    const auto ref = oracle::walsh(table_of(f), f.n(), f.field().modulus());
    for (elem b = 0; b < f.size(); ++b)
      for (elem a = 0; a < f.size(); ++a)
        if (w(a, b) != ref[b * f.size() + a]) {
          ++walsh_bad;
          return;
        }
  };
  auto papn_check = [&](const VBF& f) {
    for (elem x0 = 0; x0 < f.size(); ++x0) {
      ++papn_cases;
      papn_bad += is_x0_apn_rodier(f, x0) != is_x0_apn_derivative(f, x0);
    }
  };
  auto every_function = [](unsigned n, const std::function<void(const VBF&)>& fn) {
    const auto fld = make_field(n);
    const std::uint64_t s = fld->size();
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < s; ++i) total *= s;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<elem> t(s);
      std::uint64_t c = code;
      for (auto& v : t) {
        v = static_cast<elem>(c % s);
        c /= s;
      }
      fn(VBF(fld, std::move(t)));
    }
  };
  every_function(1, walsh_check);
  every_function(2, walsh_check);
  every_function(2, papn_check);
  for (unsigned n : {3u, 4u}) {
    const auto fld = make_field(n);
    Rng rng(mix_seed(7, n));
    for (int i = 0; i < (n == 3 ? 2000 : 300); ++i) walsh_check(random_function(fld, rng));
    for (int i = 0; i < 10000; ++i) papn_check(random_function(fld, rng));
  }
  return {walsh_bad == 0 && papn_bad == 0,
          "Walsh " + std::to_string(walsh_bad) + " disagreements in " + std::to_string(walsh_cases) +
              " functions (all for n <= 2); x0-APN tests " + std::to_string(papn_bad) + " disagreements in " +
              std::to_string(papn_cases) + " (function, x0) cases"};
}

Outcome conjecture_evidence() {
  std::uint64_t entries = 0, cex = 0, disagreements = 0;
  auto sweep = [&](const char* name, unsigned n_max) {
    for (const auto& r : conjecture_scan(conjecture_catalog(name, 3, n_max), default_jobs())) {
      ++entries;
      cex += r.counterexamples.size();
      disagreements += r.cross_check_disagreements;
      for (const auto& c : r.counterexamples)
        std::fprintf(stderr, "counterexample: %s n=%u x0=%u eps=%u\n", r.name.c_str(), r.n, c.x0, c.eps);
    }
  };
  sweep("cube", 8);
  sweep("cube-trace", 7);
  return {cex == 0 && disagreements == 0, std::to_string(cex) + " x0-APN modifications across " +
                                              std::to_string(entries) + " functions; probe/direct disagreements " +
                                              std::to_string(disagreements)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"table of 0-APN non-APN power maps, n <= 10", table1_reproduction},
      {"binary-coefficient polynomial counts, n = 3 and 4", binary_coefficient_counts},
      {"full-field polynomial count, n = 3", full_field_count},
      {"spot claims on individual functions", spot_claims},
      {"criterion sweeps over exponent and family grids", theorem_sweeps},
      {"exact moment identity suite", identity_suite},
      {"cross-oracle coherence", cross_oracle},
      {"APN modification evidence", conjecture_evidence},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("%s %zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
