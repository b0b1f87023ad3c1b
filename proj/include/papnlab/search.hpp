#pragma once

// Exhaustive searches: power maps that are 0-APN but not APN, polynomial
// scans for x0-APN-but-not-APN functions, and the modification probe sweep.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "papnlab/differential.hpp"
#include "papnlab/expr.hpp"
#include "papnlab/families.hpp"
#include "papnlab/identities.hpp"
#include "papnlab/parallel.hpp"
#include "papnlab/random.hpp"

namespace papnlab {

// ---------------------------------------------------------------------------
// Power maps

struct Table1Row {
  unsigned n = 0;
  std::vector<std::uint32_t> exponents;  // coset leaders, ascending
  std::uint32_t delta = 0;
  bool operator==(const Table1Row&) const = default;
};

/// Differential uniformity of x^e from the single row a = 1: for a power map
/// Delta(a, b) = Delta(1, b / a^e).
inline std::uint32_t power_map_uniformity(const VBF& f) {
  std::vector<std::uint32_t> row(f.size());
  ddt_row(f.table(), 1, std::span(row));
  return *std::max_element(row.begin(), row.end());
}

/// Coset leaders e in [1, 2^n - 2] with x^e 0-APN and not APN, grouped by
/// Delta; groups ordered by their smallest exponent.
inline std::vector<Table1Row> table1_scan(unsigned n_min, unsigned n_max, unsigned jobs = 1) {
  if (n_min < 1 || n_max > kMaxDegree) throw std::invalid_argument("table1 range must lie in [1, 16]");
  std::vector<Table1Row> rows;
  for (unsigned n = n_min; n <= n_max; ++n) {
    const FieldPtr field = make_field(n);
    std::vector<std::uint32_t> leaders;
    for (const auto& c : cyclotomic_cosets(n)) leaders.push_back(c.representative);
    std::vector<std::uint32_t> delta(leaders.size(), 0);  // 0 = not a hit
    parallel_for(leaders.size(), jobs, [&](std::size_t i) {
      const std::uint32_t e = leaders[i];
      if (!monomial_0apn_direct(*field, e).zero_apn) return;
      const VBF f = from_power(field, e);
      const std::uint32_t d = power_map_uniformity(f);
      if (d <= 2) return;
      if (!is_x0_apn_derivative(f, 0)) throw std::logic_error("0-APN hit failed re-verification");
      delta[i] = d;
    });
    std::map<std::uint32_t, std::size_t> group;  // delta -> row index for this n
    for (std::size_t i = 0; i < leaders.size(); ++i) {
      if (delta[i] == 0) continue;
      auto it = group.find(delta[i]);
      if (it == group.end()) {
        group.emplace(delta[i], rows.size());
        rows.push_back(Table1Row{n, {leaders[i]}, delta[i]});
      } else {
        rows[it->second].exponents.push_back(leaders[i]);
      }
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Polynomial scans

enum class CoefficientSet { F2, FullField };

struct ScanSummary {
  unsigned n = 0;
  CoefficientSet coefficients = CoefficientSet::F2;
  elem x0 = 1;
  std::uint64_t candidates = 0;
  std::uint64_t hits = 0;
  std::map<DifferentialSpectrum, std::uint64_t> spectra;
  /// Smallest coefficient codes among the hits (see scan_code_polynomial).
  std::vector<std::uint64_t> samples;
};

/// Raw work estimate (candidates times point evaluations per x0 test).
inline double scan_cost(unsigned n, CoefficientSet c) {
  const double s = static_cast<double>(1u << n);
  const double candidates = std::pow(2.0, c == CoefficientSet::F2 ? s : n * s);
  return candidates * s * s;
}

inline void check_scan_feasible(unsigned n, CoefficientSet c) {
  const bool ok = c == CoefficientSet::F2 ? (n >= 1 && n <= 5) : n == 3;
  if (!ok) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", scan_cost(n, c));
    throw std::invalid_argument(std::string("infeasible scan: ") +
                                (c == CoefficientSet::F2 ? "F2 mode needs n <= 5" : "full-field mode needs n = 3") +
                                " (estimated " + buf + " point evaluations)");
  }
}

/// Polynomial for a scan code: in F2 mode bit e selects x^e; in full-field
/// mode bits [n e, n e + n) hold the coefficient of x^e.
inline UnivariatePoly scan_code_polynomial(unsigned n, CoefficientSet c, std::uint64_t code) {
  UnivariatePoly p;
  const std::uint32_t s = 1u << n;
  for (std::uint32_t e = 0; e < s; ++e) {
    const elem coeff = c == CoefficientSet::F2 ? static_cast<elem>((code >> e) & 1u)
                                               : static_cast<elem>((code >> (n * e)) & (s - 1));
    if (coeff != 0) p.terms.push_back({e, coeff});
  }
  return p;
}

/// Text form, highest degree first, e.g. "x^7 + x^6" or "0x3*x^5 + 0x1".
inline std::string polynomial_string(const UnivariatePoly& p) {
  if (p.terms.empty()) return "0x0";
  std::string out;
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (it->exponent == 0) {
      out += detail::hex(it->coefficient);
    } else {
      out += detail::mono_string({it->coefficient, it->exponent});
    }
  }
  return out;
}

namespace detail {

inline constexpr std::size_t kScanSamples = 8;

struct ShardResult {
  std::uint64_t hits = 0;
  std::map<DifferentialSpectrum, std::uint64_t> spectra;
  std::vector<std::uint64_t> samples;
};

}  // namespace detail

/// Counts the polynomials with coefficients in {0,1} (or in GF(2^n) for the
/// full-field mode, n = 3) that are x0-APN but not APN. Candidates are walked
/// in Gray-code order so each step XORs one precomputed monomial table.
inline ScanSummary papn_poly_scan(const FieldPtr& field, CoefficientSet coeffs, elem x0, unsigned jobs = 1) {
  const Field& fld = *field;
  const unsigned n = fld.n();
  check_scan_feasible(n, coeffs);
  if (x0 >= fld.size()) throw std::invalid_argument("x0 outside GF(2^n)");
  const std::uint32_t s = fld.size();
  const unsigned bits = coeffs == CoefficientSet::F2 ? s : n * s;

  // delta[k]: the table added when code bit k flips.
  std::vector<std::array<std::uint8_t, 32>> delta(bits);
  for (unsigned k = 0; k < bits; ++k) {
    const std::uint32_t e = coeffs == CoefficientSet::F2 ? k : k / n;
    const elem c = coeffs == CoefficientSet::F2 ? 1 : elem{1} << (k % n);
    delta[k].fill(0);
    for (elem x = 0; x < s; ++x) delta[k][x] = static_cast<std::uint8_t>(fld.mul(c, fld.pow(x, e)));
  }

  const unsigned shard_bits = std::min(bits, 8u);
  const unsigned low_bits = bits - shard_bits;
  const std::size_t shards = std::size_t{1} << shard_bits;
  std::vector<detail::ShardResult> results(shards);

  parallel_for(shards, jobs, [&](std::size_t shard) {
    detail::ShardResult& res = results[shard];
    std::array<std::uint8_t, 32> t{};
    const std::uint64_t high = static_cast<std::uint64_t>(shard) << low_bits;
    for (unsigned k = low_bits; k < bits; ++k)
      if ((high >> k) & 1u)
        for (elem x = 0; x < s; ++x) t[x] ^= delta[k][x];
    const std::span<const std::uint8_t> view(t.data(), s);
    std::uint64_t code = high;
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    for (std::uint64_t i = 0; i < steps; ++i) {
      if (i != 0) {
        const unsigned k = static_cast<unsigned>(std::countr_zero(i));
        for (elem x = 0; x < s; ++x) t[x] ^= delta[k][x];
        code ^= std::uint64_t{1} << k;
      }
      if (find_rodier_violation(view, x0)) continue;
      if (is_apn(view)) continue;
      if (find_derivative_violation(view, x0)) throw std::logic_error("scan hit failed re-verification");
      ++res.hits;
      ++res.spectra[spectrum(view)];
      auto pos = std::lower_bound(res.samples.begin(), res.samples.end(), code);
      if (res.samples.size() < detail::kScanSamples || pos != res.samples.end()) {
        res.samples.insert(pos, code);
        if (res.samples.size() > detail::kScanSamples) res.samples.pop_back();
      }
    }
  });

  ScanSummary out;
  out.n = n;
  out.coefficients = coeffs;
  out.x0 = x0;
  out.candidates = std::uint64_t{1} << bits;
  for (const auto& r : results) {
    out.hits += r.hits;
    for (const auto& [spec, count] : r.spectra) out.spectra[spec] += count;
    out.samples.insert(out.samples.end(), r.samples.begin(), r.samples.end());
  }
  std::sort(out.samples.begin(), out.samples.end());
  if (out.samples.size() > detail::kScanSamples) out.samples.resize(detail::kScanSamples);
  return out;
}

// ---------------------------------------------------------------------------
// Modification probe sweep

struct CatalogEntry {
  std::string name;  // expression text
  VBF function;
};

/// Named catalogs: "cube" (x^3) and "cube-trace" (x^3 + Tr(x^9)), n_min..n_max.
inline std::vector<CatalogEntry> conjecture_catalog(const std::string& name, unsigned n_min, unsigned n_max) {
  std::string src;
  if (name == "cube") {
    src = "x^3";
  } else if (name == "cube-trace") {
    src = "x^3 + Tr(x^9)";
  } else {
    throw std::invalid_argument("unknown catalog '" + name + "' (expected cube or cube-trace)");
  }
  std::vector<CatalogEntry> out;
  for (unsigned n = n_min; n <= n_max; ++n) {
    const FieldPtr field = make_field(n);
    const VBF cube = from_any_power(field, 3);
    out.push_back({src, name == "cube" ? cube : cube + trace_of(from_any_power(field, 9))});
  }
  return out;
}

struct ConjectureCounterexample {
  elem x0 = 0;
  elem eps = 0;
};

struct ConjectureEntryReport {
  std::string name;
  unsigned n = 0;
  std::uint32_t points = 0;
  std::vector<ConjectureCounterexample> counterexamples;  // x0-APN modifications
  /// Points whose probe disagreed with directly testing every modification.
  std::uint32_t cross_check_disagreements = 0;
  bool cross_checked = false;
};

/// For every catalog entry and x0: the probe's missing values are exactly the
/// eps whose modification stays x0-APN. Up to direct_max_n every eps is also
/// tested directly.
inline std::vector<ConjectureEntryReport> conjecture_scan(const std::vector<CatalogEntry>& catalog, unsigned jobs = 1,
                                                          unsigned direct_max_n = 5) {
  std::vector<ConjectureEntryReport> out;
  for (const auto& entry : catalog) {
    const VBF& f = entry.function;
    if (!is_apn(f, jobs)) throw std::invalid_argument("catalog entry '" + entry.name + "' is not APN");
    ConjectureEntryReport rep;
    rep.name = entry.name;
    rep.n = f.n();
    rep.points = f.size();
    rep.cross_checked = f.n() <= direct_max_n;
    std::vector<std::vector<ConjectureCounterexample>> per_x0(f.size());
    std::vector<std::uint8_t> disagree(f.size(), 0);
    parallel_for(f.size(), jobs, [&](std::size_t i) {
      const elem x0 = static_cast<elem>(i);
      const ConjectureProbe probe = conjecture_probe(f, x0);
      for (elem eps : probe.missing)
        if (eps != 0) per_x0[i].push_back({x0, eps});
      if (!rep.cross_checked) return;
      std::vector<elem> direct;
      for (elem eps = 1; eps < f.size(); ++eps)
        if (is_x0_apn_rodier(modify_at(f, x0, eps), x0)) direct.push_back(eps);
      std::vector<elem> probed;
      for (const auto& c : per_x0[i]) probed.push_back(c.eps);
      if (probed != direct) disagree[i] = 1;
    });
    for (auto& v : per_x0) rep.counterexamples.insert(rep.counterexamples.end(), v.begin(), v.end());
    for (auto d : disagree) rep.cross_check_disagreements += d;
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace papnlab
