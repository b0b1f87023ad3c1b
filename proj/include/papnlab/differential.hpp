#pragma once

// Difference distribution tables, APN / weakly-APN tests, and the two
// equivalent x0-APN tests (derivative form and Rodier form).
//
// The table-level routines are templates over the table element type so the
// exhaustive scans can run them on small stack tables.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "papnlab/parallel.hpp"
#include "papnlab/vbf.hpp"

namespace papnlab {

inline constexpr unsigned kMaxMaterializedDdt = 12;

/// counts(a, b) = #{x : F(x + a) + F(x) = b}.
class DDTable {
 public:
  DDTable(unsigned n, std::vector<std::uint32_t> counts) : n_(n), counts_(std::move(counts)) {}

  unsigned n() const noexcept { return n_; }
  std::uint32_t size() const noexcept { return 1u << n_; }
  std::uint32_t operator()(elem a, elem b) const noexcept { return counts_[static_cast<std::size_t>(a) * size() + b]; }
  std::span<const std::uint32_t> row(elem a) const noexcept {
    return std::span<const std::uint32_t>(counts_).subspan(static_cast<std::size_t>(a) * size(), size());
  }

 private:
  unsigned n_;
  std::vector<std::uint32_t> counts_;
};

/// Multiplicity of each value among {Delta_F(a,b) : a != 0}.
using DifferentialSpectrum = std::map<std::uint32_t, std::uint64_t>;

struct DerivativeWitness {
  elem a = 0;
  elem x = 0;  // a third solution of D_aF(x) = D_aF(x0)
  bool operator==(const DerivativeWitness&) const = default;
};

struct RodierWitness {
  elem u = 0;
  elem v = 0;  // off-curve pair with F(x0)+F(u)+F(v)+F(x0+u+v) = 0
  bool operator==(const RodierWitness&) const = default;
};

template <typename T>
void ddt_row(std::span<const T> t, std::size_t a, std::span<std::uint32_t> out) {
  std::fill(out.begin(), out.end(), 0u);
  for (std::size_t x = 0; x < t.size(); ++x) ++out[t[x ^ a] ^ t[x]];
}

inline DDTable ddt(const VBF& f, unsigned jobs = 1) {
  if (f.n() > kMaxMaterializedDdt) throw std::invalid_argument("full DDT limited to n <= 12");
  const std::size_t s = f.size();
  std::vector<std::uint32_t> counts(s * s);
  parallel_for(s, jobs, [&](std::size_t a) { ddt_row(f.table(), a, std::span(counts).subspan(a * s, s)); });
  return DDTable(f.n(), std::move(counts));
}

/// max over a != 0 and all b of Delta_F(a,b); rows are streamed.
template <typename T>
std::uint32_t differential_uniformity(std::span<const T> t) {
  std::vector<std::uint32_t> row(t.size());
  std::uint32_t best = 0;
  for (std::size_t a = 1; a < t.size(); ++a) {
    ddt_row(t, a, std::span(row));
    best = std::max(best, *std::max_element(row.begin(), row.end()));
  }
  return best;
}

inline std::uint32_t differential_uniformity(const VBF& f, unsigned jobs = 1) {
  const std::size_t s = f.size();
  std::vector<std::uint32_t> per_a(s, 0);
  parallel_chunks(s - 1, jobs, [&](std::size_t lo, std::size_t hi) {
    std::vector<std::uint32_t> row(s);
    for (std::size_t a = lo + 1; a <= hi; ++a) {
      ddt_row(f.table(), a, std::span(row));
      per_a[a] = *std::max_element(row.begin(), row.end());
    }
  });
  return *std::max_element(per_a.begin(), per_a.end());
}

/// True iff no nonzero derivative takes a value more than twice.
template <typename T>
bool is_apn(std::span<const T> t) {
  const std::size_t s = t.size();
  std::vector<std::uint8_t> hits(s);
  for (std::size_t a = 1; a < s; ++a) {
    std::fill(hits.begin(), hits.end(), 0);
    for (std::size_t x = 0; x < s; ++x)
      if (++hits[t[x ^ a] ^ t[x]] > 2) return false;
  }
  return true;
}

inline bool is_apn(const VBF& f, unsigned jobs = 1) { return differential_uniformity(f, jobs) == 2; }

template <typename T>
DifferentialSpectrum spectrum(std::span<const T> t) {
  DifferentialSpectrum out;
  std::vector<std::uint32_t> row(t.size());
  for (std::size_t a = 1; a < t.size(); ++a) {
    ddt_row(t, a, std::span(row));
    for (auto v : row) ++out[v];
  }
  return out;
}

inline DifferentialSpectrum spectrum(const VBF& f, unsigned jobs = 1) {
  const std::size_t s = f.size();
  std::vector<DifferentialSpectrum> parts(s);
  parallel_chunks(s - 1, jobs, [&](std::size_t lo, std::size_t hi) {
    std::vector<std::uint32_t> row(s);
    for (std::size_t a = lo + 1; a <= hi; ++a) {
      ddt_row(f.table(), a, std::span(row));
      for (auto v : row) ++parts[a][v];
    }
  });
  DifferentialSpectrum out;
  for (const auto& p : parts)
    for (auto [v, m] : p) out[v] += m;
  return out;
}

// ---------------------------------------------------------------------------
// x0-APN

/// First (a, x), lexicographically, with a != 0, x not in {x0, x0+a} and
/// D_aF(x) = D_aF(x0); none iff F is x0-APN.
template <typename T>
std::optional<DerivativeWitness> find_derivative_violation(std::span<const T> t, elem x0) {
  const std::size_t s = t.size();
  for (std::size_t a = 1; a < s; ++a) {
    const auto target = t[x0 ^ a] ^ t[x0];
    for (std::size_t x = 0; x < s; ++x) {
      if ((t[x ^ a] ^ t[x]) != target) continue;
      if (x == x0 || x == (x0 ^ a)) continue;
      return DerivativeWitness{static_cast<elem>(a), static_cast<elem>(x)};
    }
  }
  return std::nullopt;
}

/// First off-curve (u, v), lexicographically, with (x0+u)(x0+v)(u+v) != 0 and
/// F(x0)+F(u)+F(v)+F(x0+u+v) = 0; none iff F is x0-APN.
template <typename T>
std::optional<RodierWitness> find_rodier_violation(std::span<const T> t, elem x0) {
  const std::size_t s = t.size();
  const auto fx0 = t[x0];
  // (u,v) and (v,u) are both solutions, so the first hit has u < v.
  for (std::size_t u = 0; u < s; ++u) {
    if (u == x0) continue;
    const auto base = fx0 ^ t[u];
    for (std::size_t v = u + 1; v < s; ++v) {
      if (v == x0) continue;
      if ((base ^ t[v] ^ t[x0 ^ u ^ v]) == 0) return RodierWitness{static_cast<elem>(u), static_cast<elem>(v)};
    }
  }
  return std::nullopt;
}

inline bool is_x0_apn_derivative(const VBF& f, elem x0) { return !find_derivative_violation(f.table(), x0); }
inline bool is_x0_apn_rodier(const VBF& f, elem x0) { return !find_rodier_violation(f.table(), x0); }

struct PapnFailure {
  elem x0 = 0;
  DerivativeWitness derivative;
  RodierWitness rodier;
};

struct PapnReport {
  std::vector<std::uint8_t> verdict;  // verdict[x0] = 1 iff F is x0-APN
  std::vector<PapnFailure> failures;  // sorted by x0

  bool all() const { return std::all_of(verdict.begin(), verdict.end(), [](auto v) { return v != 0; }); }
  bool none() const { return std::none_of(verdict.begin(), verdict.end(), [](auto v) { return v != 0; }); }
};

/// x0-APN verdict at every point, with both witnesses for each failure.
inline PapnReport papn_set(const VBF& f, unsigned jobs = 1) {
  const std::size_t s = f.size();
  std::vector<std::optional<PapnFailure>> slots(s);
  parallel_for(s, jobs, [&](std::size_t x0) {
    const auto r = find_rodier_violation(f.table(), static_cast<elem>(x0));
    if (!r) return;
    const auto d = find_derivative_violation(f.table(), static_cast<elem>(x0));
    if (!d) throw std::logic_error("x0-APN tests disagree");
    slots[x0] = PapnFailure{static_cast<elem>(x0), *d, *r};
  });
  PapnReport rep;
  rep.verdict.assign(s, 1);
  for (std::size_t x0 = 0; x0 < s; ++x0) {
    if (!slots[x0]) continue;
    rep.verdict[x0] = 0;
    rep.failures.push_back(*slots[x0]);
  }
  return rep;
}

/// Every nonzero derivative takes at least 2^(n-2) + 1 distinct values.
inline bool is_weakly_apn(const VBF& f) {
  if (f.n() < 2) throw std::invalid_argument("weak APN is defined for n >= 2");
  const std::size_t s = f.size();
  const std::size_t need = (s >> 2) + 1;
  std::vector<std::uint8_t> seen(s);
  for (std::size_t a = 1; a < s; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t distinct = 0;
    for (std::size_t x = 0; x < s; ++x) {
      auto& slot = seen[f.table()[x ^ a] ^ f.table()[x]];
      if (!slot) {
        slot = 1;
        ++distinct;
      }
    }
    if (distinct < need) return false;
  }
  return true;
}

/// |T_{x,y}|: off-curve pairs ((u+x)(v+x)(u+v) != 0) with F(u)+F(v)+F(u+v+x)+y = 0.
inline std::uint64_t t_size(const VBF& f, elem x, elem y) {
  const auto t = f.table();
  std::uint64_t count = 0;
  for (elem u = 0; u < f.size(); ++u) {
    if (u == x) continue;
    for (elem v = 0; v < f.size(); ++v) {
      if (v == x || v == u) continue;
      if ((t[u] ^ t[v] ^ t[u ^ v ^ x] ^ y) == 0) ++count;
    }
  }
  return count;
}

/// |S_{x,y}| = #{u : F(u) + F(u+x) + y = 0}.
inline std::uint64_t s_size(const VBF& f, elem x, elem y) {
  const auto t = f.table();
  std::uint64_t count = 0;
  for (elem u = 0; u < f.size(); ++u)
    if ((t[u] ^ t[u ^ x] ^ y) == 0) ++count;
  return count;
}

}  // namespace papnlab
