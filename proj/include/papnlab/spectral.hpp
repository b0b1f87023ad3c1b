#pragma once

// Exact Walsh spectra W_F(a,b) = sum_x (-1)^(Tr(b F(x)) + Tr(a x)) and their
// plain, twisted and E-weighted moment sums. All sums are exact integers and
// always run over every (a,b), b = 0 included.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "papnlab/exact.hpp"
#include "papnlab/parallel.hpp"
#include "papnlab/vbf.hpp"

namespace papnlab {

/// Largest n for which a full 2^n x 2^n table is materialized; above it the
/// moment routines stream one component at a time.
inline constexpr unsigned kMaxMaterializedWalsh = 12;

/// In-place +-1 butterfly: v[u] <- sum_x v[x] (-1)^<x,u>. Self-inverse up to 2^n.
inline void fast_walsh_hadamard(std::span<std::int32_t> v) {
  const std::size_t size = v.size();
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int32_t x = v[j];
        const std::int32_t y = v[j + h];
        v[j] = x + y;
        v[j + h] = x - y;
      }
    }
  }
}

/// Fills out[a] = W_F(a, b) for one component b. scratch must hold 2^n values.
inline void walsh_component(const Field& f, std::span<const elem> table, elem b, std::span<std::int32_t> out,
                            std::span<std::int32_t> scratch) {
  const std::uint32_t mb = f.trace_mask(b);
  for (std::size_t x = 0; x < table.size(); ++x) scratch[x] = parity(table[x] & mb) ? -1 : 1;
  fast_walsh_hadamard(scratch);
  // Tr(a x) = <x, trace_mask(a)>, so W_F(a,b) is the butterfly output at that mask.
  for (std::size_t a = 0; a < table.size(); ++a) out[a] = scratch[f.trace_mask(static_cast<elem>(a))];
}

class WalshTable {
 public:
  WalshTable(FieldPtr field, std::vector<std::int32_t> values) : field_(std::move(field)), w_(std::move(values)) {
    const std::size_t s = field_->size();
    if (w_.size() != s * s) throw std::invalid_argument("Walsh table must hold 2^(2n) entries");
  }

  const Field& field() const noexcept { return *field_; }
  unsigned n() const noexcept { return field_->n(); }
  std::uint32_t size() const noexcept { return field_->size(); }

  std::int32_t operator()(elem a, elem b) const noexcept {
    return w_[static_cast<std::size_t>(b) * field_->size() + a];
  }
  /// All W_F(., b) for a fixed component b.
  std::span<const std::int32_t> component(elem b) const noexcept {
    return std::span<const std::int32_t>(w_).subspan(static_cast<std::size_t>(b) * field_->size(), field_->size());
  }

  bool operator==(const WalshTable& o) const { return field() == o.field() && w_ == o.w_; }

 private:
  FieldPtr field_;
  std::vector<std::int32_t> w_;  // row-major by b
};

/// Full Walsh table via one fast transform per component: O(n 2^(2n)).
inline WalshTable walsh_full(const VBF& f, unsigned jobs = 1) {
  if (f.n() > kMaxMaterializedWalsh)
    throw std::invalid_argument("full Walsh table limited to n <= 12; use the streaming moment routines");
  const std::size_t s = f.size();
  std::vector<std::int32_t> w(s * s);
  parallel_chunks(s, jobs, [&](std::size_t lo, std::size_t hi) {
    std::vector<std::int32_t> scratch(s);
    for (std::size_t b = lo; b < hi; ++b)
      walsh_component(f.field(), f.table(), static_cast<elem>(b), std::span(w).subspan(b * s, s), scratch);
  });
  return WalshTable(f.field_ptr(), std::move(w));
}

/// Calls visit(b, W_F(., b)) for every component without materializing the
/// table. visit may run concurrently for distinct b when jobs > 1.
template <typename Visit>
void for_each_walsh_component(const VBF& f, unsigned jobs, Visit&& visit) {
  const std::size_t s = f.size();
  parallel_chunks(s, jobs, [&](std::size_t lo, std::size_t hi) {
    std::vector<std::int32_t> scratch(s);
    std::vector<std::int32_t> row(s);
    for (std::size_t b = lo; b < hi; ++b) {
      walsh_component(f.field(), f.table(), static_cast<elem>(b), row, scratch);
      visit(static_cast<elem>(b), std::span<const std::int32_t>(row));
    }
  });
}

struct MomentReport {
  unsigned k = 0;
  exact_int value = 0;
  std::optional<std::pair<elem, elem>> twist;  // (x0, y0)
};

inline void check_moment_order(unsigned k, unsigned lo, unsigned hi) {
  if (k < lo || k > hi) throw std::invalid_argument("moment order out of range");
}

/// sum_{a,b} W^k * weight(a, b), with weight returning -2..2.
template <typename Weight>
exact_int weighted_moment(const WalshTable& w, unsigned k, Weight&& weight) {
  exact_int total = 0;
  for (elem b = 0; b < w.size(); ++b) {
    const auto row = w.component(b);
    for (elem a = 0; a < w.size(); ++a) {
      const int wt = weight(a, b);
      if (wt != 0) total += ipow(row[a], k) * wt;
    }
  }
  return total;
}

/// sum_{a,b} W_F(a,b)^k for k in {2,3,4}.
inline MomentReport moment(const WalshTable& w, unsigned k) {
  check_moment_order(k, 2, 4);
  return {k, weighted_moment(w, k, [](elem, elem) { return 1; }), std::nullopt};
}

/// Same value as moment(walsh_full(f), k), computed one component at a time.
inline MomentReport moment_streaming(const VBF& f, unsigned k, unsigned jobs = 1) {
  check_moment_order(k, 2, 4);
  std::vector<exact_int> per_b(f.size(), 0);
  for_each_walsh_component(f, jobs, [&](elem b, std::span<const std::int32_t> row) {
    exact_int acc = 0;
    for (std::int32_t v : row) acc += ipow(v, k);
    per_b[b] = acc;
  });
  exact_int total = 0;
  for (const auto& v : per_b) total += v;
  return {k, total, std::nullopt};
}

/// sum_{a,b} W^k (-1)^Tr(a x0 + b y0), k in {2,3}.
inline MomentReport twisted_moment(const WalshTable& w, unsigned k, elem x0, elem y0) {
  check_moment_order(k, 2, 3);
  const Field& f = w.field();
  const exact_int v = weighted_moment(w, k, [&](elem a, elem b) {
    return (f.trace(f.mul(a, x0)) ^ f.trace(f.mul(b, y0))) ? -1 : 1;
  });
  return {k, v, std::make_pair(x0, y0)};
}

/// D_F(b) = 1 - (-1)^Tr(b eps), in {0, 2}.
inline int d_factor(const Field& f, elem b, elem eps) {
  if (eps == 0) throw std::invalid_argument("d_factor requires eps != 0");
  return f.trace(f.mul(b, eps)) ? 2 : 0;
}

/// E_F(a,b) = (-1)^Tr(a x0 + b y0) D_F(b), in {-2, 0, 2}.
inline int e_factor(const Field& f, elem a, elem b, elem x0, elem y0, elem eps) {
  const int d = d_factor(f, b, eps);
  return (f.trace(f.mul(a, x0) ^ f.mul(b, y0)) ? -1 : 1) * d;
}

/// sum_{a,b} W^k E_F(a,b) for the point (x0, y0 = F(x0)) and shift eps.
inline exact_int e_weighted_moment(const WalshTable& w, unsigned k, elem x0, elem y0, elem eps) {
  const Field& f = w.field();
  return weighted_moment(w, k, [&](elem a, elem b) { return e_factor(f, a, b, x0, y0, eps); });
}

/// Checks W_F'(a,b) = W_F(a,b) - E_F(a,b) at every (a,b) against an
/// arbitrary candidate table for F', each side transformed separately.
inline bool verify_walsh_diff(const VBF& f, const VBF& modified, elem x0, elem eps) {
  const WalshTable wf = walsh_full(f);
  const WalshTable wm = walsh_full(modified);
  const elem y0 = f.table()[x0];
  for (elem b = 0; b < f.size(); ++b)
    for (elem a = 0; a < f.size(); ++a)
      if (wm(a, b) != wf(a, b) - e_factor(f.field(), a, b, x0, y0, eps)) return false;
  return true;
}

/// The same check with F' built as the (x0,eps)-modification of F.
inline bool verify_walsh_diff(const VBF& f, elem x0, elem eps) {
  return verify_walsh_diff(f, modify_at(f, x0, eps), x0, eps);
}

}  // namespace papnlab
