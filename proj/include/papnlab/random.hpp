#pragma once

// Seeded generators for random value tables and random APN functions
// (extended-affine images of known APN maps).

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "papnlab/differential.hpp"
#include "papnlab/vbf.hpp"

namespace papnlab {

using Rng = std::mt19937_64;

/// Derives an independent per-trial seed from a run seed and a trial key.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t key) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (key + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline elem random_element(const Field& f, Rng& rng) {
  return static_cast<elem>(std::uniform_int_distribution<std::uint32_t>(0, f.order())(rng));
}

inline elem random_nonzero(const Field& f, Rng& rng) {
  return static_cast<elem>(std::uniform_int_distribution<std::uint32_t>(1, f.order())(rng));
}

inline VBF random_function(const FieldPtr& field, Rng& rng) {
  std::vector<elem> t(field->size());
  for (auto& v : t) v = random_element(*field, rng);
  return VBF(field, std::move(t));
}

/// GF(2)-linear map on n-bit vectors, stored by the images of the basis vectors.
struct LinearMap {
  std::vector<std::uint32_t> columns;

  std::uint32_t operator()(std::uint32_t x) const noexcept {
    std::uint32_t y = 0;
    for (std::size_t i = 0; x != 0; ++i, x >>= 1)
      if (x & 1u) y ^= columns[i];
    return y;
  }
};

inline bool is_invertible(const LinearMap& m, unsigned n) {
  std::vector<std::uint32_t> rows(m.columns.begin(), m.columns.end());
  unsigned rank = 0;
  for (unsigned bit = 0; bit < n && rank < rows.size(); ++bit) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !((rows[pivot] >> bit) & 1u)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && ((rows[r] >> bit) & 1u)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank == n;
}

inline LinearMap random_linear(unsigned n, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, (1u << n) - 1);
  LinearMap m;
  for (unsigned i = 0; i < n; ++i) m.columns.push_back(d(rng));
  return m;
}

inline LinearMap random_invertible(unsigned n, Rng& rng) {
  for (;;) {
    LinearMap m = random_linear(n, rng);
    if (is_invertible(m, n)) return m;
  }
}

/// Random extended-affine image A1(F(A2(x) + c2)) + A3(x) + c1 of f. Every
/// differential property, APN included, is preserved.
inline VBF random_ea_image(const VBF& f, Rng& rng) {
  const unsigned n = f.n();
  const LinearMap a1 = random_invertible(n, rng);
  const LinearMap a2 = random_invertible(n, rng);
  const LinearMap a3 = random_linear(n, rng);
  const elem c1 = random_element(f.field(), rng);
  const elem c2 = random_element(f.field(), rng);
  std::vector<elem> t(f.size());
  for (elem x = 0; x < f.size(); ++x) t[x] = a1(f.table()[a2(x) ^ c2]) ^ a3(x) ^ c1;
  return VBF(f.field_ptr(), std::move(t));
}

/// Known APN maps over GF(2^n): x^3, x^3 + Tr(x^9), and x^(2^n-2) for odd n.
inline std::vector<VBF> apn_catalog(const FieldPtr& field) {
  std::vector<VBF> out;
  const VBF cube = from_any_power(field, 3);
  out.push_back(cube);
  out.push_back(cube + trace_of(from_any_power(field, 9)));
  if (field->n() % 2 == 1 && field->n() > 1) out.push_back(from_power(field, field->order() - 1));
  std::erase_if(out, [](const VBF& g) { return !is_apn(g); });
  return out;
}

/// Random APN function with F(0) = 0.
inline VBF random_apn_function(const FieldPtr& field, Rng& rng) {
  const auto catalog = apn_catalog(field);
  if (catalog.empty()) throw std::logic_error("no APN base function for this n");
  const auto& base = catalog[std::uniform_int_distribution<std::size_t>(0, catalog.size() - 1)(rng)];
  VBF g = random_ea_image(base, rng);
  const elem g0 = g.table()[0];
  std::vector<elem> t(g.table().begin(), g.table().end());
  for (auto& v : t) v ^= g0;
  return VBF(field, std::move(t));
}

}  // namespace papnlab
