#pragma once

// (n,n)-functions as exhaustive value tables over GF(2^n).

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "papnlab/gf2n.hpp"

namespace papnlab {

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_field(unsigned n) { return std::make_shared<const Field>(n); }
inline FieldPtr make_field(unsigned n, std::uint32_t modulus) { return std::make_shared<const Field>(n, modulus); }

/// A vectorial Boolean function F : GF(2^n) -> GF(2^n); table[x] = F(x).
class VBF {
 public:
  VBF(FieldPtr field, std::vector<elem> table) : field_(std::move(field)), table_(std::move(table)) {
    if (!field_) throw std::invalid_argument("VBF requires a field");
    if (table_.size() != field_->size())
      throw std::invalid_argument("VBF table length " + std::to_string(table_.size()) + " != 2^n");
    for (elem v : table_)
      if (v >= field_->size()) throw std::invalid_argument("VBF table entry outside GF(2^n)");
  }

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  unsigned n() const noexcept { return field_->n(); }
  std::uint32_t size() const noexcept { return field_->size(); }
  std::span<const elem> table() const noexcept { return table_; }
  elem operator()(elem x) const { return table_.at(x); }

  bool operator==(const VBF& o) const { return *field_ == *o.field_ && table_ == o.table_; }

 private:
  FieldPtr field_;
  std::vector<elem> table_;
};

/// Sum of c_i * x^(e_i), exponents strictly increasing, no zero coefficient.
struct UnivariatePoly {
  struct Term {
    std::uint32_t exponent = 0;
    elem coefficient = 0;
    bool operator==(const Term&) const = default;
  };
  std::vector<Term> terms;
};

/// L(y) = sum_i coeffs[i] * y^(2^i); exactly n coefficients.
struct LinearizedPoly {
  std::vector<elem> coeffs;

  static LinearizedPoly identity(unsigned n) {
    LinearizedPoly l{std::vector<elem>(n, 0)};
    l.coeffs[0] = 1;
    return l;
  }
  /// The absolute trace as a linearized polynomial (all coefficients 1).
  static LinearizedPoly trace(unsigned n) { return LinearizedPoly{std::vector<elem>(n, 1)}; }

  elem apply(const Field& f, elem y) const {
    if (coeffs.size() != f.n()) throw std::invalid_argument("linearized polynomial must have n coefficients");
    elem acc = 0;
    elem frob = y;
    for (elem c : coeffs) {
      acc ^= f.mul(c, frob);
      frob = f.mul(frob, frob);
    }
    return acc;
  }

  bool operator==(const LinearizedPoly&) const = default;
};

inline VBF from_table(FieldPtr field, std::vector<elem> table) { return VBF(std::move(field), std::move(table)); }

/// x -> x^m, 0 <= m <= 2^n - 1.
inline VBF from_power(FieldPtr field, std::uint64_t m) {
  if (m > field->order()) throw std::invalid_argument("power exponent " + std::to_string(m) + " exceeds 2^n - 1");
  std::vector<elem> t(field->size());
  for (elem x = 0; x < field->size(); ++x) t[x] = field->pow(x, static_cast<std::int64_t>(m));
  return VBF(std::move(field), std::move(t));
}

/// x -> x^e for any e >= 0, using the exponent reduced modulo 2^n - 1.
inline VBF from_any_power(FieldPtr field, std::uint64_t e) {
  const unsigned n = field->n();
  return from_power(std::move(field), reduce_exponent(e, n));
}

inline VBF from_univariate(FieldPtr field, const UnivariatePoly& p) {
  std::vector<elem> t(field->size(), 0);
  for (const auto& term : p.terms) {
    if (term.exponent > field->order()) throw std::invalid_argument("exponent exceeds 2^n - 1");
    for (elem x = 0; x < field->size(); ++x)
      t[x] ^= field->mul(term.coefficient, field->pow(x, term.exponent));
  }
  return VBF(std::move(field), std::move(t));
}

/// Pointwise sum F + G.
inline VBF operator+(const VBF& f, const VBF& g) {
  if (!(f.field() == g.field())) throw std::invalid_argument("adding functions over different fields");
  std::vector<elem> t(f.size());
  for (elem x = 0; x < f.size(); ++x) t[x] = f.table()[x] ^ g.table()[x];
  return VBF(f.field_ptr(), std::move(t));
}

/// x -> L(F(x)).
inline VBF compose_linear(const LinearizedPoly& l, const VBF& f) {
  std::vector<elem> t(f.size());
  for (elem x = 0; x < f.size(); ++x) t[x] = l.apply(f.field(), f.table()[x]);
  return VBF(f.field_ptr(), std::move(t));
}

/// x -> Tr(F(x)) embedded as the field constant 0 or 1.
inline VBF trace_of(const VBF& f) {
  std::vector<elem> t(f.size());
  for (elem x = 0; x < f.size(); ++x) t[x] = f.field().trace(f.table()[x]);
  return VBF(f.field_ptr(), std::move(t));
}

/// The (x0, eps)-modification: equal to F except F'(x0) = F(x0) + eps.
inline VBF modify_at(const VBF& f, elem x0, elem eps) {
  if (eps == 0) throw std::invalid_argument("modification requires a nonzero eps");
  if (x0 >= f.size() || eps >= f.size()) throw std::invalid_argument("modification point outside GF(2^n)");
  std::vector<elem> t(f.table().begin(), f.table().end());
  t[x0] ^= eps;
  return VBF(f.field_ptr(), std::move(t));
}

/// Every second derivative D_a D_b F is constant (affine maps count as
/// degenerate quadratics).
inline bool is_quadratic(std::span<const elem> t) {
  const std::size_t size = t.size();
  for (std::size_t a = 1; a < size; ++a) {
    for (std::size_t b = a + 1; b < size; ++b) {
      const elem c = t[0] ^ t[a] ^ t[b] ^ t[a ^ b];
      for (std::size_t x = 1; x < size; ++x)
        if ((t[x] ^ t[x ^ a] ^ t[x ^ b] ^ t[x ^ a ^ b]) != c) return false;
    }
  }
  return true;
}

inline bool is_quadratic(const VBF& f) { return is_quadratic(f.table()); }

// ---------------------------------------------------------------------------
// Raw binary form: 2^n little-endian 16-bit entries.

inline std::vector<std::uint8_t> to_binary(const VBF& f) {
  std::vector<std::uint8_t> out;
  out.reserve(2 * f.size());
  for (elem v : f.table()) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
  }
  return out;
}

inline VBF from_binary(FieldPtr field, std::span<const std::uint8_t> bytes) {
  if (bytes.size() != 2 * static_cast<std::size_t>(field->size()))
    throw std::invalid_argument("binary table must hold 2^n little-endian 16-bit entries");
  std::vector<elem> t(field->size());
  for (std::size_t i = 0; i < t.size(); ++i)
    t[i] = static_cast<elem>(bytes[2 * i]) | (static_cast<elem>(bytes[2 * i + 1]) << 8);
  return VBF(std::move(field), std::move(t));
}

}  // namespace papnlab
