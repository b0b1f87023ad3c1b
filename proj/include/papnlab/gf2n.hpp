#pragma once

// Arithmetic in GF(2^n), 1 <= n <= 16, in the polynomial basis of a fixed
// primitive modulus, plus the GF(2)[x] and cyclotomic utilities used by the
// monomial criteria.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace papnlab {

/// Field element: bit i is the coefficient of g^i, g the class of x.
using elem = std::uint32_t;

inline constexpr unsigned kMaxDegree = 16;

/// Lexicographically smallest primitive polynomial of each degree 1..16,
/// bit i = coefficient of x^i.
inline constexpr std::array<std::uint32_t, kMaxDegree + 1> kPrimitiveModulus = {
    0x0,    0x3,    0x7,    0xb,    0x13,   0x25,    0x43,    0x83,   0x11d,
    0x211,  0x409,  0x805,  0x1053, 0x201b, 0x402b,  0x8003,  0x1002d};

/// Discrete-log acceleration: antilog[k] = g^k for 0 <= k < 2^n - 1 (stored
/// twice over so that log sums need no reduction), log[e] for e != 0.
struct DLogTables {
  std::vector<std::uint32_t> log;
  std::vector<elem> antilog;
};

class Field {
 public:
  explicit Field(unsigned n) : Field(n, n >= 1 && n <= kMaxDegree ? kPrimitiveModulus[n] : 0) {}

  Field(unsigned n, std::uint32_t modulus) : n_(n), modulus_(modulus) {
    if (n < 1 || n > kMaxDegree)
      throw std::invalid_argument("field degree must be in [1, 16], got " + std::to_string(n));
    if ((modulus >> n) != 1u)
      throw std::invalid_argument("modulus must have degree exactly " + std::to_string(n));
    size_ = 1u << n;
    order_ = size_ - 1;
    build_tables();
  }

  unsigned n() const noexcept { return n_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  /// 2^n.
  std::uint32_t size() const noexcept { return size_; }
  /// 2^n - 1, the order of the multiplicative group.
  std::uint32_t order() const noexcept { return order_; }
  elem generator() const noexcept { return tables_.antilog[order_ == 1 ? 0 : 1]; }
  const DLogTables& tables() const noexcept { return tables_; }

  static constexpr elem add(elem a, elem b) noexcept { return a ^ b; }

  elem mul(elem a, elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return tables_.antilog[tables_.log[a] + tables_.log[b]];
  }

  elem inv(elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in GF(2^n)");
    return tables_.antilog[(order_ - tables_.log[a]) % order_];
  }

  elem div(elem a, elem b) const { return mul(a, inv(b)); }

  /// a^k for any integer k; 0^0 = 1, 0^k = 0 for k > 0, 0^k throws for k < 0.
  elem pow(elem a, std::int64_t k) const {
    if (a == 0) {
      if (k == 0) return 1;
      if (k < 0) throw std::domain_error("negative power of zero in GF(2^n)");
      return 0;
    }
    const std::int64_t ord = order_;
    std::int64_t r = k % ord;
    if (r < 0) r += ord;
    const std::uint64_t e = (static_cast<std::uint64_t>(tables_.log[a]) * static_cast<std::uint64_t>(r)) % order_;
    return tables_.antilog[e];
  }

  elem exp_g(std::uint64_t k) const noexcept { return tables_.antilog[k % order_]; }
  std::uint32_t log(elem a) const {
    if (a == 0) throw std::domain_error("discrete log of zero");
    return tables_.log[a];
  }

  /// Absolute trace Tr(x) = x + x^2 + ... + x^(2^(n-1)).
  unsigned trace(elem a) const noexcept { return trace_bit_[a]; }

  /// Mask m(b) with Tr(b*y) = parity(y & m(b)) for every y.
  std::uint32_t trace_mask(elem b) const noexcept { return trace_mask_[b]; }

  /// Primitive element of the subfield GF(2^m); requires m | n.
  elem subfield_generator(unsigned m) const {
    if (m == 0 || n_ % m != 0) throw std::invalid_argument("subfield degree must divide n");
    return exp_g(order_ / ((1u << m) - 1));
  }

  bool operator==(const Field& o) const noexcept { return n_ == o.n_ && modulus_ == o.modulus_; }

 private:
  void build_tables() {
    tables_.log.assign(size_, 0);
    tables_.antilog.assign(2 * static_cast<std::size_t>(order_), 0);
    std::vector<bool> seen(size_, false);
    elem x = 1;
    for (std::uint32_t k = 0; k < order_; ++k) {
      if (seen[x])
        throw std::invalid_argument("modulus is not primitive: x has order " + std::to_string(k));
      seen[x] = true;
      tables_.antilog[k] = x;
      tables_.antilog[k + order_] = x;
      tables_.log[x] = k;
      x <<= 1;
      if (x & size_) x ^= modulus_;
    }
    if (x != 1) throw std::invalid_argument("modulus is not primitive");

    trace_bit_.assign(size_, 0);
    for (elem a = 0; a < size_; ++a) {
      elem t = 0;
      elem s = a;
      for (unsigned i = 0; i < n_; ++i) {
        t ^= s;
        s = mul(s, s);
      }
      if (t > 1) throw std::logic_error("trace left GF(2)");
      trace_bit_[a] = static_cast<std::uint8_t>(t);
    }
    trace_mask_.assign(size_, 0);
    for (elem b = 0; b < size_; ++b) {
      std::uint32_t m = 0;
      for (unsigned i = 0; i < n_; ++i) m |= static_cast<std::uint32_t>(trace(mul(b, elem{1} << i))) << i;
      trace_mask_[b] = m;
    }
  }

  unsigned n_;
  std::uint32_t modulus_;
  std::uint32_t size_ = 0;
  std::uint32_t order_ = 0;
  DLogTables tables_;
  std::vector<std::uint8_t> trace_bit_;
  std::vector<std::uint32_t> trace_mask_;
};

inline unsigned parity(std::uint32_t v) noexcept { return static_cast<unsigned>(std::popcount(v) & 1); }

/// Exponent e reduced to [0, 2^n - 1] so that x^e agrees on every x,
/// including x = 0 (e > 0 never reduces to 0).
inline std::uint64_t reduce_exponent(std::uint64_t e, unsigned n) {
  if (e == 0) return 0;
  const std::uint64_t ord = (std::uint64_t{1} << n) - 1;
  const std::uint64_t r = e % ord;
  return r == 0 ? ord : r;
}

// ---------------------------------------------------------------------------
// GF(2)[x]

class BinaryPolynomial {
 public:
  BinaryPolynomial() = default;

  static BinaryPolynomial from_mask(std::uint64_t mask) {
    BinaryPolynomial p;
    if (mask != 0) p.words_.push_back(mask);
    return p;
  }

  static BinaryPolynomial monomial(std::size_t k) {
    BinaryPolynomial p;
    p.set(k, true);
    return p;
  }

  /// -1 for the zero polynomial.
  long degree() const noexcept {
    if (words_.empty()) return -1;
    return static_cast<long>(64 * (words_.size() - 1) + 63 - std::countl_zero(words_.back()));
  }

  bool is_zero() const noexcept { return words_.empty(); }

  bool coeff(std::size_t k) const noexcept {
    const std::size_t w = k / 64;
    return w < words_.size() && ((words_[w] >> (k % 64)) & 1u);
  }

  void set(std::size_t k, bool v) {
    const std::size_t w = k / 64;
    if (w >= words_.size()) {
      if (!v) return;
      words_.resize(w + 1, 0);
    }
    const std::uint64_t bit = std::uint64_t{1} << (k % 64);
    words_[w] = v ? (words_[w] | bit) : (words_[w] & ~bit);
    trim();
  }

  void flip(std::size_t k) { set(k, !coeff(k)); }

  BinaryPolynomial& operator+=(const BinaryPolynomial& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
    trim();
    return *this;
  }

  friend BinaryPolynomial operator+(BinaryPolynomial a, const BinaryPolynomial& b) { return a += b; }
  bool operator==(const BinaryPolynomial&) const = default;

  /// Low 64 coefficients; throws when the degree exceeds 63.
  std::uint64_t to_mask() const {
    if (words_.size() > 1) throw std::overflow_error("polynomial does not fit in 64 bits");
    return words_.empty() ? 0 : words_[0];
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (long k = degree(); k >= 0; --k) {
      if (!coeff(static_cast<std::size_t>(k))) continue;
      if (!out.empty()) out += " + ";
      if (k == 0)
        out += "1";
      else if (k == 1)
        out += "x";
      else
        out += "x^" + std::to_string(k);
    }
    return out;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// this ^= other * x^shift.
  void add_shifted(const BinaryPolynomial& other, std::size_t shift) {
    if (other.is_zero()) return;
    const std::size_t ws = shift / 64;
    const unsigned bs = shift % 64;
    const std::size_t need = other.words_.size() + ws + 1;
    if (words_.size() < need) words_.resize(need, 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) {
      words_[i + ws] ^= other.words_[i] << bs;
      if (bs != 0) words_[i + ws + 1] ^= other.words_[i] >> (64 - bs);
    }
    trim();
  }

 private:
  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  std::vector<std::uint64_t> words_;
};

/// Remainder of p modulo d in GF(2)[x].
inline BinaryPolynomial poly_mod(BinaryPolynomial p, const BinaryPolynomial& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  const long dd = d.degree();
  for (long k = p.degree(); k >= dd; k = p.degree()) {
    p.add_shifted(d, static_cast<std::size_t>(k - dd));
  }
  return p;
}

inline bool poly_divides(const BinaryPolynomial& d, const BinaryPolynomial& p) { return poly_mod(p, d).is_zero(); }

// ---------------------------------------------------------------------------
// Cyclotomic cosets modulo 2^n - 1

struct CyclotomicCoset {
  std::uint32_t representative = 0;
  std::vector<std::uint32_t> members;  // sorted

  bool operator==(const CyclotomicCoset&) const = default;
};

inline CyclotomicCoset cyclotomic_coset(std::uint32_t i, unsigned n) {
  if (n < 1 || n > 31) throw std::invalid_argument("coset modulus degree out of range");
  const std::uint64_t ord = (std::uint64_t{1} << n) - 1;
  CyclotomicCoset c;
  std::uint64_t x = i % ord;
  do {
    c.members.push_back(static_cast<std::uint32_t>(x));
    x = (2 * x) % ord;
  } while (x != i % ord);
  std::sort(c.members.begin(), c.members.end());
  c.representative = c.members.front();
  return c;
}

/// Partition of {1, ..., 2^n - 2} into cosets under doubling, sorted by
/// minimal representative. The coset {0} is excluded.
inline std::vector<CyclotomicCoset> cyclotomic_cosets(unsigned n) {
  if (n < 1 || n > kMaxDegree) throw std::invalid_argument("coset degree out of range");
  const std::uint32_t ord = (1u << n) - 1;
  std::vector<bool> covered(ord, false);
  std::vector<CyclotomicCoset> out;
  for (std::uint32_t i = 1; i < ord; ++i) {
    if (covered[i]) continue;
    CyclotomicCoset c = cyclotomic_coset(i, n);
    for (auto m : c.members) covered[m] = true;
    out.push_back(std::move(c));
  }
  return out;
}

/// True when e is the least element of its coset modulo 2^n - 1.
inline bool is_coset_leader(std::uint32_t e, unsigned n) {
  const std::uint64_t ord = (std::uint64_t{1} << n) - 1;
  std::uint64_t x = e % ord;
  for (unsigned j = 1; j < n; ++j) {
    x = (2 * x) % ord;
    if (x < e) return false;
  }
  return true;
}

/// Minimal polynomial of g^i over GF(2): the product of (x - g^j) over the
/// coset of i, expanded in GF(2^n)[x].
inline BinaryPolynomial minimal_polynomial(const Field& f, std::uint32_t i) {
  if (i >= std::max<std::uint32_t>(f.order(), 1))
    throw std::invalid_argument("minimal_polynomial index out of range");
  const CyclotomicCoset c = cyclotomic_coset(i, f.n());
  std::vector<elem> coeffs{1};  // coeffs[k] = coefficient of x^k
  for (std::uint32_t j : c.members) {
    const elem root = f.exp_g(j);
    std::vector<elem> next(coeffs.size() + 1, 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] ^= coeffs[k];
      next[k] ^= f.mul(coeffs[k], root);
    }
    coeffs = std::move(next);
  }
  BinaryPolynomial p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] > 1) throw std::logic_error("minimal polynomial coefficient outside GF(2)");
    if (coeffs[k] == 1) p.set(k, true);
  }
  return p;
}

/// Evaluates a GF(2)[x] polynomial at a field element (Horner).
inline elem poly_eval(const Field& f, const BinaryPolynomial& p, elem x) {
  elem acc = 0;
  for (long k = p.degree(); k >= 0; --k) {
    acc = f.mul(acc, x);
    if (p.coeff(static_cast<std::size_t>(k))) acc ^= 1;
  }
  return acc;
}

/// gcd over three nonnegative integers; gcd(0, n) = n.
inline std::uint64_t gcd3(std::uint64_t a, std::uint64_t b, std::uint64_t c) { return std::gcd(std::gcd(a, b), c); }

}  // namespace papnlab
