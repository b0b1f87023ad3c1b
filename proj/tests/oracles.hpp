#pragma once

// Slow reference implementations that share no code with the library beyond
// the element type. Used to cross-check every fast path.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using u32 = std::uint32_t;

/// Shift-and-add product modulo the given polynomial.
inline u32 mul(u32 a, u32 b, unsigned n, u32 modulus) {
  u32 r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> n) & 1) a ^= modulus;
  }
  return r;
}

inline u32 pow(u32 a, std::uint64_t k, unsigned n, u32 modulus) {
  u32 r = 1;
  while (k) {
    if (k & 1) r = mul(r, a, n, modulus);
    a = mul(a, a, n, modulus);
    k >>= 1;
  }
  return r;
}

/// Tr(x) = x + x^2 + ... + x^(2^(n-1)), always 0 or 1.
inline u32 trace(u32 x, unsigned n, u32 modulus) {
  u32 t = 0, y = x;
  for (unsigned i = 0; i < n; ++i) {
    t ^= y;
    y = mul(y, y, n, modulus);
  }
  return t;
}

/// Multiplicative order of x modulo the polynomial; 2^n - 1 iff primitive.
inline std::uint64_t order_of_x(unsigned n, u32 modulus) {
  u32 y = 2 % (1u << n);
  if ((modulus >> n) != 1) return 0;
  if (n == 1) return 1;
  for (std::uint64_t k = 1; k <= (1u << n); ++k) {
    if (y == 1) return k;
    y = mul(y, 2, n, modulus);
  }
  return 0;
}

/// Table of x^e computed by repeated squaring.
inline std::vector<u32> power_table(std::uint64_t e, unsigned n, u32 modulus) {
  std::vector<u32> t(1u << n);
  for (u32 x = 0; x < t.size(); ++x) t[x] = (x == 0) ? (e == 0 ? 1 : 0) : pow(x, e, n, modulus);
  return t;
}

/// W(a, b) = sum_x (-1)^(Tr(b F(x)) + Tr(a x)), computed term by term.
inline std::vector<std::int64_t> walsh(const std::vector<u32>& f, unsigned n, u32 modulus) {
  const u32 s = 1u << n;
  std::vector<std::int64_t> w(static_cast<std::size_t>(s) * s);
  for (u32 b = 0; b < s; ++b)
    for (u32 a = 0; a < s; ++a) {
      std::int64_t acc = 0;
      for (u32 x = 0; x < s; ++x)
        acc += (trace(mul(b, f[x], n, modulus), n, modulus) ^ trace(mul(a, x, n, modulus), n, modulus)) ? -1 : 1;
      w[static_cast<std::size_t>(b) * s + a] = acc;
    }
  return w;
}

/// DDT(a, b) = #{x : F(x + a) + F(x) = b}, counted by scanning x per entry.
inline std::vector<u32> ddt(const std::vector<u32>& f) {
  const u32 s = static_cast<u32>(f.size());
  std::vector<u32> d(static_cast<std::size_t>(s) * s, 0);
  for (u32 a = 0; a < s; ++a)
    for (u32 b = 0; b < s; ++b) {
      u32 c = 0;
      for (u32 x = 0; x < s; ++x) c += ((f[x ^ a] ^ f[x]) == b);
      d[static_cast<std::size_t>(a) * s + b] = c;
    }
  return d;
}

inline u32 uniformity(const std::vector<u32>& f) {
  const auto d = ddt(f);
  const u32 s = static_cast<u32>(f.size());
  return *std::max_element(d.begin() + s, d.end());
}

/// x0-APN straight from the definition: for every a != 0 the equation
/// F(x + a) + F(x) = F(x0 + a) + F(x0) has only the solutions x0, x0 + a.
inline bool x0_apn(const std::vector<u32>& f, u32 x0) {
  const u32 s = static_cast<u32>(f.size());
  for (u32 a = 1; a < s; ++a) {
    const u32 target = f[x0 ^ a] ^ f[x0];
    for (u32 x = 0; x < s; ++x)
      if (x != x0 && x != (x0 ^ a) && (f[x ^ a] ^ f[x]) == target) return false;
  }
  return true;
}

/// Smallest image size of a nontrivial derivative.
inline std::size_t min_derivative_image(const std::vector<u32>& f) {
  const u32 s = static_cast<u32>(f.size());
  std::size_t best = s;
  for (u32 a = 1; a < s; ++a) {
    std::set<u32> img;
    for (u32 x = 0; x < s; ++x) img.insert(f[x ^ a] ^ f[x]);
    best = std::min(best, img.size());
  }
  return best;
}

/// Orbit of e under doubling modulo 2^n - 1.
inline std::set<std::uint64_t> coset(std::uint64_t e, unsigned n) {
  const std::uint64_t m = (std::uint64_t{1} << n) - 1;
  std::set<std::uint64_t> c;
  std::uint64_t x = e % m;
  while (c.insert(x).second) x = (2 * x) % m;
  return c;
}

/// Polynomial remainder over GF(2), polynomials as bit masks (degree < 64).
inline std::uint64_t poly_rem(std::uint64_t p, std::uint64_t d) {
  const int dd = 63 - __builtin_clzll(d);
  while (p && 63 - __builtin_clzll(p) >= dd) p ^= d << ((63 - __builtin_clzll(p)) - dd);
  return p;
}

}  // namespace oracle
