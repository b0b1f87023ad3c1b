#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace papnlab {

/// Exact signed accumulator for Walsh moments. The fourth moment at n = 16 is
/// bounded by 2^96, so 128 bits leave headroom for every sum in the library.
using exact_int = __int128;

inline constexpr exact_int pow2(unsigned k) { return exact_int{1} << k; }

inline exact_int ipow(exact_int base, unsigned k) {
  exact_int r = 1;
  while (k-- > 0) r *= base;
  return r;
}

inline std::string to_decimal(exact_int v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  // Work on the unsigned magnitude so INT128_MIN does not overflow.
  unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
  std::string digits;
  while (mag != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (neg) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

inline exact_int from_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty decimal string");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-') {
    neg = true;
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("malformed decimal string");
  exact_int v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed decimal string");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? -v : v;
}

}  // namespace papnlab
