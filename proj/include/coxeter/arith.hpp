#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace coxeter {

using Int = std::int64_t;
using Wide = __int128;

namespace arith {

inline Wide abs(Wide v) { return v < 0 ? -v : v; }

inline Wide gcd(Wide a, Wide b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline int sign(Wide v) { return (v > 0) - (v < 0); }

inline Int narrow(Wide v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw std::overflow_error("coxeter: integer overflow narrowing to 64 bits");
  return static_cast<Int>(v);
}

inline Wide mul_checked(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("coxeter: 128-bit multiplication overflow");
  return r;
}

// Exact integer square root of a nonnegative value, if it is a perfect square.
inline std::optional<Wide> exact_sqrt(Wide v) {
  if (v < 0) return std::nullopt;
  if (v < 2) return v;
  Wide lo = 1, hi = 1;
  while (hi * hi <= v) hi *= 2;
  while (lo + 1 < hi) {
    Wide mid = lo + (hi - lo) / 2;
    if (mid * mid <= v) lo = mid; else hi = mid;
  }
  if (lo * lo == v) return lo;
  return std::nullopt;
}

// v = a^2 * r with r squarefree. Trial division; v is small in practice.
inline std::pair<Wide, Wide> split_square(Wide v) {
  Wide a = 1, r = 1;
  for (Wide p = 2; p * p <= v; ++p) {
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) a *= p;
    if (e % 2) r *= p;
  }
  r *= v;
  return {a, r};
}

inline std::string to_string(Wide v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  std::string s;
  while (v != 0) {
    int d = static_cast<int>(v % 10);
    s.insert(s.begin(), static_cast<char>('0' + (d < 0 ? -d : d)));
    v /= 10;
  }
  if (neg) s.insert(s.begin(), '-');
  return s;
}

}  // namespace arith
}  // namespace coxeter
