#pragma once

// Exact integer and rational arithmetic helpers shared across the library.
// All group/topology code is integer-exact; no floating point.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace sfq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::int64_t to_int64(const Int& v, const char* what = "integer") {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error(std::string(what) + " out of 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

// Floored modulus: result in [0, m) for m > 0.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// g = gcd(a, b) together with x, y such that a*x + b*y = g.
inline std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(std::int64_t a,
                                                                    std::int64_t b) {
  if (b == 0) return {a, 1, 0};
  auto [g, x, y] = ext_gcd(b, a % b);
  return {g, y, x - (a / b) * y};
}

// Inverse of a modulo m (m >= 1, gcd(a, m) = 1), normalized to [0, m).
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
  auto [g, x, y] = ext_gcd(mod_floor(a, m), m);
  (void)y;
  if (g != 1 && g != -1) throw std::invalid_argument("mod_inverse: arguments not coprime");
  return mod_floor(g < 0 ? -x : x, m);
}

inline std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  Int l = Int(a) / std::gcd(a, b) * Int(b);
  return to_int64(l, "lcm");
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::int64_t totient(std::int64_t n) {
  std::int64_t result = n, m = n;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace sfq
