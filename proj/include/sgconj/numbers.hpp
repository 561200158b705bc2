#ifndef SGCONJ_NUMBERS_HPP
#define SGCONJ_NUMBERS_HPP

// Small integer helpers shared by the field and arithmetic layers.

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>

#include "sgconj/errors.hpp"

namespace sgconj {

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// q = p^e with p prime, e >= 1.
inline std::optional<std::pair<long, int>> prime_power_decompose(long q) {
  if (q < 2) return std::nullopt;
  long p = q;
  for (long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  long rest = q;
  int e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, e);
}

inline long lcm_checked(long a, long b) {
  long g = std::gcd(a, b);
  long l = a / g;
  if (b != 0 && l > (1L << 60) / b)
    throw_domain("lcm overflow while accumulating group element orders");
  return l * b;
}

// Representative of the residue class of v modulo n within [1, n].
inline long residue_rep(long v, long n) {
  long r = v % n;
  if (r < 0) r += n;
  return r == 0 ? n : r;
}

}  // namespace sgconj

#endif
