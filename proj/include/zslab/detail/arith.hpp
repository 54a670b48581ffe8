#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zslab::detail {

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

// Prime factorization by trial division; returns (prime, exponent) pairs in
// ascending prime order. Fine for the invariant factors seen here.
inline std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize expects a positive integer");
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime_power(long long n) { return n >= 2 && factorize(n).size() == 1; }

inline long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace zslab::detail
