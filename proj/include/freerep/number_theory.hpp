#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <tuple>
#include <vector>

namespace freerep {

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime divisors, ascending.
inline std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Largest power of p dividing n.
inline std::size_t p_part(std::size_t n, std::size_t p) {
  std::size_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

inline std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline std::size_t totient(std::size_t n) {
  std::size_t result = n;
  for (auto p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline bool is_square_free(std::size_t n) {
  for (auto p : prime_factors(n))
    if (n % (p * p) == 0) return false;
  return true;
}

/// Primes of the form 2^(2^k) + 1.
inline bool is_fermat_prime(std::size_t p) {
  return is_prime(p) && is_power_of_two(p - 1) && is_power_of_two(static_cast<std::size_t>(
                                                       __builtin_ctzll(static_cast<unsigned long long>(p - 1))));
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  auto r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t result = 1;
  base = mod(base, m);
  while (exp) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

/// Multiplicative order of a mod m (gcd(a, m) = 1 assumed).
inline std::uint64_t multiplicative_order(std::int64_t a, std::int64_t m) {
  if (m == 1) return 1;
  std::uint64_t k = 1;
  auto x = mod(a, m);
  while (x != 1) {
    x = x * mod(a, m) % m;
    ++k;
  }
  return k;
}

inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1) {
    auto q = g / a1;
    std::tie(g, a1) = std::make_tuple(a1, g - q * a1);
    std::tie(x, x1) = std::make_tuple(x1, x - q * x1);
  }
  return mod(x, m);
}

}  // namespace freerep
