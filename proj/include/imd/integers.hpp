#pragma once

// Arbitrary-precision integer/rational layer and small number-theoretic
// helpers shared by all modules.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace imd {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

inline BigInt num(const Rational& q) { return numerator(q); }
inline BigInt den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

inline BigInt gcd_big(const BigInt& a, const BigInt& b) { return gcd(a, b); }

inline BigInt lcm_big(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

/// Floor of the square root of a nonnegative integer.
inline BigInt floor_sqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("floor_sqrt: negative argument");
  return sqrt(n);
}

/// Exact square root: r with r*r == n, or absent when n is not a square.
inline std::optional<BigInt> integer_sqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("integer_sqrt: negative argument");
  BigInt r = sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

inline bool is_square(const BigInt& n) {
  return n >= 0 && integer_sqrt(n).has_value();
}

/// Prime factorization by trial division; fine for the sizes handled here.
inline std::map<BigInt, int> factorize(BigInt n) {
  if (n <= 0) throw std::domain_error("factorize: argument must be positive");
  std::map<BigInt, int> f;
  for (BigInt p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

/// Largest square divisor f^2 with n = f^2 * m, m squarefree; returns (f, m).
inline std::pair<BigInt, BigInt> square_split(const BigInt& n) {
  if (n <= 0) throw std::domain_error("square_split: argument must be positive");
  BigInt f = 1, m = 1;
  for (const auto& [p, e] : factorize(n)) {
    for (int i = 0; i + 1 < e; i += 2) f *= p;
    if (e % 2) m *= p;
  }
  return {f, m};
}

inline BigInt squarefree_part(const BigInt& n) { return square_split(n).second; }

inline long euler_phi(long n) {
  if (n <= 0) throw std::domain_error("euler_phi: argument must be positive");
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

inline std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline std::vector<long> divisors(long n) {
  std::vector<long> ds;
  for (long d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  std::sort(ds.begin(), ds.end());
  return ds;
}

inline long gcd_long(long a, long b) {
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

inline long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

inline BigInt pow_big(const BigInt& b, unsigned e) {
  BigInt r = 1, x = b;
  while (e) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

}  // namespace imd
