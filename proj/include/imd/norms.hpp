#pragma once

// Enumeration of admissible norm vectors (d_1 >= ... >= d_n): the Egyptian
// fraction solutions of 1/d_1 + ... + 1/d_n = 1 subject to the divisibility
// and square constraints satisfied by row norms of integral Fourier matrices.

#include <imd/integers.hpp>

#include <set>
#include <string>
#include <vector>

namespace imd {

struct NormVector {
  std::vector<BigInt> dims;       // d_1 >= d_2 >= ... >= d_n
  std::vector<BigInt> cofactors;  // delta_i = d_1 / d_i

  bool operator<(const NormVector& o) const { return dims < o.dims; }
  bool operator==(const NormVector& o) const { return dims == o.dims; }
};

inline NormVector make_norm_vector(std::vector<BigInt> dims) {
  NormVector v;
  v.dims = std::move(dims);
  v.cofactors.reserve(v.dims.size());
  for (const auto& d : v.dims) v.cofactors.push_back(v.dims[0] / d);
  return v;
}

struct NormCheck {
  std::string name;
  bool passed;
};

struct NormValidation {
  std::vector<NormCheck> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Checks each NormVector invariant by name on an arbitrary integer tuple.
inline NormValidation validate_norm_vector(const std::vector<BigInt>& v) {
  NormValidation r;
  auto add = [&](std::string name, bool ok) {
    r.checks.push_back({std::move(name), ok});
  };
  bool positive = !v.empty();
  for (const auto& d : v) positive = positive && d > 0;
  add("entries positive", positive);
  if (!positive) return r;

  bool sorted = true;
  for (size_t i = 1; i < v.size(); ++i) sorted = sorted && v[i - 1] >= v[i];
  add("non-increasing order", sorted);

  Rational sum = 0;
  for (const auto& d : v) sum += Rational(1) / Rational(d);
  add("sum of inverses equals 1", sum == 1);

  bool divides = true, ratio_square = true;
  for (const auto& d : v) {
    if (v[0] % d != 0) {
      divides = false;
      ratio_square = false;
    } else if (!is_square(v[0] / d)) {
      ratio_square = false;
    }
  }
  add("each d_i divides d_1", divides);
  add("d_1/d_i is a perfect square", ratio_square);

  BigInt l = 1;
  for (size_t i = 1; i < v.size(); ++i) l = lcm_big(l, v[i]);
  add("d_1 = lcm(d_2..d_n)", v.size() == 1 ? v[0] == 1 : l == v[0]);

  if (v.size() % 2 == 1) {
    bool squares = true;
    for (const auto& d : v) squares = squares && is_square(d);
    add("n odd: all d_i squares", squares);
  } else {
    BigInt p = squarefree_part(v.back());
    bool same = true;
    for (const auto& d : v) same = same && squarefree_part(d) == p;
    add("n even: common squarefree part", same);
  }
  return r;
}

namespace detail {

// Smallest-prime-factor sieve, grown on demand.
inline const std::vector<int32_t>& spf_sieve(long need) {
  static std::vector<int32_t> spf;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if ((long)spf.size() <= need) {
    long n = std::max<long>(need + 1, 1 << 16);
    spf.assign(n, 0);
    for (long i = 2; i < n; ++i)
      if (spf[i] == 0)
        for (long j = i; j < n; j += i)
          if (spf[j] == 0) spf[j] = (int32_t)i;
  }
  return spf;
}

inline void prime_factors_fast(long x, std::vector<long>& out) {
  out.clear();
  if (x < (1L << 22)) {
    const auto& spf = spf_sieve(x);
    while (x > 1) {
      long p = spf[x];
      out.push_back(p);
      while (x % p == 0) x /= p;
    }
  } else {
    for (long p : prime_factors(x)) out.push_back(p);
  }
}

// Least perfect square multiple of d; d's primes are covered by `hints`
// plus the primes of `root`.
inline BigInt least_square_multiple(BigInt d, const std::set<long>& hints,
                                    const std::vector<long>& root_primes) {
  BigInt m = 1;
  auto strip = [&](long p) {
    int e = 0;
    while (d % p == 0) {
      d /= p;
      ++e;
    }
    if (e) m *= pow_big(BigInt(p), (unsigned)(e + (e % 2)));
  };
  for (long p : hints) strip(p);
  for (long p : root_primes)
    if (!hints.count(p)) strip(p);
  if (d != 1)  // prime outside the hint set; full factorization fallback
    for (const auto& [p, e] : factorize(d)) m *= pow_big(p, (unsigned)(e + e % 2));
  return m;
}

// Direct solve of 1/x + 1/y = a/b with x <= y perfect squares, x >= q_min:
// (a*x - b)(a*y - b) = b^2, so a*x - b runs over the divisors of b^2 up to b.
inline void two_term_solutions(const Rational& target, const BigInt& q_min,
                               const std::set<long>& hints,
                               std::vector<std::pair<BigInt, BigInt>>& out) {
  out.clear();
  const BigInt a = num(target), b = den(target);
  // factor b using the accumulated prime hints
  std::map<BigInt, int> fb;
  BigInt rem = b;
  for (long p : hints) {
    int e = 0;
    while (rem % p == 0) {
      rem /= p;
      ++e;
    }
    if (e) fb[p] = e;
  }
  if (rem != 1)
    for (const auto& [p, e] : factorize(rem)) fb[p] += e;
  std::vector<BigInt> divs = {BigInt(1)};
  for (const auto& [p, e] : fb) {
    size_t sz = divs.size();
    BigInt pe = 1;
    for (int i = 0; i < 2 * e; ++i) {  // exponents in b^2 reach 2e
      pe *= p;
      for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pe);
    }
  }
  const BigInt b2 = b * b;
  for (const BigInt& u : divs) {
    if (u > b) continue;
    if ((u + b) % a != 0) continue;
    BigInt x = (u + b) / a;
    if (x < q_min || !is_square(x)) continue;
    BigInt v = b2 / u;
    if ((v + b) % a != 0) continue;
    BigInt y = (v + b) / a;
    if (!is_square(y)) continue;
    out.emplace_back(x, y);
  }
}

// Recursion over square cofactors q_i = d_i / p, built from the smallest up:
// acc holds q_n, ..., q_{i+1}; `remaining` counts the positions i..1 left.
// The final cofactor q_1 is a perfect-square multiple of den(target), which
// bounds how much of the target the single largest entry can absorb.
inline void norm_rec(long remaining, const Rational& target,
                     std::vector<BigInt>& acc, const BigInt& p,
                     std::set<long>& prime_hints,
                     std::set<std::vector<BigInt>>& out) {
  if (target <= 0) return;
  auto emit = [&](std::vector<BigInt> tail_desc) {
    // tail_desc holds the largest entries (descending); stitch with acc
    std::vector<BigInt> dims = std::move(tail_desc);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) dims.push_back(p * *it);
    const BigInt& d1 = dims[0];
    BigInt l = 1;
    for (size_t i = 0; i < dims.size(); ++i) {
      if (d1 % dims[i] != 0) return;
      if (i > 0) l = lcm_big(l, dims[i]);
    }
    if (l != d1) return;
    out.insert(dims);
  };
  if (remaining == 1) {
    // largest entry is forced: 1/q_1 = target with q_1 a square >= q_2
    if (num(target) != 1) return;
    BigInt q = den(target);
    if (q < acc.back() || !is_square(q)) return;
    emit({p * q});
    return;
  }
  if (remaining == 2) {
    std::vector<std::pair<BigInt, BigInt>> xy;
    two_term_solutions(target, acc.back(), prime_hints, xy);
    for (const auto& [x, y] : xy) emit({p * y, p * x});
    return;
  }
  // bounds: 1/q < target (more entries follow) and target <= remaining/q
  BigInt lo = acc.back();
  if (num(target) * lo <= den(target)) lo = den(target) / num(target) + 1;
  BigInt hi = (BigInt(remaining) * den(target)) / num(target);
  BigInt root = floor_sqrt(lo);
  if (root * root < lo) ++root;
  std::vector<long> root_primes, added;
  for (BigInt q = root * root; q <= hi; ++root, q = root * root) {
    Rational rest = target - Rational(1) / Rational(q);
    prime_factors_fast((long)root, root_primes);
    // the largest entry alone must cover what the middle entries cannot
    BigInt m = least_square_multiple(den(rest), prime_hints, root_primes);
    Rational middles = Rational(remaining - 2) / Rational(q);
    if (rest - middles <= Rational(1) / Rational(m)) {
      added.clear();
      for (long pr : root_primes)
        if (prime_hints.insert(pr).second) added.push_back(pr);
      acc.push_back(q);
      norm_rec(remaining - 1, rest, acc, p, prime_hints, out);
      acc.pop_back();
      for (long pr : added) prime_hints.erase(pr);
    }
  }
}

}  // namespace detail

/// All norm vectors for dimension n, sorted; exactly the tuples passing
/// validate_norm_vector.
inline std::set<NormVector> enumerate_norm_vectors(long n) {
  if (n <= 0) throw std::domain_error("enumerate_norm_vectors: n must be >= 1");
  std::set<std::vector<BigInt>> dims_set;
  if (n == 1) {
    dims_set.insert({BigInt(1)});
  } else {
    for (long dn = 2; dn <= n; ++dn) {
      BigInt p = squarefree_part(BigInt(dn));
      if (n % 2 == 1 && p != 1) continue;  // odd n: all norms are squares
      // remaining sum over cofactors: 1/q_1 + ... + 1/q_{n-1} = p - p/d_n
      Rational target = Rational(p) - Rational(p) / Rational(dn);
      std::vector<BigInt> acc = {BigInt(dn) / p};
      std::set<long> hints;
      for (long pr : prime_factors(dn)) hints.insert(pr);
      detail::norm_rec(n - 1, target, acc, p, hints, dims_set);
    }
  }
  std::set<NormVector> out;
  for (const auto& dims : dims_set) out.insert(make_norm_vector(dims));
  return out;
}

}  // namespace imd
