#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// Values are kept in canonical form: a sparse map exponent -> rational over
// the power basis {zeta_n^e : 0 <= e < phi(n)} obtained by reducing modulo
// the n-th cyclotomic polynomial. Two equal values at the same conductor have
// identical representations, so equality is plain map comparison.

#include <imd/integers.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

namespace imd {

constexpr long kMaxConductor = 720;

namespace detail {

using PolyZ = std::vector<BigInt>;  // dense, ascending degree

inline PolyZ poly_mul(const PolyZ& a, const PolyZ& b) {
  PolyZ r(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division of integer polynomials (remainder must vanish).
inline PolyZ poly_div_exact(PolyZ a, const PolyZ& b) {
  PolyZ q(a.size() - b.size() + 1, BigInt(0));
  for (long i = (long)q.size() - 1; i >= 0; --i) {
    BigInt c = a[i + b.size() - 1] / b.back();
    q[i] = c;
    if (c != 0)
      for (size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  for (const BigInt& c : a)
    if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

struct ConductorData {
  long n = 1;
  long phi = 1;
  PolyZ cyclo;                              // Phi_n, monic, degree phi
  std::vector<std::vector<BigInt>> reduce;  // x^e mod Phi_n for e in [phi, n)
};

class ConductorRegistry {
 public:
  static const ConductorData& get(long n) {
    if (n < 1 || n > kMaxConductor)
      throw std::domain_error("conductor out of range [1, 720]: " +
                              std::to_string(n));
    static ConductorRegistry reg;
    std::lock_guard<std::mutex> lock(reg.mu_);
    return *reg.get_locked(n);
  }

 private:
  std::mutex mu_;
  std::unordered_map<long, std::unique_ptr<ConductorData>> cache_;

  const ConductorData* get_locked(long n) {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second.get();
    auto data = std::make_unique<ConductorData>();
    data->n = n;
    data->phi = euler_phi(n);
    data->cyclo = cyclotomic_poly_locked(n);
    data->reduce.resize(n - data->phi);
    if (n > data->phi) {
      long phi = data->phi;
      std::vector<BigInt> row(phi, BigInt(0));
      for (long j = 0; j < phi; ++j) row[j] = -data->cyclo[j];
      data->reduce[0] = row;
      for (long e = data->phi + 1; e < n; ++e) {
        std::vector<BigInt> next(phi, BigInt(0));
        BigInt top = row[phi - 1];
        for (long j = phi - 1; j >= 1; --j) next[j] = row[j - 1];
        if (top != 0)
          for (long j = 0; j < phi; ++j) next[j] -= top * data->cyclo[j];
        row = std::move(next);
        data->reduce[e - data->phi] = row;
      }
    }
    auto* ptr = data.get();
    cache_.emplace(n, std::move(data));
    return ptr;
  }

  PolyZ cyclotomic_poly_locked(long n) {
    auto it = cyclo_cache_.find(n);
    if (it != cyclo_cache_.end()) return it->second;
    PolyZ result;
    if (n == 1) {
      result = {BigInt(-1), BigInt(1)};
    } else {
      PolyZ xn1(n + 1, BigInt(0));
      xn1[0] = -1;
      xn1[n] = 1;
      for (long d : divisors(n))
        if (d < n) xn1 = poly_div_exact(xn1, cyclotomic_poly_locked(d));
      result = xn1;
    }
    cyclo_cache_[n] = result;
    return result;
  }

  std::unordered_map<long, PolyZ> cyclo_cache_;
};

using PolyQ = std::vector<Rational>;  // dense, ascending

inline void poly_trim(PolyQ& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline PolyQ poly_mod(PolyQ a, const PolyQ& m) {
  poly_trim(a);
  while (a.size() >= m.size()) {
    Rational c = a.back() / m.back();
    size_t off = a.size() - m.size();
    for (size_t j = 0; j < m.size(); ++j) a[off + j] -= c * m[j];
    poly_trim(a);
  }
  return a;
}

// Extended Euclid in Q[x]: returns (g, u) with u*a = g mod m, g = gcd(a, m).
inline std::pair<PolyQ, PolyQ> poly_half_ext_gcd(PolyQ a, PolyQ m) {
  PolyQ r0 = std::move(m), r1 = std::move(a);
  PolyQ u0 = {}, u1 = {Rational(1)};
  poly_trim(r0);
  poly_trim(r1);
  while (!r1.empty()) {
    // divide r0 by r1
    PolyQ q(std::max<size_t>(r0.size(), r1.size()), Rational(0));
    PolyQ rem = r0;
    PolyQ qq;
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rational c = rem.back() / r1.back();
      size_t off = rem.size() - r1.size();
      if (qq.size() < off + 1) qq.resize(off + 1, Rational(0));
      qq[off] += c;
      for (size_t j = 0; j < r1.size(); ++j) rem[off + j] -= c * r1[j];
      poly_trim(rem);
    }
    // u2 = u0 - qq*u1
    PolyQ u2 = u0;
    if (!qq.empty() && !u1.empty()) {
      PolyQ prod(qq.size() + u1.size() - 1, Rational(0));
      for (size_t i = 0; i < qq.size(); ++i)
        for (size_t j = 0; j < u1.size(); ++j) prod[i + j] += qq[i] * u1[j];
      if (u2.size() < prod.size()) u2.resize(prod.size(), Rational(0));
      for (size_t i = 0; i < prod.size(); ++i) u2[i] -= prod[i];
    }
    poly_trim(u2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  return {r0, u0};
}

}  // namespace detail

class Cyclotomic {
 public:
  Cyclotomic() : n_(1) {}

  explicit Cyclotomic(const Rational& q, long conductor = 1) : n_(conductor) {
    detail::ConductorRegistry::get(n_);
    if (q != 0) c_[0] = q;
  }

  static Cyclotomic root_of_unity(long n, long e) {
    Cyclotomic z;
    z.n_ = n;
    e %= n;
    if (e < 0) e += n;
    z.c_[e] = 1;
    z.canonicalize();
    return z;
  }

  static Cyclotomic zero(long n = 1) { return Cyclotomic(Rational(0), n); }
  static Cyclotomic one(long n = 1) { return Cyclotomic(Rational(1), n); }

  long conductor() const { return n_; }
  const std::map<long, Rational>& coefficients() const { return c_; }

  bool is_zero() const { return c_.empty(); }

  bool is_rational() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
  }

  Rational rational_value() const {
    if (c_.empty()) return Rational(0);
    if (!is_rational())
      throw std::domain_error("rational_value: value is irrational");
    return c_.begin()->second;
  }

  /// Value-preserving re-representation at a larger conductor.
  Cyclotomic embedded(long m) const {
    if (m % n_ != 0)
      throw std::domain_error("cyclotomic_embed: conductor " +
                              std::to_string(n_) + " does not divide " +
                              std::to_string(m));
    if (m == n_) return *this;
    Cyclotomic r;
    r.n_ = m;
    long k = m / n_;
    for (const auto& [e, q] : c_) r.c_[e * k] = q;
    r.canonicalize();
    return r;
  }

  Cyclotomic conjugated() const {
    Cyclotomic r;
    r.n_ = n_;
    for (const auto& [e, q] : c_) r.c_[e == 0 ? 0 : n_ - e] += q;
    r.canonicalize();
    return r;
  }

  /// Galois action zeta -> zeta^a, for a coprime to the conductor.
  Cyclotomic galois(long a) const {
    a %= n_;
    if (a < 0) a += n_;
    if (gcd_long(a, n_) != 1)
      throw std::domain_error("galois: exponent not coprime to conductor");
    Cyclotomic r;
    r.n_ = n_;
    for (const auto& [e, q] : c_) r.c_[(e * a) % n_] += q;
    r.canonicalize();
    return r;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = to_common(a, b);
    for (const auto& [e, q] : y.c_) {
      x.c_[e] += q;
      if (x.c_[e] == 0) x.c_.erase(e);
    }
    return x;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = to_common(a, b);
    for (const auto& [e, q] : y.c_) {
      x.c_[e] -= q;
      if (x.c_[e] == 0) x.c_.erase(e);
    }
    return x;
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& [e, q] : r.c_) q = -q;
    return r;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = to_common(a, b);
    Cyclotomic r;
    r.n_ = x.n_;
    for (const auto& [e1, q1] : x.c_)
      for (const auto& [e2, q2] : y.c_) r.c_[(e1 + e2) % r.n_] += q1 * q2;
    r.canonicalize();
    return r;
  }

  friend Cyclotomic operator*(const Rational& q, const Cyclotomic& a) {
    Cyclotomic r;
    r.n_ = a.n_;
    if (q != 0)
      for (const auto& [e, c] : a.c_) r.c_[e] = q * c;
    return r;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Rational& q) {
    return q * a;
  }

  Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (is_rational())
      return Cyclotomic(Rational(1) / rational_value(), n_);
    const auto& data = detail::ConductorRegistry::get(n_);
    detail::PolyQ rep(data.phi, Rational(0));
    for (const auto& [e, q] : c_) rep[e] = q;
    detail::PolyQ modp(data.cyclo.size());
    for (size_t i = 0; i < data.cyclo.size(); ++i)
      modp[i] = Rational(data.cyclo[i]);
    auto [g, u] = detail::poly_half_ext_gcd(rep, modp);
    if (g.size() != 1)
      throw std::logic_error("inverse: gcd with cyclotomic poly not constant");
    u = detail::poly_mod(u, modp);
    Cyclotomic r;
    r.n_ = n_;
    for (size_t i = 0; i < u.size(); ++i)
      if (u[i] != 0) r.c_[(long)i] = u[i] / g[0];
    return r;
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }

  Cyclotomic pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic r = Cyclotomic::one(n_), x = *this;
    while (e) {
      if (e & 1) r = r * x;
      x = x * x;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    auto [x, y] = to_common(a, b);
    return x.c_ == y.c_;
  }

  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
    return !(a == b);
  }

  bool operator==(const Rational& q) const {
    if (q == 0) return c_.empty();
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == q;
  }

  /// Multiplicative order when this is a root of unity, absent otherwise.
  std::optional<long> order_as_root_of_unity() const {
    if (is_zero())
      throw std::domain_error("is_root_of_unity: argument is zero");
    long m = lcm_long(2, n_);
    if (!(pow(m) == Rational(1))) return std::nullopt;
    for (long p : prime_factors(m))
      while (m % p == 0 && pow(m / p) == Rational(1)) m /= p;
    return m;
  }

  /// Strict ordering on representations; used for deterministic sorting only.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ != b.n_) {
      auto [x, y] = to_common(a, b);
      return x.c_ < y.c_;
    }
    return a.c_ < b.c_;
  }

  static std::pair<Cyclotomic, Cyclotomic> to_common(const Cyclotomic& a,
                                                     const Cyclotomic& b) {
    if (a.n_ == b.n_) return {a, b};
    long m = lcm_long(a.n_, b.n_);
    return {a.embedded(m), b.embedded(m)};
  }

 private:
  long n_;
  std::map<long, Rational> c_;

  void canonicalize() {
    const auto& data = detail::ConductorRegistry::get(n_);
    bool needs = false;
    for (const auto& [e, q] : c_)
      if (e >= data.phi) {
        needs = true;
        break;
      }
    if (needs) {
      std::vector<Rational> dense(n_, Rational(0));
      for (const auto& [e, q] : c_) dense[e] += q;
      for (long e = n_ - 1; e >= data.phi; --e) {
        if (dense[e] == 0) continue;
        const auto& row = data.reduce[e - data.phi];
        for (long j = 0; j < data.phi; ++j)
          if (row[j] != 0) dense[j] += dense[e] * Rational(row[j]);
        dense[e] = 0;
      }
      c_.clear();
      for (long e = 0; e < data.phi; ++e)
        if (dense[e] != 0) c_[e] = dense[e];
    } else {
      for (auto it = c_.begin(); it != c_.end();)
        it = (it->second == 0) ? c_.erase(it) : std::next(it);
    }
  }
};

/// The positive square root of a nonnegative integer as an exact cyclotomic
/// value (e.g. sqrt(2) = z8 + z8^-1), at the least even conductor carrying it.
inline Cyclotomic sqrt_in_cyclotomic(const BigInt& d) {
  if (d < 0) throw std::domain_error("sqrt_in_cyclotomic: negative argument");
  if (d == 0) return Cyclotomic::zero(2);
  auto [f, m] = square_split(d);
  Cyclotomic r(Rational(f), 2);
  for (const auto& [pb, e] : factorize(m)) {
    long p = (long)pb;
    Cyclotomic s = Cyclotomic::zero();
    if (p == 2) {
      s = Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, 7);
    } else {
      // quadratic Gauss sum: sum of legendre(a,p) zeta_p^a equals sqrt(p)
      // for p = 1 mod 4 and i*sqrt(p) for p = 3 mod 4
      long cond = (p % 4 == 1) ? p : 4 * p;
      s = Cyclotomic::zero(cond);
      for (long a = 1; a < p; ++a) {
        // Euler's criterion via fast exponentiation mod p
        long leg = 1, base = a % p, ex = (p - 1) / 2;
        long acc = 1;
        while (ex) {
          if (ex & 1) acc = (acc * base) % p;
          base = (base * base) % p;
          ex >>= 1;
        }
        leg = (acc == 1) ? 1 : -1;
        Cyclotomic term = Cyclotomic::root_of_unity(cond, a * (cond / p));
        s = (leg == 1) ? s + term : s - term;
      }
      if (p % 4 == 3)
        s = s * Cyclotomic::root_of_unity(4, 3).embedded(cond);
    }
    r = r * s;
  }
  return r;
}

}  // namespace imd
