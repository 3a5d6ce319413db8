#pragma once

// Elements of Q[x]/(f) for a monic irreducible integer polynomial f of
// degree at most 4. Carries the non-cyclotomic T-matrix entries (quadratic
// irrationalities in the shipped fixtures).

#include <imd/cyclotomic.hpp>
#include <imd/integers.hpp>

#include <optional>
#include <variant>
#include <vector>

namespace imd {

class Algebraic {
 public:
  // which_root: an isolating rational interval for real roots, or abstract.
  struct Interval {
    Rational lo, hi;
  };

  Algebraic(std::vector<BigInt> min_poly, std::vector<Rational> rep,
            std::optional<Interval> which_root = std::nullopt)
      : f_(std::move(min_poly)), rep_(std::move(rep)), root_(which_root) {
    if (f_.size() < 2 || f_.size() > 5)
      throw std::domain_error("Algebraic: minimal polynomial degree must be 1..4");
    if (f_.back() != 1)
      throw std::domain_error("Algebraic: minimal polynomial must be monic");
    if (!is_irreducible(f_))
      throw std::domain_error("Algebraic: polynomial is reducible over Q");
    rep_.resize(degree(), Rational(0));
    reduce();
  }

  /// The generator x of Q[x]/(f).
  static Algebraic generator(std::vector<BigInt> min_poly,
                             std::optional<Interval> which_root = std::nullopt) {
    std::vector<Rational> x = {Rational(0), Rational(1)};
    if (min_poly.size() == 2) x = {Rational(-min_poly[0])};
    return Algebraic(std::move(min_poly), std::move(x), std::move(which_root));
  }

  long degree() const { return (long)f_.size() - 1; }
  const std::vector<BigInt>& min_poly() const { return f_; }
  const std::vector<Rational>& representative() const { return rep_; }
  const std::optional<Interval>& which_root() const { return root_; }

  bool is_zero() const {
    for (const auto& c : rep_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (size_t i = 1; i < rep_.size(); ++i)
      if (rep_[i] != 0) return false;
    return true;
  }

  Rational rational_value() const {
    if (!is_rational())
      throw std::domain_error("rational_value: value is irrational");
    return rep_.empty() ? Rational(0) : rep_[0];
  }

  friend Algebraic operator+(const Algebraic& a, const Algebraic& b) {
    a.check_same_field(b);
    Algebraic r = a;
    for (size_t i = 0; i < r.rep_.size(); ++i) r.rep_[i] += b.rep_[i];
    return r;
  }

  friend Algebraic operator-(const Algebraic& a, const Algebraic& b) {
    a.check_same_field(b);
    Algebraic r = a;
    for (size_t i = 0; i < r.rep_.size(); ++i) r.rep_[i] -= b.rep_[i];
    return r;
  }

  Algebraic operator-() const {
    Algebraic r = *this;
    for (auto& c : r.rep_) c = -c;
    return r;
  }

  friend Algebraic operator*(const Algebraic& a, const Algebraic& b) {
    a.check_same_field(b);
    Algebraic r = a;
    std::vector<Rational> prod(2 * a.degree() - 1, Rational(0));
    for (size_t i = 0; i < a.rep_.size(); ++i)
      for (size_t j = 0; j < b.rep_.size(); ++j)
        prod[i + j] += a.rep_[i] * b.rep_[j];
    r.rep_ = std::move(prod);
    r.reduce();
    return r;
  }

  friend Algebraic operator*(const Rational& q, const Algebraic& a) {
    Algebraic r = a;
    for (auto& c : r.rep_) c *= q;
    return r;
  }

  Algebraic inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    detail::PolyQ rep(rep_.begin(), rep_.end());
    detail::PolyQ modp(f_.size());
    for (size_t i = 0; i < f_.size(); ++i) modp[i] = Rational(f_[i]);
    auto [g, u] = detail::poly_half_ext_gcd(rep, modp);
    if (g.size() != 1)
      throw std::logic_error("inverse: gcd with minimal polynomial not constant");
    u = detail::poly_mod(u, modp);
    Algebraic r = *this;
    r.rep_.assign(degree(), Rational(0));
    for (size_t i = 0; i < u.size(); ++i) r.rep_[i] = u[i] / g[0];
    return r;
  }

  Algebraic pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Algebraic r = *this, x = *this;
    r.rep_.assign(degree(), Rational(0));
    r.rep_[0] = 1;
    while (e) {
      if (e & 1) r = r * x;
      x = x * x;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Algebraic& a, const Algebraic& b) {
    return a.f_ == b.f_ && a.rep_ == b.rep_;
  }

  bool operator==(const Rational& q) const {
    return is_rational() && rational_value() == q;
  }

  /// Multiplicative order when this is a root of unity, absent otherwise.
  /// A root of unity of order m has degree phi(m), so only orders with
  /// phi(m) <= deg f can occur.
  std::optional<long> order_as_root_of_unity() const {
    if (is_zero())
      throw std::domain_error("is_root_of_unity: argument is zero");
    for (long m : {1L, 2L, 3L, 4L, 6L, 5L, 8L, 10L, 12L}) {
      if (euler_phi(m) > degree() + 0L && m > 2) continue;
      if (pow(m) == Rational(1)) {
        long best = m;
        for (long p : prime_factors(m))
          while (best % p == 0 && pow(best / p) == Rational(1)) best /= p;
        return best;
      }
    }
    return std::nullopt;
  }

  /// Exact embedding into a cyclotomic field. Supported for rational values
  /// and for quadratic irrationalities with positive discriminant; other
  /// inputs are rejected.
  Cyclotomic to_cyclotomic() const {
    if (is_rational()) return Cyclotomic(rational_value());
    if (degree() != 2)
      throw std::domain_error(
          "to_cyclotomic: only quadratic algebraic numbers embed here");
    BigInt b = f_[1], c = f_[0];
    BigInt disc = b * b - 4 * c;
    if (disc <= 0)
      throw std::domain_error(
          "to_cyclotomic: nonreal quadratic values are not supported");
    Cyclotomic sq = sqrt_in_cyclotomic(disc);
    // alpha = (-b + sqrt(disc))/2 or its conjugate, fixed by the isolating
    // interval when present; abstract roots take the + branch.
    bool plus_branch = true;
    if (root_) {
      BigInt isq = floor_sqrt(disc);
      // sqrt(disc) lies in [isq, isq+1]; decide which root is in the interval
      Rational plus_lo = Rational(-b + isq) / 2, plus_hi = Rational(-b + isq + 1) / 2;
      if (plus_hi < root_->lo || plus_lo > root_->hi) plus_branch = false;
    }
    Cyclotomic root =
        Rational(1, 2) * (Cyclotomic(Rational(-b)).embedded(sq.conductor()) +
                          (plus_branch ? sq : -sq));
    Cyclotomic r(rep_[0]);
    return r.embedded(root.conductor()) + rep_[1] * root;
  }

 private:
  std::vector<BigInt> f_;
  std::vector<Rational> rep_;
  std::optional<Interval> root_;

  void check_same_field(const Algebraic& o) const {
    if (f_ != o.f_)
      throw std::domain_error("Algebraic: mixed minimal polynomials");
  }

  void reduce() {
    detail::PolyQ modp(f_.size());
    for (size_t i = 0; i < f_.size(); ++i) modp[i] = Rational(f_[i]);
    detail::PolyQ r = detail::poly_mod(
        detail::PolyQ(rep_.begin(), rep_.end()), modp);
    rep_.assign(degree(), Rational(0));
    for (size_t i = 0; i < r.size(); ++i) rep_[i] = r[i];
  }

  static bool is_irreducible(const std::vector<BigInt>& f) {
    long deg = (long)f.size() - 1;
    if (deg == 1) return true;
    // rational (here integer, since f is monic) roots
    BigInt c0 = f[0];
    if (c0 == 0) return false;
    for (BigInt d = 1; d * d <= abs(c0); ++d) {
      if (abs(c0) % d != 0) continue;
      for (BigInt root : {d, -d, abs(c0) / d, -abs(c0) / d}) {
        BigInt v = 0;
        for (long i = deg; i >= 0; --i) v = v * root + f[i];
        if (v == 0) return false;
      }
    }
    if (deg <= 3) return true;
    // degree 4: exclude factorizations into two monic integer quadratics
    // (x^2+a*x+b)(x^2+c*x+d) with b*d = f0, a+c = f3, b+d+ac = f2, ad+bc = f1
    for (BigInt b = -abs(f[0]); b <= abs(f[0]); ++b) {
      if (b == 0 || f[0] % b != 0) continue;
      BigInt d = f[0] / b;
      for (BigInt a = -abs(f[2]) - abs(b) - abs(d) - abs(f[3]) - 1;
           a <= abs(f[2]) + abs(b) + abs(d) + abs(f[3]) + 1; ++a) {
        BigInt c = f[3] - a;
        if (b + d + a * c == f[2] && a * d + b * c == f[1]) return false;
      }
    }
    return true;
  }
};

}  // namespace imd
