#pragma once

// Text form of exact numbers, as used in JSON output and T-matrix files:
//   rationals    "-7/2"
//   cyclotomics  "1/2*z(8) + -1/2*z(8)^3"
//   algebraics   "(-5/2 + 1/2*x) mod (1 + 5*x + x^2)"

#include <imd/exact_value.hpp>

#include <cctype>
#include <sstream>
#include <string>

namespace imd {

inline std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << num(q);
  if (den(q) != 1) os << "/" << den(q);
  return os.str();
}

inline std::string to_string(const Cyclotomic& v) {
  if (v.is_rational()) return to_string(v.rational_value());
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, q] : v.coefficients()) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << to_string(q);
      continue;
    }
    os << to_string(q) << "*z(" << v.conductor() << ")";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

namespace detail {
inline std::string poly_to_string(const std::vector<Rational>& p) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << to_string(p[i]);
      continue;
    }
    os << to_string(p[i]) << "*x";
    if (i != 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}
}  // namespace detail

inline std::string to_string(const Algebraic& a) {
  std::vector<Rational> f(a.min_poly().size());
  for (size_t i = 0; i < f.size(); ++i) f[i] = Rational(a.min_poly()[i]);
  return "(" + detail::poly_to_string(a.representative()) + ") mod (" +
         detail::poly_to_string(f) + ")";
}

inline std::string to_string(const ExactValue& v) {
  return std::visit([](const auto& x) { return to_string(x); }, v);
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

struct ExactParser {
  // Intermediate values: rationals and cyclotomics merge; x-polynomials stay
  // separate so malformed mixtures are rejected.
  struct Val {
    Cyclotomic c;
    std::vector<Rational> poly;  // empty unless an x appeared
    bool is_poly = false;
  };

  std::string s;
  size_t pos = 0;

  explicit ExactParser(std::string in) : s(std::move(in)) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }

  bool eat(char ch) {
    skip_ws();
    if (pos < s.size() && s[pos] == ch) {
      ++pos;
      return true;
    }
    return false;
  }

  bool eat_word(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) == 0) {
      size_t after = pos + w.size();
      if (after >= s.size() || !std::isalnum((unsigned char)s[after])) {
        pos = after;
        return true;
      }
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(pos) + ": " + msg + " in '" +
                                s + "'");
  }

  BigInt parse_int() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) fail("expected integer");
    BigInt v(s.substr(start, pos - start));
    return neg ? -v : v;
  }

  static Val from_rational(const Rational& q) {
    Val v;
    v.c = Cyclotomic(q);
    return v;
  }

  Val mul(const Val& a, const Val& b) {
    if (a.is_poly && b.is_poly) {
      Val r;
      r.is_poly = true;
      r.poly.assign(a.poly.size() + b.poly.size() - 1, Rational(0));
      for (size_t i = 0; i < a.poly.size(); ++i)
        for (size_t j = 0; j < b.poly.size(); ++j)
          r.poly[i + j] += a.poly[i] * b.poly[j];
      return r;
    }
    if (a.is_poly || b.is_poly) {
      const Val& p = a.is_poly ? a : b;
      const Val& q = a.is_poly ? b : a;
      if (!q.c.is_rational()) fail("cannot mix z(*) and x");
      Val r = p;
      for (auto& c : r.poly) c *= q.c.rational_value();
      return r;
    }
    Val r;
    r.c = a.c * b.c;
    return r;
  }

  Val add(const Val& a, const Val& b, int sign) {
    if (a.is_poly || b.is_poly) {
      Val x = a, y = b;
      if (!x.is_poly) {
        if (!x.c.is_rational()) fail("cannot mix z(*) and x");
        x.is_poly = true;
        x.poly = {x.c.rational_value()};
      }
      if (!y.is_poly) {
        if (!y.c.is_rational()) fail("cannot mix z(*) and x");
        y.is_poly = true;
        y.poly = {y.c.rational_value()};
      }
      Val r;
      r.is_poly = true;
      r.poly.assign(std::max(x.poly.size(), y.poly.size()), Rational(0));
      for (size_t i = 0; i < x.poly.size(); ++i) r.poly[i] += x.poly[i];
      for (size_t i = 0; i < y.poly.size(); ++i)
        r.poly[i] += sign * y.poly[i];
      return r;
    }
    Val r;
    r.c = (sign > 0) ? a.c + b.c : a.c - b.c;
    return r;
  }

  Val parse_factor() {
    skip_ws();
    if (eat('(')) {
      Val v = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (eat_word("z")) {
      if (!eat('(')) fail("expected '(' after z");
      BigInt n = parse_int();
      if (!eat(')')) fail("expected ')'");
      long e = 1;
      if (eat('^')) e = (long)parse_int();
      Val v;
      v.c = Cyclotomic::root_of_unity((long)n, 0).pow(1);
      v.c = Cyclotomic::root_of_unity((long)n, e >= 0 ? e % (long)n
                                                      : ((e % (long)n) + (long)n) % (long)n);
      return v;
    }
    if (eat_word("x")) {
      long e = 1;
      if (eat('^')) {
        BigInt ee = parse_int();
        if (ee < 0) fail("negative power of x");
        e = (long)ee;
      }
      Val v;
      v.is_poly = true;
      v.poly.assign(e + 1, Rational(0));
      v.poly[e] = 1;
      return v;
    }
    BigInt a = parse_int();
    if (eat('/')) {
      BigInt b = parse_int();
      if (b == 0) fail("division by zero");
      return from_rational(Rational(a) / Rational(b));
    }
    return from_rational(Rational(a));
  }

  Val parse_term() {
    Val v = parse_factor();
    while (true) {
      skip_ws();
      if (eat('*')) {
        v = mul(v, parse_factor());
      } else {
        break;
      }
    }
    return v;
  }

  Val parse_sum() {
    skip_ws();
    int sign = 1;
    if (eat('-')) sign = -1;
    Val v = parse_term();
    if (sign < 0) v = add(from_rational(Rational(0)), v, -1);
    while (true) {
      skip_ws();
      if (eat('+')) {
        v = add(v, parse_term(), 1);
      } else if (eat('-')) {
        v = add(v, parse_term(), -1);
      } else {
        break;
      }
    }
    return v;
  }
};

}  // namespace detail

inline ExactValue parse_exact(const std::string& text) {
  // "rep mod minpoly" marks an algebraic number
  size_t mpos = text.find(" mod ");
  if (mpos != std::string::npos) {
    detail::ExactParser lhs(text.substr(0, mpos));
    detail::ExactParser rhs(text.substr(mpos + 5));
    auto rep = lhs.parse_sum();
    lhs.skip_ws();
    if (lhs.pos != lhs.s.size()) lhs.fail("trailing input");
    auto mp = rhs.parse_sum();
    rhs.skip_ws();
    if (rhs.pos != rhs.s.size()) rhs.fail("trailing input");
    if (!mp.is_poly) rhs.fail("expected polynomial in x after mod");
    std::vector<BigInt> f(mp.poly.size());
    for (size_t i = 0; i < f.size(); ++i) {
      if (!is_integer(mp.poly[i]))
        rhs.fail("minimal polynomial must have integer coefficients");
      f[i] = num(mp.poly[i]);
    }
    std::vector<Rational> r;
    if (rep.is_poly)
      r = rep.poly;
    else if (rep.c.is_rational())
      r = {rep.c.rational_value()};
    else
      lhs.fail("algebraic representative must be a polynomial in x");
    return Algebraic(std::move(f), std::move(r));
  }
  detail::ExactParser p(text);
  auto v = p.parse_sum();
  p.skip_ws();
  if (p.pos != p.s.size()) p.fail("trailing input");
  if (v.is_poly) p.fail("unexpected variable x");
  if (v.c.is_rational()) return v.c.rational_value();
  return v.c;
}

}  // namespace imd
