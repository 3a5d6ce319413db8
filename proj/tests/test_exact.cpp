#include <imd/exact_io.hpp>
#include <imd/exact_value.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace imd;

namespace {

std::mt19937 rng(20240811);

Rational random_rational() {
  std::uniform_int_distribution<long> n(-40, 40), d(1, 20);
  return Rational(n(rng)) / Rational(d(rng));
}

Cyclotomic random_cyclotomic(long conductor) {
  Cyclotomic v = Cyclotomic::zero(conductor);
  std::uniform_int_distribution<long> e(0, conductor - 1);
  for (int t = 0; t < 3; ++t)
    v = v + random_rational() * Cyclotomic::root_of_unity(conductor, e(rng));
  return v;
}

}  // namespace

TEST_CASE("integer_sqrt basics") {
  CHECK(integer_sqrt(BigInt(36)) == BigInt(6));
  CHECK(integer_sqrt(BigInt(0)) == BigInt(0));
  CHECK_FALSE(integer_sqrt(BigInt(2)).has_value());
  CHECK_THROWS_AS(integer_sqrt(BigInt(-1)), std::domain_error);
}

TEST_CASE("integer_sqrt recovers k for k^2 up to 10^6") {
  for (long k = 0; k <= 1000000; k += (k < 1000 ? 1 : 997))
    REQUIRE(integer_sqrt(BigInt(k) * k) == BigInt(k));
  // dense sweep of small values, sparse beyond
  for (long k = 0; k <= 2000; ++k)
    REQUIRE(integer_sqrt(BigInt(k) * k) == BigInt(k));
}

TEST_CASE("rational field axioms on random samples") {
  for (int t = 0; t < 200; ++t) {
    Rational a = random_rational(), b = random_rational(), c = random_rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == 0);
    if (a != 0) CHECK(a * (Rational(1) / a) == 1);
  }
}

TEST_CASE("cyclotomic ring laws at conductors up to 24") {
  for (long n : {1L, 3L, 4L, 8L, 12L, 24L}) {
    for (int t = 0; t < 12; ++t) {
      Cyclotomic x = random_cyclotomic(n), y = random_cyclotomic(n),
                 z = random_cyclotomic(n);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x * y).conjugated() == x.conjugated() * y.conjugated());
      CHECK(x.conjugated().conjugated() == x);
    }
    Cyclotomic zeta = Cyclotomic::root_of_unity(n, 1);
    CHECK(zeta * zeta.conjugated() == Rational(1));
  }
}

TEST_CASE("cyclotomic inverse") {
  for (long n : {5L, 8L, 12L}) {
    for (int t = 0; t < 8; ++t) {
      Cyclotomic x = random_cyclotomic(n);
      if (x.is_zero()) continue;
      CHECK(x * x.inverse() == Rational(1));
    }
  }
}

TEST_CASE("root of unity orders") {
  CHECK(Cyclotomic::root_of_unity(24, 1).order_as_root_of_unity() == 24);
  CHECK(Cyclotomic::one().order_as_root_of_unity() == 1);
  CHECK((-Cyclotomic::one()).order_as_root_of_unity() == 2);
  CHECK(Cyclotomic::root_of_unity(24, 16).order_as_root_of_unity() == 3);
  CHECK_FALSE((Cyclotomic::one() + Cyclotomic::one())
                  .order_as_root_of_unity()
                  .has_value());
  CHECK_THROWS_AS(Cyclotomic::zero().order_as_root_of_unity(),
                  std::domain_error);
  // returned order m is minimal: x^m = 1 and x^j != 1 for 0 < j < m
  for (long e : {1L, 5L, 7L, 9L, 16L}) {
    Cyclotomic x = Cyclotomic::root_of_unity(24, e);
    long m = *x.order_as_root_of_unity();
    CHECK(x.pow(m) == Rational(1));
    for (long j = 1; j < m; ++j) CHECK_FALSE(x.pow(j) == Rational(1));
  }
}

TEST_CASE("is_root_of_unity on algebraic numbers") {
  // a root of X^2+5X+1 is real with |x| != 1, so never a root of unity
  Algebraic alpha = Algebraic::generator({BigInt(1), BigInt(5), BigInt(1)});
  CHECK_FALSE(is_root_of_unity(ExactValue(alpha)).has_value());
  CHECK(is_root_of_unity(ExactValue(Rational(1))) == 1);
  CHECK(is_root_of_unity(ExactValue(Cyclotomic::root_of_unity(24, 1))) == 24);
  CHECK_THROWS_AS(is_root_of_unity(ExactValue(Rational(0))), std::domain_error);
  // i as a quadratic algebraic number has order 4
  Algebraic i = Algebraic::generator({BigInt(1), BigInt(0), BigInt(1)});
  CHECK(is_root_of_unity(ExactValue(i)) == 4);
}

TEST_CASE("cyclotomic embedding") {
  Cyclotomic minus1 = Cyclotomic::root_of_unity(2, 1);
  CHECK(minus1.embedded(24) == Rational(-1));
  CHECK(Cyclotomic::root_of_unity(3, 1).embedded(12) ==
        Cyclotomic::root_of_unity(12, 4));
  Cyclotomic sqrt2 =
      Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, 7);
  Cyclotomic emb = sqrt2.embedded(24);
  CHECK(emb * emb == Rational(2));
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(8, 1).embedded(12),
                  std::domain_error);
}

TEST_CASE("sqrt_in_cyclotomic squares back") {
  for (long d : {1L, 2L, 3L, 4L, 5L, 6L, 7L, 8L, 9L, 12L, 21L, 36L, 144L}) {
    Cyclotomic s = sqrt_in_cyclotomic(BigInt(d));
    CHECK(s * s == Rational(d));
    CHECK(s.conductor() % 2 == 0);
  }
  CHECK(sqrt_in_cyclotomic(BigInt(4)) == Rational(2));
  CHECK(sqrt_in_cyclotomic(BigInt(0)).is_zero());
}

TEST_CASE("algebraic arithmetic mod minimal polynomial") {
  Algebraic a = Algebraic::generator({BigInt(1), BigInt(5), BigInt(1)});
  // a satisfies a^2 = -5a - 1
  CHECK(a * a == Rational(-5) * a + Algebraic({BigInt(1), BigInt(5), BigInt(1)},
                                              {Rational(-1)}));
  CHECK(a * a.inverse() == Rational(1));
  // the two roots multiply to the constant term 1, so a^{-1} = -5 - a
  Algebraic expected({BigInt(1), BigInt(5), BigInt(1)},
                     {Rational(-5), Rational(-1)});
  CHECK(a.inverse() == expected);
  CHECK_THROWS_AS(Algebraic::generator({BigInt(-1), BigInt(0), BigInt(1)}),
                  std::domain_error);  // x^2 - 1 is reducible
}

TEST_CASE("quadratic algebraic embeds into a cyclotomic field") {
  Algebraic a = Algebraic::generator({BigInt(1), BigInt(5), BigInt(1)});
  Cyclotomic c = a.to_cyclotomic();
  CHECK(c * c + Rational(5) * c + Cyclotomic::one().embedded(c.conductor()) ==
        Rational(0));
}

TEST_CASE("text serialization round trips") {
  auto roundtrip = [](const ExactValue& v) {
    ExactValue back = parse_exact(to_string(v));
    CHECK(to_string(back) == to_string(v));
  };
  roundtrip(Rational(-7, 2));
  roundtrip(Rational(3));
  for (long n : {8L, 12L, 24L})
    for (int t = 0; t < 10; ++t) {
      Cyclotomic c = random_cyclotomic(n);
      if (c.is_rational())
        roundtrip(c.rational_value());
      else
        roundtrip(c);
    }
  Algebraic a({BigInt(1), BigInt(5), BigInt(1)},
              {Rational(-5, 2), Rational(1, 2)});
  roundtrip(a);

  CHECK(to_string(parse_exact("z(8) + -1*z(8)^3")) ==
        to_string(ExactValue(sqrt_in_cyclotomic(BigInt(2)))));
  CHECK(std::get<Rational>(parse_exact("-10/4")) == Rational(-5, 2));
  CHECK_THROWS_AS(parse_exact("z(8) + x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_exact("1 +"), std::invalid_argument);
}
