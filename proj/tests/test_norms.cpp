#include <imd/norms.hpp>

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace imd;

namespace {
std::vector<BigInt> dims(std::initializer_list<long> xs) {
  std::vector<BigInt> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}
}  // namespace

TEST_CASE("norm vectors in dimensions 1 and 2 are forced") {
  auto s1 = enumerate_norm_vectors(1);
  REQUIRE(s1.size() == 1);
  CHECK(s1.begin()->dims == dims({1}));

  auto s2 = enumerate_norm_vectors(2);
  REQUIRE(s2.size() == 1);
  CHECK(s2.begin()->dims == dims({2, 2}));

  CHECK_THROWS_AS(enumerate_norm_vectors(0), std::domain_error);
}

TEST_CASE("dimension 4 contains the all-fours vector") {
  auto s = enumerate_norm_vectors(4);
  bool found = false;
  for (const auto& v : s) found = found || v.dims == dims({4, 4, 4, 4});
  CHECK(found);
}

TEST_CASE("validate_norm_vector names failing invariants") {
  CHECK(validate_norm_vector(dims({2, 2})).all_passed());

  auto v333 = validate_norm_vector(dims({3, 3, 3}));
  CHECK_FALSE(v333.all_passed());
  for (const auto& c : v333.checks) {
    if (c.name == "n odd: all d_i squares")
      CHECK_FALSE(c.passed);
    else
      CHECK(c.passed);
  }

  auto v442 = validate_norm_vector(dims({4, 4, 2}));
  CHECK_FALSE(v442.all_passed());
  for (const auto& c : v442.checks) {
    if (c.name == "sum of inverses equals 1") CHECK(c.passed);
    if (c.name == "d_1/d_i is a perfect square") CHECK_FALSE(c.passed);
  }
}

TEST_CASE("every enumerated vector passes validation") {
  for (long n = 1; n <= 12; ++n)
    for (const auto& v : enumerate_norm_vectors(n)) {
      CAPTURE(n);
      REQUIRE(validate_norm_vector(v.dims).all_passed());
      REQUIRE((long)v.dims.size() == n);
      for (size_t i = 0; i < v.dims.size(); ++i)
        REQUIRE(v.cofactors[i] == v.dims[0] / v.dims[i]);
    }
}

TEST_CASE("outputs are non-empty for n = 2..12") {
  for (long n = 2; n <= 12; ++n) CHECK_FALSE(enumerate_norm_vectors(n).empty());
}

TEST_CASE("recursion matches brute-force oracle for n <= 8") {
  for (long n = 1; n <= 8; ++n) {
    auto got = enumerate_norm_vectors(n);
    auto expected = oracle::norm_vectors_brute_force(n);
    std::set<std::vector<BigInt>> got_dims;
    for (const auto& v : got) got_dims.insert(v.dims);
    CAPTURE(n);
    CHECK(got_dims == expected);
  }
}
