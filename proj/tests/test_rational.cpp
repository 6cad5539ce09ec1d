#include <doctest.h>

#include <random>

#include "filiform/rational.hpp"

using namespace filiform;

TEST_CASE("rational canonical form") {
  Rational r(BigInt(6), BigInt(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(BigInt(0), BigInt(7)).str() == "0");
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), Error);
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(BigInt(22), BigInt(7));
  CHECK(a * (Rational(1) / a) == Rational(1));
  CHECK(Rational::parse("3/5") + Rational::parse("2/5") == Rational(1));
  CHECK(Rational::parse("-7/3") * Rational::parse("3/7") == Rational(-1));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("10") == Rational(10));
  CHECK(Rational::parse("-4/6") == Rational(BigInt(-2), BigInt(3)));
  CHECK(Rational::parse(" 1 / 858 ").denominator() == 858);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), Error);
}

TEST_CASE("binomial values and conventions") {
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(3, -1) == Rational(0));
  CHECK(binomial(2, 3) == Rational(0));
  CHECK(binomial(0, 0) == Rational(1));
  CHECK(binomial(-1, -1) == Rational(0));
  CHECK_THROWS_AS(binomial(-1, 0), Error);
  CHECK_THROWS_AS(binomial(-3, 2), Error);
  // big enough to overflow any machine integer
  CHECK(binomial(64, 32) == Rational(BigInt("1832624140942590534")));
}

TEST_CASE("Pascal recurrence") {
  for (long long a = 0; a <= 24; ++a)
    for (long long k = 0; k <= a; ++k) {
      Rational expected = k == 0 ? Rational(1) : binomial(a - 1, k - 1) + binomial(a - 1, k);
      if (a == 0) expected = Rational(1);
      CHECK(binomial(a, k) == expected);
    }
}

TEST_CASE("Vandermonde identity on random instances") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<int> d(0, 12);
  for (int trial = 0; trial < 50; ++trial) {
    long long m = d(rng), n = d(rng), k = d(rng);
    Rational sum(0);
    for (long long j = 0; j <= k; ++j) sum += binomial(m, j) * binomial(n, k - j);
    CHECK(sum == binomial(m + n, k));
  }
}
