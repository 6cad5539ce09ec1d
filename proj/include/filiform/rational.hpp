#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "filiform/errors.hpp"

namespace filiform {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in canonical form
/// (denominator > 0, gcd(|num|, den) = 1).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long long n) : v_(n) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "p/q" or an integer string. Throws ParseError.
  static Rational parse(std::string_view s);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// "p/q" when the denominator is not 1, plain integer otherwise.
  std::string str() const;

 private:
  boost::multiprecision::cpp_rational v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Binomial coefficient C(a, k). Returns 0 for k < 0 and for k > a >= 0;
/// rejects a < 0 with k >= 0 (NegativeUpperIndex) instead of silently
/// extending to the generalized binomial.
Rational binomial(long long a, long long k);

}  // namespace filiform
