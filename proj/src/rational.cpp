#include "filiform/rational.hpp"

#include <cctype>
#include <ostream>

namespace filiform {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NegativeUpperIndex: return "NegativeUpperIndex";
    case Errc::UnboundParameter: return "UnboundParameter";
    case Errc::ParseError: return "ParseError";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::ParametricInput: return "ParametricInput";
    case Errc::NotFiliform: return "NotFiliform";
    case Errc::NotAdapted: return "NotAdapted";
    case Errc::SearchFailed: return "SearchFailed";
    case Errc::InvalidTriple: return "InvalidTriple";
    case Errc::InvalidDimension: return "InvalidDimension";
    case Errc::IndexGuard: return "IndexGuard";
    case Errc::DegenerateDenominator: return "DegenerateDenominator";
    case Errc::NotInRegion: return "NotInRegion";
    case Errc::SignPatternFailure: return "SignPatternFailure";
    case Errc::PreconditionFailure: return "PreconditionFailure";
    case Errc::VerificationFailure: return "VerificationFailure";
    case Errc::BadFile: return "BadFile";
  }
  return "Unknown";
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  if (den < 0)
    v_ = boost::multiprecision::cpp_rational(BigInt(-num), BigInt(-den));
  else
    v_ = boost::multiprecision::cpp_rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational Rational::parse(std::string_view s) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto read_int = [&]() -> BigInt {
    skip_ws();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      neg = s[pos] == '-';
      ++pos;
    }
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw Error(Errc::ParseError, "expected integer in '" + std::string(s) + "'");
    BigInt v(std::string(s.substr(start, pos - start)));
    return neg ? BigInt(-v) : v;
  };

  BigInt num = read_int();
  skip_ws();
  BigInt den = 1;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    den = read_int();
    if (den.is_zero()) throw Error(Errc::ParseError, "zero denominator in '" + std::string(s) + "'");
  }
  skip_ws();
  if (pos != s.size()) throw Error(Errc::ParseError, "trailing characters in rational '" + std::string(s) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  std::string out = numerator().str();
  if (!is_integer()) {
    out += '/';
    out += denominator().str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(long long a, long long k) {
  if (k < 0) return Rational(0);
  if (a < 0) throw Error(Errc::NegativeUpperIndex, "binomial(" + std::to_string(a) + "," + std::to_string(k) + ") with negative upper index");
  if (k > a) return Rational(0);
  if (k > a - k) k = a - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (a - k + i);
    r /= i;  // exact at every step
  }
  return Rational(r);
}

}  // namespace filiform
