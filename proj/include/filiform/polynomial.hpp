#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "filiform/rational.hpp"

namespace filiform {

/// Orders parameter names with embedded integers compared numerically,
/// so a_2 < a_10 < b_1_2 < g_1. This is the declared variable order for
/// every polynomial in the library.
int natural_compare(std::string_view a, std::string_view b);

/// Product of variables with positive exponents, kept sorted by name.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const std::string& var, int exp = 1);

  int degree() const;
  bool empty() const { return factors_.empty(); }
  const std::vector<std::pair<std::string, int>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& o) const;

  /// Graded lexicographic comparison: degree first, then lex on the
  /// exponent vector in the natural variable order. Returns -1/0/1.
  static int compare(const Monomial& x, const Monomial& y);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

  std::string str() const;

 private:
  std::vector<std::pair<std::string, int>> factors_;
};

/// Multivariate polynomial over Rational in canonical form: terms sorted
/// in descending graded-lex order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int c) : Polynomial(Rational(c)) {}
  Polynomial(const Rational& c);
  static Polynomial variable(const std::string& name);
  static Polynomial term(const Rational& c, const Monomial& m);

  /// Parses the text format `3/5*b_3_3 + 2*a_6 - g_1^2`.
  static Polynomial parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The constant value; requires is_constant().
  Rational constant_value() const;
  int total_degree() const;
  size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<Monomial, Rational>>& terms() const { return terms_; }

  std::set<std::string> variables() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }
  Polynomial operator*(const Rational& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  friend bool operator<(const Polynomial& a, const Polynomial& b);

  /// Exact evaluation. The assignment must bind every variable that
  /// appears; otherwise UnboundParameter listing the missing names.
  Rational eval(const std::map<std::string, Rational>& assignment) const;

  /// Substitutes the given variables, keeping the rest symbolic.
  Polynomial eval_partial(const std::map<std::string, Rational>& assignment) const;

  std::string str() const;

 private:
  void normalize(std::map<Monomial, Rational>&& acc);
  std::vector<std::pair<Monomial, Rational>> terms_;  // descending grlex
};

inline bool poly_equal(const Polynomial& p, const Polynomial& q) { return p == q; }

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace filiform
