#include "filiform/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace filiform {

int natural_compare(std::string_view a, std::string_view b) {
  size_t i = 0, j = 0;
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      size_t i0 = i, j0 = j;
      while (i < a.size() && is_digit(a[i])) ++i;
      while (j < b.size() && is_digit(b[j])) ++j;
      std::string_view na = a.substr(i0, i - i0), nb = b.substr(j0, j - j0);
      size_t pa = na.find_first_not_of('0'), pb = nb.find_first_not_of('0');
      na = pa == std::string_view::npos ? na.substr(na.size() - 1) : na.substr(pa);
      nb = pb == std::string_view::npos ? nb.substr(nb.size() - 1) : nb.substr(pb);
      if (na.size() != nb.size()) return na.size() < nb.size() ? -1 : 1;
      if (int c = na.compare(nb); c != 0) return c < 0 ? -1 : 1;
    } else {
      if (a[i] != b[j]) return a[i] < b[j] ? -1 : 1;
      ++i;
      ++j;
    }
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  return 0;
}

Monomial::Monomial(const std::string& var, int exp) {
  if (exp != 0) factors_.emplace_back(var, exp);
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < factors_.size() && j < o.factors_.size()) {
    int c = natural_compare(factors_[i].first, o.factors_[j].first);
    if (c < 0) {
      r.factors_.push_back(factors_[i++]);
    } else if (c > 0) {
      r.factors_.push_back(o.factors_[j++]);
    } else {
      int e = factors_[i].second + o.factors_[j].second;
      if (e != 0) r.factors_.emplace_back(factors_[i].first, e);
      ++i;
      ++j;
    }
  }
  while (i < factors_.size()) r.factors_.push_back(factors_[i++]);
  while (j < o.factors_.size()) r.factors_.push_back(o.factors_[j++]);
  return r;
}

int Monomial::compare(const Monomial& x, const Monomial& y) {
  int dx = x.degree(), dy = y.degree();
  if (dx != dy) return dx < dy ? -1 : 1;
  size_t i = 0, j = 0;
  while (i < x.factors_.size() && j < y.factors_.size()) {
    int c = natural_compare(x.factors_[i].first, y.factors_[j].first);
    if (c < 0) return 1;   // x carries the earlier variable
    if (c > 0) return -1;
    if (x.factors_[i].second != y.factors_[j].second)
      return x.factors_[i].second > y.factors_[j].second ? 1 : -1;
    ++i;
    ++j;
  }
  if (i < x.factors_.size()) return 1;
  if (j < y.factors_.size()) return -1;
  return 0;
}

std::string Monomial::str() const {
  std::string out;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += '*';
    out += factors_[i].first;
    if (factors_[i].second != 1) {
      out += '^';
      out += std::to_string(factors_[i].second);
    }
  }
  return out;
}

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial(), c);
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.terms_.emplace_back(Monomial(name), Rational(1));
  return p;
}

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw Error(Errc::ParametricInput, "polynomial '" + str() + "' is not constant");
  return terms_[0].second;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::set<std::string> Polynomial::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) out.insert(v);
  return out;
}

void Polynomial::normalize(std::map<Monomial, Rational>&& acc) {
  terms_.clear();
  terms_.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (!it->second.is_zero()) terms_.emplace_back(it->first, it->second);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  std::vector<std::pair<Monomial, Rational>> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = Monomial::compare(terms_[i].first, o.terms_[j].first);
    if (c > 0) {
      merged.push_back(terms_[i++]);
    } else if (c < 0) {
      merged.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].second + o.terms_[j].second;
      if (!s.is_zero()) merged.emplace_back(terms_[i].first, s);
      ++i;
      ++j;
    }
  }
  while (i < terms_.size()) merged.push_back(terms_[i++]);
  while (j < o.terms_.size()) merged.push_back(o.terms_[j++]);
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::map<Monomial, Rational> acc;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma * mb;
      auto [it, inserted] = acc.emplace(std::move(m), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  Polynomial r;
  r.normalize(std::move(acc));
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c.is_zero()) return Polynomial();
  Polynomial r(*this);
  for (auto& [m, k] : r.terms_) k *= c;
  return r;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  size_t i = 0;
  for (; i < a.terms_.size() && i < b.terms_.size(); ++i) {
    if (int c = Monomial::compare(a.terms_[i].first, b.terms_[i].first); c != 0) return c < 0;
    if (a.terms_[i].second != b.terms_[i].second) return a.terms_[i].second < b.terms_[i].second;
  }
  return a.terms_.size() < b.terms_.size();
}

Rational Polynomial::eval(const std::map<std::string, Rational>& assignment) const {
  std::string missing;
  for (const auto& v : variables())
    if (!assignment.count(v)) missing += missing.empty() ? v : ", " + v;
  if (!missing.empty()) throw Error(Errc::UnboundParameter, "unbound parameters: " + missing);

  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m.factors()) {
      const Rational& x = assignment.at(v);
      for (int k = 0; k < e; ++k) t *= x;
    }
    total += t;
  }
  return total;
}

Polynomial Polynomial::eval_partial(const std::map<std::string, Rational>& assignment) const {
  std::map<Monomial, Rational> acc;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial rest;
    for (const auto& [v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        rest = rest * Monomial(v, e);
      } else {
        for (int k = 0; k < e; ++k) coeff *= it->second;
      }
    }
    if (coeff.is_zero()) continue;
    auto [it, inserted] = acc.emplace(std::move(rest), coeff);
    if (!inserted) it->second += coeff;
  }
  Polynomial r;
  r.normalize(std::move(acc));
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const auto& [m, c] = terms_[i];
    Rational a = c;
    if (i == 0) {
      if (a.sign() < 0) {
        out += '-';
        a = -a;
      }
    } else {
      out += a.sign() < 0 ? " - " : " + ";
      if (a.sign() < 0) a = -a;
    }
    if (m.empty()) {
      out += a.str();
    } else if (a == Rational(1)) {
      out += m.str();
    } else {
      out += a.str();
      out += '*';
      out += m.str();
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

namespace {

struct PolyParser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) {
    throw Error(Errc::ParseError, what + " at position " + std::to_string(pos) + " in '" + std::string(s) + "'");
  }

  BigInt read_uint() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected number");
    return BigInt(std::string(s.substr(start, pos - start)));
  }

  Rational read_rational() {
    BigInt num = read_uint();
    skip_ws();
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      BigInt den = read_uint();
      if (den.is_zero()) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  std::string read_identifier() {
    skip_ws();
    size_t start = pos;
    auto ok_first = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto ok_rest = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (pos >= s.size() || !ok_first(s[pos])) fail("expected identifier");
    ++pos;
    while (pos < s.size() && ok_rest(s[pos])) ++pos;
    return std::string(s.substr(start, pos - start));
  }

  // term := factor ('*' factor)*
  Polynomial read_term() {
    Rational coeff(1);
    Monomial mono;
    bool first = true;
    while (true) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= read_rational();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name = read_identifier();
        int exp = 1;
        if (peek() == '^') {
          ++pos;
          bool neg = false;
          if (peek() == '-') {
            neg = true;
            ++pos;
          }
          BigInt e = read_uint();
          if (e > 1024) fail("exponent too large");
          exp = static_cast<int>(e);
          if (neg) fail("negative exponent");
        }
        mono = mono * Monomial(name, exp);
      } else if (first) {
        fail("expected term");
      }
      first = false;
      if (peek() == '*') {
        ++pos;
        continue;
      }
      break;
    }
    return Polynomial::term(coeff, mono);
  }

  Polynomial parse() {
    Polynomial total;
    bool neg = false;
    if (peek() == '+') {
      ++pos;
    } else if (peek() == '-') {
      neg = true;
      ++pos;
    }
    while (true) {
      Polynomial t = read_term();
      total += neg ? -t : t;
      if (eof()) break;
      char c = peek();
      if (c == '+') {
        neg = false;
        ++pos;
      } else if (c == '-') {
        neg = true;
        ++pos;
      } else {
        fail("expected '+' or '-'");
      }
    }
    return total;
  }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) {
  PolyParser p{text};
  if (p.eof()) throw Error(Errc::ParseError, "empty polynomial text");
  return p.parse();
}

}  // namespace filiform
