#include "filiform/lie_algebra.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace filiform {

namespace {

void check_index(int h, int n, const char* what) {
  if (h < 1 || h > n)
    throw Error(Errc::IndexOutOfRange, std::string(what) + " index " + std::to_string(h) +
                                           " outside [1, " + std::to_string(n) + "]");
}

}  // namespace

LieAlgebra::LieAlgebra(int n, Table table) : n_(n) {
  if (n < 1) throw Error(Errc::InvalidDimension, "dimension must be >= 1");
  std::set<std::string> vars;
  for (auto& [ij, vec] : table) {
    auto [i, j] = ij;
    if (!(1 <= i && i < j && j <= n))
      throw Error(Errc::IndexOutOfRange, "bracket pair (" + std::to_string(i) + "," + std::to_string(j) + ") must satisfy 1 <= i < j <= n");
    if (static_cast<int>(vec.size()) != n)
      throw Error(Errc::DimensionMismatch, "coefficient vector length mismatch");
    bool nonzero = false;
    for (const auto& p : vec) {
      nonzero = nonzero || !p.is_zero();
      for (const auto& v : p.variables()) vars.insert(v);
    }
    if (nonzero) table_.emplace(ij, std::move(vec));
  }
  parameters_.assign(vars.begin(), vars.end());
  std::sort(parameters_.begin(), parameters_.end(),
            [](const std::string& a, const std::string& b) { return natural_compare(a, b) < 0; });
}

const PolyVec* LieAlgebra::find(int i, int j) const {
  auto it = table_.find({i, j});
  return it == table_.end() ? nullptr : &it->second;
}

PolyVec LieAlgebra::basis_vector(int i) const {
  check_index(i, n_, "basis");
  PolyVec v(n_);
  v[i - 1] = Polynomial(1);
  return v;
}

Polynomial LieAlgebra::coord(const PolyVec& u, int h) {
  check_index(h, static_cast<int>(u.size()), "coordinate");
  return u[h - 1];
}

PolyVec LieAlgebra::bracket_basis(int i, int j) const {
  check_index(i, n_, "bracket");
  check_index(j, n_, "bracket");
  PolyVec out(n_);
  if (i == j) return out;
  bool flip = i > j;
  if (flip) std::swap(i, j);
  const PolyVec* v = find(i, j);
  if (!v) return out;
  for (int h = 0; h < n_; ++h) out[h] = flip ? -(*v)[h] : (*v)[h];
  return out;
}

PolyVec LieAlgebra::bracket(const PolyVec& u, const PolyVec& v) const {
  if (static_cast<int>(u.size()) != n_ || static_cast<int>(v.size()) != n_)
    throw Error(Errc::DimensionMismatch, "vector length does not match algebra dimension");
  PolyVec out(n_);
  for (const auto& [ij, c] : table_) {
    auto [i, j] = ij;
    Polynomial w = u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1];
    if (w.is_zero()) continue;
    for (int h = 0; h < n_; ++h)
      if (!c[h].is_zero()) out[h] += w * c[h];
  }
  return out;
}

PolyVec LieAlgebra::jacobiator(int i, int j, int k) const {
  if (!(1 <= i && i < j && j < k && k <= n_))
    throw Error(Errc::IndexOutOfRange, "jacobiator requires 1 <= i < j < k <= n");
  PolyVec out(n_);
  auto add_term = [&](int a, int b, int c) {
    // [[e_a, e_b], e_c]
    PolyVec ab = bracket_basis(a, b);
    for (int h = 1; h <= n_; ++h) {
      const Polynomial& w = ab[h - 1];
      if (w.is_zero()) continue;
      PolyVec hc = bracket_basis(h, c);
      for (int t = 0; t < n_; ++t)
        if (!hc[t].is_zero()) out[t] += w * hc[t];
    }
  };
  add_term(i, j, k);
  add_term(j, k, i);
  add_term(k, i, j);
  return out;
}

std::vector<JacobiViolation> LieAlgebra::jacobi_check() const {
  std::vector<JacobiViolation> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      for (int k = j + 1; k <= n_; ++k) {
        // a triple can only violate Jacobi if one of its pairs brackets nontrivially
        if (!find(i, j) && !find(j, k) && !find(i, k)) continue;
        PolyVec jac = jacobiator(i, j, k);
        JacobiViolation v{i, j, k, {}};
        for (int h = 1; h <= n_; ++h)
          if (!jac[h - 1].is_zero()) v.coords.emplace_back(h, jac[h - 1]);
        if (!v.coords.empty()) out.push_back(std::move(v));
      }
  return out;
}

LieAlgebra LieAlgebra::change_basis(const QMatrix& M) const {
  if (!numeric()) throw Error(Errc::ParametricInput, "change_basis requires a numeric algebra");
  if (M.rows != n_ || M.cols != n_) throw Error(Errc::DimensionMismatch, "basis change matrix must be n x n");
  QMatrix inv = [&] {
    try {
      return inverse(M);
    } catch (const Error& e) {
      throw Error(Errc::SingularMatrix, "basis change matrix is singular");
    }
  }();

  auto constant_vec = [&](const PolyVec& v) {
    QVector q(n_);
    for (int h = 0; h < n_; ++h) q[h] = v[h].constant_value();
    return q;
  };

  Table t;
  for (int i = 1; i <= n_; ++i) {
    PolyVec fi(n_);
    for (int r = 0; r < n_; ++r) fi[r] = Polynomial(M.at(r, i - 1));
    for (int j = i + 1; j <= n_; ++j) {
      PolyVec fj(n_);
      for (int r = 0; r < n_; ++r) fj[r] = Polynomial(M.at(r, j - 1));
      QVector w = constant_vec(bracket(fi, fj));
      QVector coords = mat_vec(inv, w);
      PolyVec entry(n_);
      bool nonzero = false;
      for (int h = 0; h < n_; ++h) {
        entry[h] = Polynomial(coords[h]);
        nonzero = nonzero || !coords[h].is_zero();
      }
      if (nonzero) t.emplace(std::make_pair(i, j), std::move(entry));
    }
  }
  return LieAlgebra(n_, std::move(t));
}

LieAlgebra LieAlgebra::specialize(const std::map<std::string, Rational>& assignment) const {
  Table t;
  for (const auto& [ij, vec] : table_) {
    PolyVec entry(n_);
    for (int h = 0; h < n_; ++h) entry[h] = vec[h].eval_partial(assignment);
    t.emplace(ij, std::move(entry));
  }
  return LieAlgebra(n_, std::move(t));
}

std::map<std::pair<int, int>, QVector> LieAlgebra::numeric_table() const {
  if (!numeric()) throw Error(Errc::ParametricInput, "operation requires a numeric algebra");
  std::map<std::pair<int, int>, QVector> out;
  for (const auto& [ij, vec] : table_) {
    QVector q(n_);
    for (int h = 0; h < n_; ++h) q[h] = vec[h].constant_value();
    out.emplace(ij, std::move(q));
  }
  return out;
}

LieAlgebra model_algebra(int n) {
  LieAlgebra::Table t;
  for (int h = 3; h <= n; ++h) {
    PolyVec v(n);
    v[h - 2] = Polynomial(1);
    t.emplace(std::make_pair(1, h), std::move(v));
  }
  return LieAlgebra(n, std::move(t));
}

LieAlgebra LieAlgebra::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::BadFile, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(Errc::BadFile, "algebra file must be a JSON object");
  for (auto& [key, value] : j.items())
    if (key != "dim" && key != "parameters" && key != "brackets")
      throw Error(Errc::BadFile, "unknown key '" + key + "' in algebra file");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw Error(Errc::BadFile, "algebra file requires integer 'dim'");
  int n = j["dim"].get<int>();
  std::set<std::string> declared;
  if (j.contains("parameters")) {
    if (!j["parameters"].is_array()) throw Error(Errc::BadFile, "'parameters' must be an array");
    for (const auto& p : j["parameters"]) {
      if (!p.is_string()) throw Error(Errc::BadFile, "'parameters' entries must be strings");
      declared.insert(p.get<std::string>());
    }
  }
  Table table;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw Error(Errc::BadFile, "'brackets' must be an array");
    for (const auto& b : j["brackets"]) {
      if (!b.is_object()) throw Error(Errc::BadFile, "bracket entries must be objects");
      for (auto& [key, value] : b.items())
        if (key != "i" && key != "j" && key != "coeffs")
          throw Error(Errc::BadFile, "unknown key '" + key + "' in bracket entry");
      if (!b.contains("i") || !b.contains("j") || !b["i"].is_number_integer() || !b["j"].is_number_integer())
        throw Error(Errc::BadFile, "bracket entry requires integer 'i' and 'j'");
      int i = b["i"].get<int>(), jj = b["j"].get<int>();
      if (!(1 <= i && i < jj && jj <= n))
        throw Error(Errc::BadFile, "bracket pair (" + std::to_string(i) + "," + std::to_string(jj) + ") must satisfy 1 <= i < j <= dim");
      if (table.count({i, jj})) throw Error(Errc::BadFile, "duplicate bracket pair");
      PolyVec vec(n);
      if (b.contains("coeffs")) {
        if (!b["coeffs"].is_object()) throw Error(Errc::BadFile, "'coeffs' must be an object");
        for (auto& [hs, cs] : b["coeffs"].items()) {
          int h;
          try {
            size_t used = 0;
            h = std::stoi(hs, &used);
            if (used != hs.size()) throw std::invalid_argument(hs);
          } catch (const std::exception&) {
            throw Error(Errc::BadFile, "coefficient key '" + hs + "' is not an index");
          }
          if (h < 1 || h > n) throw Error(Errc::BadFile, "coefficient index " + hs + " outside [1, dim]");
          if (!cs.is_string()) throw Error(Errc::BadFile, "coefficient values must be polynomial strings");
          vec[h - 1] = Polynomial::parse(cs.get<std::string>());
        }
      }
      table.emplace(std::make_pair(i, jj), std::move(vec));
    }
  }
  LieAlgebra g(n, std::move(table));
  for (const auto& p : g.parameters())
    if (!declared.count(p))
      throw Error(Errc::BadFile, "coefficient uses undeclared parameter '" + p + "'");
  return g;
}

std::string LieAlgebra::to_json() const {
  nlohmann::ordered_json j;
  j["dim"] = n_;
  j["parameters"] = parameters_;
  nlohmann::ordered_json brackets = nlohmann::ordered_json::array();
  for (const auto& [ij, vec] : table_) {
    nlohmann::ordered_json b;
    b["i"] = ij.first;
    b["j"] = ij.second;
    nlohmann::ordered_json coeffs;
    for (int h = 1; h <= n_; ++h)
      if (!vec[h - 1].is_zero()) coeffs[std::to_string(h)] = vec[h - 1].str();
    b["coeffs"] = std::move(coeffs);
    brackets.push_back(std::move(b));
  }
  j["brackets"] = std::move(brackets);
  return j.dump(2);
}

}  // namespace filiform
