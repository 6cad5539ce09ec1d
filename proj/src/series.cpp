#include "filiform/series.hpp"

#include <algorithm>

#include <json.hpp>

namespace filiform {

namespace {

struct NumericView {
  int n;
  std::map<std::pair<int, int>, QVector> table;

  explicit NumericView(const LieAlgebra& g) : n(g.dim()), table(g.numeric_table()) {}

  QVector bracket(const QVector& u, const QVector& v) const {
    QVector out(n);
    for (const auto& [ij, c] : table) {
      auto [i, j] = ij;
      Rational w = u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1];
      if (w.is_zero()) continue;
      for (int h = 0; h < n; ++h)
        if (!c[h].is_zero()) out[h] += w * c[h];
    }
    return out;
  }
};

void require_numeric(const LieAlgebra& g, const char* op) {
  if (!g.numeric())
    throw Error(Errc::ParametricInput, std::string(op) + " requires a numeric algebra; parameters present");
}

std::vector<int> dims_of(const std::vector<Subspace>& spaces) {
  std::vector<int> d;
  d.reserve(spaces.size());
  for (const auto& s : spaces) d.push_back(s.dim());
  return d;
}

}  // namespace

Subspace Subspace::span(int ambient, const std::vector<QVector>& vectors) {
  Subspace s;
  s.ambient_ = ambient;
  QMatrix m(static_cast<int>(vectors.size()), ambient);
  for (size_t r = 0; r < vectors.size(); ++r) {
    if (static_cast<int>(vectors[r].size()) != ambient)
      throw Error(Errc::DimensionMismatch, "span vector length mismatch");
    for (int c = 0; c < ambient; ++c) m.at(static_cast<int>(r), c) = vectors[r][c];
  }
  rref(m);
  s.basis_ = std::move(m);
  return s;
}

Subspace Subspace::full(int n) {
  Subspace s;
  s.ambient_ = n;
  s.basis_ = QMatrix::identity(n);
  return s;
}

Subspace Subspace::zero(int n) {
  Subspace s;
  s.ambient_ = n;
  s.basis_ = QMatrix(0, n);
  return s;
}

bool Subspace::contains_vector(const QVector& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw Error(Errc::DimensionMismatch, "vector length mismatch");
  QVector w = v;
  for (int r = 0; r < basis_.rows; ++r) {
    int lead = -1;
    for (int c = 0; c < ambient_; ++c)
      if (!basis_.at(r, c).is_zero()) {
        lead = c;
        break;
      }
    if (lead < 0 || w[lead].is_zero()) continue;
    Rational f = w[lead];  // pivot entries are 1 in RREF
    for (int c = 0; c < ambient_; ++c) w[c] -= f * basis_.at(r, c);
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(Errc::DimensionMismatch, "ambient mismatch");
  for (int r = 0; r < other.basis_.rows; ++r)
    if (!contains_vector(other.basis_.row(r))) return false;
  return true;
}

Subspace product_space(const LieAlgebra& g, const Subspace& A, const Subspace& B) {
  require_numeric(g, "product_space");
  NumericView nv(g);
  std::vector<QVector> brackets;
  for (int i = 0; i < A.dim(); ++i) {
    QVector a = A.basis().row(i);
    for (int j = 0; j < B.dim(); ++j) brackets.push_back(nv.bracket(a, B.basis().row(j)));
  }
  return Subspace::span(g.dim(), brackets);
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  require_numeric(g, "lower_central_series");
  std::vector<Subspace> out{Subspace::full(g.dim())};
  while (true) {
    Subspace next = product_space(g, out.back(), Subspace::full(g.dim()));
    if (next == out.back()) break;
    out.push_back(next);
  }
  return out;
}

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  require_numeric(g, "derived_series");
  std::vector<Subspace> out{Subspace::full(g.dim())};
  while (true) {
    Subspace next = product_space(g, out.back(), out.back());
    if (next == out.back()) break;
    out.push_back(next);
  }
  return out;
}

Subspace centralizer(const LieAlgebra& g, const Subspace& h) {
  require_numeric(g, "centralizer");
  int n = g.dim();
  NumericView nv(g);
  if (h.dim() == 0) return Subspace::full(n);
  QMatrix stacked(h.dim() * n, n);
  for (int r = 0; r < h.dim(); ++r) {
    QVector b = h.basis().row(r);
    for (int i = 1; i <= n; ++i) {
      QVector ei(n);
      ei[i - 1] = Rational(1);
      QVector w = nv.bracket(ei, b);
      for (int t = 0; t < n; ++t) stacked.at(r * n + t, i - 1) = w[t];
    }
  }
  QMatrix ker = kernel_basis(stacked);
  std::vector<QVector> rows;
  for (int r = 0; r < ker.rows; ++r) rows.push_back(ker.row(r));
  return Subspace::span(n, rows);
}

namespace {

bool is_abelian_subspace(const LieAlgebra& g, const Subspace& s) {
  return product_space(g, s, s).dim() == 0;
}

bool filiform_dims(const std::vector<int>& lcs, int n) {
  // dim C^k = n - k for 2 <= k <= n, and the series must terminate at 0
  if (lcs.empty() || lcs.back() != 0) return false;
  if (static_cast<int>(lcs.size()) != std::max(1, n)) {
    // filiform series has exactly n entries (C^1 .. C^n) for n >= 2
    if (n >= 2) return false;
  }
  for (int k = 2; k <= n; ++k) {
    if (k - 1 >= static_cast<int>(lcs.size())) return false;
    if (lcs[k - 1] != n - k) return false;
  }
  return true;
}

/// Model test for a filiform algebra: for n >= 5, model iff the centralizer
/// of the derived algebra has dimension n-1 (everything but the e1 line).
bool is_model_filiform(const LieAlgebra& g, const std::vector<Subspace>& lcs) {
  int n = g.dim();
  if (n <= 4) return true;
  Subspace c2 = lcs[1];
  return centralizer(g, c2).dim() == n - 1;
}

}  // namespace

bool lcs_is_coordinate_flag(const LieAlgebra& g) {
  auto lcs = lower_central_series(g);
  int n = g.dim();
  for (size_t k = 1; k < lcs.size(); ++k) {
    int expected_dim = n - static_cast<int>(k) - 1;  // C^{k+1} = <e2..e_{n-k}>
    std::vector<QVector> rows;
    for (int i = 2; i <= n - static_cast<int>(k); ++i) {
      QVector v(n);
      v[i - 1] = Rational(1);
      rows.push_back(v);
    }
    if (!(lcs[k] == Subspace::span(n, rows))) return false;
    (void)expected_dim;
  }
  return true;
}

SeriesReport classify(const LieAlgebra& g) {
  require_numeric(g, "classify");
  int n = g.dim();
  SeriesReport rep;
  auto lcs = lower_central_series(g);
  auto ds = derived_series(g);
  rep.lcs_dims = dims_of(lcs);
  rep.ds_dims = dims_of(ds);
  if (lcs.back().dim() == 0) {
    rep.nilpotent = true;
    rep.nilindex = static_cast<int>(lcs.size());
  }
  if (ds.back().dim() == 0) {
    rep.solvable = true;
    rep.derived_length = static_cast<int>(ds.size()) - 1;
  }
  rep.abelian = rep.ds_dims.size() >= 1 && (rep.ds_dims.size() == 1 || rep.ds_dims[1] == 0);
  rep.filiform = rep.nilpotent && filiform_dims(rep.lcs_dims, n);
  if (rep.filiform) {
    bool model = is_model_filiform(g, lcs);
    rep.model = model;
    if (!model) {
      ZInvariants z = invariants_z(g, false);
      rep.z1 = z.z1;
      rep.z2 = z.z2;
    }
  }
  return rep;
}

std::string SeriesReport::to_json() const {
  nlohmann::ordered_json j;
  j["lcs_dims"] = lcs_dims;
  j["ds_dims"] = ds_dims;
  if (nilindex)
    j["nilindex"] = *nilindex;
  else
    j["nilindex"] = nullptr;
  if (derived_length)
    j["derived_length"] = *derived_length;
  else
    j["derived_length"] = nullptr;
  j["filiform"] = filiform;
  if (model)
    j["model"] = *model;
  else
    j["model"] = nullptr;
  if (z1)
    j["z1"] = *z1;
  else
    j["z1"] = nullptr;
  if (z2)
    j["z2"] = *z2;
  else
    j["z2"] = nullptr;
  return j.dump(2);
}

AdaptedCheck verify_adapted(const LieAlgebra& g) {
  int n = g.dim();
  AdaptedCheck out;
  auto expect = [&](const PolyVec& got, int unit, const std::string& what) {
    for (int h = 1; h <= n; ++h) {
      Polynomial want = h == unit ? Polynomial(1) : Polynomial();
      if (LieAlgebra::coord(got, h) != want) {
        out.ok = false;
        out.failures.push_back(what);
        return;
      }
    }
  };
  for (int h = 3; h <= n; ++h)
    expect(g.bracket_basis(1, h), h - 1, "[e1,e" + std::to_string(h) + "] != e" + std::to_string(h - 1));
  for (int h = 1; h <= n; ++h) {
    if (h == 2) continue;
    expect(g.bracket_basis(2, h), 0, "[e2,e" + std::to_string(h) + "] != 0");
  }
  for (int h = 2; h <= n; ++h) {
    if (h == 3) continue;
    if (h == 1) continue;
    expect(g.bracket_basis(3, h), 0, "[e3,e" + std::to_string(h) + "] != 0");
  }
  return out;
}

namespace {

QMatrix ad_matrix(const NumericView& nv, const QVector& v) {
  int n = nv.n;
  QMatrix m(n, n);
  for (int j = 1; j <= n; ++j) {
    QVector ej(n);
    ej[j - 1] = Rational(1);
    QVector w = nv.bracket(v, ej);
    for (int t = 0; t < n; ++t) m.at(t, j - 1) = w[t];
  }
  return m;
}

}  // namespace

QMatrix construct_adapted(const LieAlgebra& g) {
  require_numeric(g, "construct_adapted");
  int n = g.dim();
  {
    auto lcs = lower_central_series(g);
    if (!(lcs.back().dim() == 0 && filiform_dims(dims_of(lcs), n)))
      throw Error(Errc::NotFiliform, "construct_adapted requires a filiform algebra");
  }
  if (verify_adapted(g).ok && lcs_is_coordinate_flag(g)) return QMatrix::identity(n);
  if (n == 1) return QMatrix::identity(1);
  NumericView nv(g);

  std::vector<QVector> candidates;
  for (int i = 1; i <= n; ++i) {
    QVector v(n);
    v[i - 1] = Rational(1);
    candidates.push_back(v);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
          if (a == 0 || b == 0) continue;
          QVector v(n);
          v[i - 1] = Rational(a);
          v[j - 1] = Rational(b);
          candidates.push_back(v);
        }

  for (const QVector& v : candidates) {
    QMatrix adv = ad_matrix(nv, v);
    if (rank(adv) != n - 2) continue;
    for (int wi = 1; wi <= n; ++wi) {
      QVector w(n);
      w[wi - 1] = Rational(1);
      // chain f_n = w, f_{h-1} = [v, f_h]
      std::vector<QVector> f(n + 1);
      f[n] = w;
      for (int h = n; h >= 3; --h) f[h - 1] = mat_vec(adv, f[h]);
      f[1] = v;
      QMatrix M(n, n);
      for (int c = 1; c <= n; ++c)
        for (int r = 0; r < n; ++r) M.at(r, c - 1) = f[c][r];
      if (determinant(M).is_zero()) continue;
      if (n >= 3) {
        // repair [e3, e_n]: it lies in <f2>, and e_n += c*e1 cancels it
        QVector u = nv.bracket(f[3], f[n]);
        QVector coords = mat_vec(inverse(M), u);
        bool pure = true;
        for (int h = 0; h < n; ++h)
          if (h != 1 && !coords[h].is_zero()) pure = false;
        if (!pure) continue;
        if (!coords[1].is_zero()) {
          for (int r = 0; r < n; ++r) M.at(r, n - 1) += coords[1] * f[1][r];
        }
      }
      LieAlgebra h = g.change_basis(M);
      if (verify_adapted(h).ok && lcs_is_coordinate_flag(h)) return M;
    }
  }
  throw Error(Errc::SearchFailed, "no adapted basis found in the declared candidate space");
}

ZInvariants invariants_z(const LieAlgebra& g, bool assume_adapted) {
  require_numeric(g, "invariants_z");
  int n = g.dim();
  auto lcs = lower_central_series(g);
  if (!(lcs.back().dim() == 0 && filiform_dims(dims_of(lcs), n)))
    throw Error(Errc::NotFiliform, "invariants require a filiform algebra");

  ZInvariants out;
  if (is_model_filiform(g, lcs)) {
    out.model = true;
    return out;
  }

  // definitional route, basis-free
  Subspace c2 = lcs[1];
  int z1_def = 0;
  for (int k = 4; k <= n; ++k) {
    const Subspace& arg = lcs[n - k + 2 - 1];  // C^{n-k+2}
    Subspace cent = centralizer(g, arg);
    if (cent.contains(c2) && cent.dim() > c2.dim())
      z1_def = k;
    else
      break;
  }
  int z2_def = 0;
  for (int k = 4; k <= n - 1; ++k) {
    if (is_abelian_subspace(g, lcs[n - k + 1 - 1]))  // C^{n-k+1}
      z2_def = k;
    else
      break;
  }
  if (z1_def < 4 || z2_def < 4)
    throw Error(Errc::VerificationFailure, "invariant computation fell below the lower bound 4");
  out.z1_def = z1_def;
  out.z2_def = z2_def;

  // practical route on an adapted presentation
  const LieAlgebra* adapted = &g;
  std::optional<LieAlgebra> transformed;
  if (assume_adapted) {
    auto chk = verify_adapted(g);
    if (!chk.ok)
      throw Error(Errc::NotAdapted, "standard basis is not adapted: " + (chk.failures.empty() ? std::string() : chk.failures.front()));
  } else if (!verify_adapted(g).ok) {
    try {
      QMatrix M = construct_adapted(g);
      transformed = g.change_basis(M);
      adapted = &*transformed;
    } catch (const Error&) {
      adapted = nullptr;  // definitional values only
    }
  }
  if (adapted) {
    std::optional<int> z1p, z2p;
    for (int k = 4; k < n && !z1p; ++k) {
      PolyVec b = adapted->bracket_basis(k, n);
      for (const auto& p : b)
        if (!p.is_zero()) {
          z1p = k;
          break;
        }
    }
    for (int k = 4; k < n && !z2p; ++k) {
      PolyVec b = adapted->bracket_basis(k, k + 1);
      for (const auto& p : b)
        if (!p.is_zero()) {
          z2p = k;
          break;
        }
    }
    out.z1_prac = z1p;
    out.z2_prac = z2p;
    out.agree = z1p && z2p && *z1p == z1_def && *z2p == z2_def;
    if (assume_adapted && !out.agree)
      throw Error(Errc::VerificationFailure,
                  "definitional and practical invariants disagree on an adapted basis: definitional (" +
                      std::to_string(z1_def) + "," + std::to_string(z2_def) + ")");
  }

  out.z1 = z1_def;
  out.z2 = z2_def;
  if (!(4 <= out.z1 && out.z1 <= out.z2 && out.z2 < n && n <= 2 * out.z2 - 2))
    throw Error(Errc::VerificationFailure, "computed invariants violate the triple inequalities");
  return out;
}

}  // namespace filiform
