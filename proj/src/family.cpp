#include "filiform/family.hpp"

#include <algorithm>

namespace filiform {

std::string alpha_name(int i) { return "a_" + std::to_string(i); }
std::string gamma_name(int j) { return "g_" + std::to_string(j); }
std::string beta_name(int k, int l) { return "b_" + std::to_string(k) + "_" + std::to_string(l); }
std::string lambda_name(int r) { return "l_" + std::to_string(r); }

namespace {

void require_valid(const Triple& t) {
  if (!t.valid())
    throw Error(Errc::InvalidTriple, "triple " + t.str() + " violates 4 <= z1 <= z2 < n <= 2*z2-2");
}

}  // namespace

GeneralLawParams GeneralLawParams::symbolic(const Triple& t) {
  require_valid(t);
  GeneralLawParams p;
  p.triple = t;
  for (int i = 1; i <= t.z2 - t.z1 + 1; ++i) p.alpha[i] = Polynomial::variable(alpha_name(i));
  for (int j = 1; j <= 2 * t.n - t.z1 - t.z2 - 2; ++j) p.gamma[j] = Polynomial::variable(gamma_name(j));
  for (int l = 2; l <= t.n - t.z2; ++l)
    for (int k = 1; k < t.z2 - t.z1 + l; ++k) p.beta[{k, l}] = Polynomial::variable(beta_name(k, l));
  return p;
}

GeneralLawParams GeneralLawParams::zero(const Triple& t) {
  GeneralLawParams p = symbolic(t);
  for (auto& [i, v] : p.alpha) v = Polynomial();
  for (auto& [j, v] : p.gamma) v = Polynomial();
  for (auto& [kl, v] : p.beta) v = Polynomial();
  return p;
}

LieAlgebra generate_general(const GeneralLawParams& params) {
  const Triple t = params.triple;
  require_valid(t);
  const int n = t.n, z1 = t.z1, z2 = t.z2;

  auto alpha = [&](int i) {
    auto it = params.alpha.find(i);
    return it == params.alpha.end() ? Polynomial() : it->second;
  };
  auto gamma = [&](int j) {
    auto it = params.gamma.find(j);
    return it == params.gamma.end() ? Polynomial() : it->second;
  };
  auto beta = [&](int k, int l) {
    auto it = params.beta.find({k, l});
    return it == params.beta.end() ? Polynomial() : it->second;
  };

  LieAlgebra::Table table;
  auto set_entry = [&](int i, int j, PolyVec vec) {
    bool nonzero = false;
    for (const auto& p : vec) nonzero = nonzero || !p.is_zero();
    if (nonzero) table.emplace(std::make_pair(i, j), std::move(vec));
  };
  auto lookup = [&](int i, int j) -> const PolyVec* {
    if (i >= j) return nullptr;  // equal indices bracket to zero in the recursion
    auto it = table.find({i, j});
    return it == table.end() ? nullptr : &it->second;
  };

  // chain
  for (int h = 3; h <= n; ++h) {
    PolyVec v(n);
    v[h - 2] = Polynomial(1);
    set_entry(1, h, std::move(v));
  }
  // [e_{z1+i}, e_{z2+1}] = alpha_1 e_{i+2} + ... + alpha_{i+1} e_2
  for (int i = 0; i <= z2 - z1; ++i) {
    PolyVec v(n);
    for (int s = 1; s <= i + 1; ++s) v[i + 3 - s - 1] += alpha(s);
    set_entry(z1 + i, z2 + 1, std::move(v));
  }
  // [e_{z1}, e_{z2+j}] = alpha_1 e_{j+1} + gamma_1 e_j + ... + gamma_{j-1} e_2
  for (int j = 2; j <= n - z2; ++j) {
    PolyVec v(n);
    v[j + 1 - 1] += alpha(1);
    for (int s = 1; s <= j - 1; ++s) v[j + 1 - s - 1] += gamma(s);
    set_entry(z1, z2 + j, std::move(v));
  }
  // fourth group by dynamic programming over increasing k+l
  const int lmax = n - z2;
  for (int s = 3; s <= (z2 - z1 + lmax - 1) + lmax; ++s) {
    for (int l = 2; l <= lmax; ++l) {
      int k = s - l;
      if (k < 1 || k >= z2 - z1 + l) continue;
      PolyVec v(n);
      v[2 - 1] += beta(k, l);
      const PolyVec* left = lookup(z1 + k - 1, z2 + l);
      const PolyVec* right = lookup(z1 + k, z2 + l - 1);
      // P_h terms with h+1 > n have no coordinate to land in; on genuine
      // members they vanish anyway ([C^a, C^b] tucks the bracket below e_n),
      // and the emitted law's own Jacobi triples (1,i,j) still force them to
      // zero, so the truncation loses nothing
      for (int h = 2; h <= std::min(k + l, n - 1); ++h) {
        Polynomial ph;
        if (left) ph += (*left)[h - 1];
        if (right) ph += (*right)[h - 1];
        if (!ph.is_zero()) v[h + 1 - 1] += ph;
      }
      set_entry(z1 + k, z2 + l, std::move(v));
    }
  }
  return LieAlgebra(n, std::move(table));
}

BratzlavskyParams BratzlavskyParams::symbolic(int n) {
  if (n < 5) throw Error(Errc::InvalidDimension, "Bratzlavsky law needs n >= 5");
  BratzlavskyParams p;
  p.n = n;
  for (int r = 0; r <= n - 5; ++r) p.lambda.push_back(Polynomial::variable(lambda_name(r)));
  return p;
}

LieAlgebra generate_bratzlavsky(const BratzlavskyParams& params) {
  const int n = params.n;
  if (n < 5) throw Error(Errc::InvalidDimension, "Bratzlavsky law needs n >= 5");
  if (static_cast<int>(params.lambda.size()) != n - 4)
    throw Error(Errc::DimensionMismatch, "expected " + std::to_string(n - 4) + " lambda values");

  LieAlgebra::Table table;
  for (int i = 2; i <= n - 1; ++i) {
    PolyVec v(n);
    v[i + 1 - 1] = Polynomial(1);
    table.emplace(std::make_pair(1, i), std::move(v));
  }
  for (int i = 3; i <= n - 2; ++i) {
    PolyVec v(n);
    bool nonzero = false;
    for (int r = 0; r <= n - i - 2; ++r) {
      if (params.lambda[r].is_zero()) continue;
      v[i + 2 + r - 1] += params.lambda[r];
      nonzero = true;
    }
    if (nonzero) table.emplace(std::make_pair(2, i), std::move(v));
  }
  return LieAlgebra(n, std::move(table));
}

QMatrix bratzlavsky_relabeling(int n) {
  QMatrix m(n, n);
  m.at(0, 0) = Rational(1);            // e1 = x1
  for (int h = 2; h <= n; ++h) m.at(n + 2 - h - 1, h - 1) = Rational(1);  // e_h = x_{n+2-h}
  return m;
}

GeneralLawParams specialize_fag(GeneralLawParams params, FagRange range) {
  const Triple t = params.triple;
  for (auto& [kl, value] : params.beta) {
    auto [k, l] = kl;
    if (range == FagRange::Narrow && k + l > t.n - t.z2) continue;
    auto it = params.gamma.find(k + l - 1);
    value = it == params.gamma.end() ? Polynomial() : it->second;
  }
  return params;
}

long long mu_count(const Triple& t) {
  require_valid(t);
  long long n = t.n, z1 = t.z1, z2 = t.z2;
  return (n - z2) * (n + z2 - 2 * z1 + 1) / 2;
}

std::vector<Triple> enumerate_triples(int n) {
  if (n < 5) return {};
  std::vector<Triple> out;
  for (int z1 = 4; z1 < n; ++z1)
    for (int z2 = z1; z2 < n; ++z2) {
      Triple t{z1, z2, n};
      if (t.valid()) out.push_back(t);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triple> enumerate_empty_region(int n) {
  if (n < 5) return {};
  std::vector<Triple> out;
  for (const Triple& t : enumerate_triples(n)) {
    bool in_region = 4 <= t.z1 && t.z1 <= 2 * (n - t.z2) - 4 && t.z1 <= t.z2 && t.z2 <= n - 3 &&
                     n - 3 <= 2 * t.z2 - 5;
    if (in_region) out.push_back(t);
  }
  return out;
}

}  // namespace filiform
