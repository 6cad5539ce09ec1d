#pragma once

#include <map>
#include <string>
#include <vector>

#include "filiform/lie_algebra.hpp"

namespace filiform {

/// Invariant triple (z1, z2, n) of a non-model filiform algebra.
struct Triple {
  int z1 = 0, z2 = 0, n = 0;
  bool valid() const { return 4 <= z1 && z1 <= z2 && z2 < n && n <= 2 * z2 - 2; }
  friend bool operator==(const Triple& a, const Triple& b) {
    return a.z1 == b.z1 && a.z2 == b.z2 && a.n == b.n;
  }
  friend bool operator<(const Triple& a, const Triple& b) {
    if (a.z1 != b.z1) return a.z1 < b.z1;
    if (a.z2 != b.z2) return a.z2 < b.z2;
    return a.n < b.n;
  }
  std::string str() const {
    return "(" + std::to_string(z1) + "," + std::to_string(z2) + "," + std::to_string(n) + ")";
  }
};

/// Parameters of the general filiform law at a triple: alpha_i for
/// 1 <= i <= z2-z1+1, gamma_j for 1 <= j <= 2n-z1-z2-2, beta_{k,l} for
/// 2 <= l <= n-z2 and 1 <= k < z2-z1+l. Entries default to the named
/// indeterminates a_i, g_j, b_k_l.
struct GeneralLawParams {
  Triple triple;
  std::map<int, Polynomial> alpha;
  std::map<int, Polynomial> gamma;
  std::map<std::pair<int, int>, Polynomial> beta;

  static GeneralLawParams symbolic(const Triple& t);
  static GeneralLawParams zero(const Triple& t);

  int alpha_count() const { return triple.z2 - triple.z1 + 1; }
  int gamma_count() const { return 2 * triple.n - triple.z1 - triple.z2 - 2; }
};

/// How far the F_{alpha,gamma} identification beta_{k,l} = gamma_{k+l-1}
/// reaches: the full index range, or only k+l <= n-z2.
enum class FagRange { Full, Narrow };

std::string alpha_name(int i);
std::string gamma_name(int j);
std::string beta_name(int k, int l);
std::string lambda_name(int r);

/// The general law at the given triple: the chain [e1,e_h] = e_{h-1}, the
/// two explicit bracket groups against e_{z2+1} and from e_{z1}, and the
/// fourth group built by the coordinate-map recursion in increasing k+l,
/// with beta_{k,l} e2 added. Unlisted brackets are zero; the output basis
/// is adapted. Jacobi consistency is deliberately not enforced here.
LieAlgebra generate_general(const GeneralLawParams& params);

struct BratzlavskyParams {
  int n = 0;
  std::vector<Polynomial> lambda;  // lambda_0 .. lambda_{n-5}

  static BratzlavskyParams symbolic(int n);
};

/// Metabelian law [x1,xi] = x_{i+1}, [xi,xj] = 0 for 3 <= i < j, and
/// [x2,xi] = sum_r lambda_r x_{i+2+r}.
LieAlgebra generate_bratzlavsky(const BratzlavskyParams& params);

/// Relabeling e1 = x1, e_h = x_{n+2-h} that carries the Bratzlavsky basis
/// to an adapted one (columns = new basis in x-coordinates).
QMatrix bratzlavsky_relabeling(int n);

/// Substitutes beta_{k,l} := gamma_{k+l-1}.
GeneralLawParams specialize_fag(GeneralLawParams params, FagRange range = FagRange::Full);

/// Number of free parameters mu = (n-z2)(n+z2-2*z1+1)/2 of the general law.
long long mu_count(const Triple& t);

/// All triples with this n, lexicographic.
std::vector<Triple> enumerate_triples(int n);

/// Triples in the region 4 <= z1 <= 2(n-z2)-4, z1 <= z2 <= n-3 <= 2z2-5.
std::vector<Triple> enumerate_empty_region(int n);

}  // namespace filiform
