#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "filiform/family.hpp"

namespace filiform {

/// p = 2n - z1 - 2z2 - 3, q = n - z2 - 2, r = n - z1 - 1, together with
/// sum R_k and sum S_k over k = 0..floor(r/2), where
/// R_k = (C(r,k) - C(r,k-1)) C(q,k) and S_k = (C(r,k) - C(r,k-1)) C(q,k-1).
struct CombinatorialContext {
  Triple triple;
  long long p = 0, q = 0, r = 0;
  Rational sum_r, sum_s;
};

CombinatorialContext context(const Triple& t);

struct Abc {
  Rational a, b, c;
};

/// The quadratic-form coefficients a_m, b_m, c_m for 0 <= m <= r-1.
Abc abc(const CombinatorialContext& ctx, int m);

/// Coefficients appearing in the derived-length theorem's proof. Raw
/// binomial expressions are authoritative; the displayed fractional
/// simplifications are cross-checked wherever their denominator is nonzero
/// (a failure would falsify the displayed simplification).
struct ProofCoeffs {
  Rational a0, b0, a1, b1, c1;
  Rational a_prime, b_prime;  // (p+1)*a0 - a1 and (p+1)*b0 - b1
  std::vector<std::string> skipped_simplifications;
};

ProofCoeffs proof_coeffs(const CombinatorialContext& ctx);

/// Closed form of the e_{p+4} coefficient of J(e_{z1}, e_{n-1}, e_n) when
/// only alpha_1 is nonzero: alpha_1^2 (C(p+2,r-z2+1) - C(q+r,r-1) - C(p+2,r-z2+2)),
/// equal to -alpha_1^2 ((z1-2)/(q+1) C(p+2,q) + C(q+r,r-1)).
Polynomial alpha1_coefficient(const Triple& t);  // IndexGuard outside p >= 0, p+4 <= n

/// Same coefficient extracted from the symbolic Jacobiator of the general
/// law with alpha_1 symbolic and every other parameter zero.
Polynomial alpha1_coefficient_symbolic(const Triple& t);

struct IdentityVerdict {
  Triple triple;
  int m = 0, k = 0;
  bool pass = false;
  Polynomial extracted;  // coefficient pulled out of the Jacobiator
  Polynomial closed;     // a_m gamma_k^2 + b_m gamma_k alpha_{k+1} + c_m alpha_{k+1}^2
  std::string str() const;
};

/// Verifies that on the F_{alpha,gamma}-specialized law with alpha_1 = 0 and
/// gamma_i = alpha_{i+1} = 0 for i < k, the coefficient of e_{m+p+4-2k} in
/// J(e_{z1+m}, e_{n-1}, e_n) equals a_m gamma_k^2 + b_m gamma_k alpha_{k+1}
/// + c_m alpha_{k+1}^2. IndexGuard outside the validity window.
IdentityVerdict jacobi_coefficient_identity(const Triple& t, int m, int k);

/// All (m, k) pairs the guards admit for this triple.
std::vector<std::pair<int, int>> guarded_mk(const Triple& t);
/// m values in 0..r-1 excluded by the index guard for a given k.
std::vector<int> skipped_m(const Triple& t, int k);

/// Checks P_{n-z2}([e_{z1+k}, e_{n-k}]) = C(q,k) gamma_1 + C(q,k-1) alpha_2
/// symbolically under alpha_1 = 0.
bool comb2_identity_holds(const Triple& t, int k);

/// Checks P_{n-z2+1}([e_{z1+k}, e_{n-k}]) = C(q+1,k) alpha_1 on the fully
/// symbolic law.
bool vandermonde_step_holds(const Triple& t, int k);

}  // namespace filiform
