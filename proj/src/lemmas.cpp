#include "filiform/lemmas.hpp"

#include <algorithm>

namespace filiform {

CombinatorialContext context(const Triple& t) {
  if (!t.valid())
    throw Error(Errc::InvalidTriple, "triple " + t.str() + " violates 4 <= z1 <= z2 < n <= 2*z2-2");
  CombinatorialContext ctx;
  ctx.triple = t;
  ctx.p = 2LL * t.n - t.z1 - 2LL * t.z2 - 3;
  ctx.q = t.n - t.z2 - 2;
  ctx.r = t.n - t.z1 - 1;
  if (ctx.q < 0)
    throw Error(Errc::IndexGuard, "q = n-z2-2 < 0 at " + t.str() + "; the combinatorial sums are only defined for z2 <= n-2");
  for (long long k = 0; k <= ctx.r / 2; ++k) {
    Rational d = binomial(ctx.r, k) - binomial(ctx.r, k - 1);
    ctx.sum_r += d * binomial(ctx.q, k);
    ctx.sum_s += d * binomial(ctx.q, k - 1);
  }
  return ctx;
}

Abc abc(const CombinatorialContext& ctx, int m) {
  const long long p = ctx.p, q = ctx.q, r = ctx.r;
  if (m < 0 || m > r - 1)
    throw Error(Errc::IndexOutOfRange, "abc index m = " + std::to_string(m) + " outside [0, r-1]");
  Abc out;
  out.a = binomial(m + q - 1, m) * binomial(m + p, q) - binomial(m + q, m) * binomial(m + p, q - 1) -
          binomial(p + m, m) * ctx.sum_r;
  out.b = binomial(m + q - 1, m) * binomial(m + p, q + 1) - binomial(m + q - 1, m - 1) * binomial(m + p, q) -
          binomial(m + q, m) * binomial(m + p, q) - binomial(m + q, m - 1) * binomial(m + p, q - 1) -
          binomial(m + p, m - 1) * ctx.sum_r - binomial(m + p, m) * ctx.sum_s;
  out.c = binomial(m + q - 1, m - 1) * binomial(m + p, q + 1) - binomial(m + q, m - 1) * binomial(m + p, q) -
          binomial(m + p, m - 1) * ctx.sum_s;
  return out;
}

ProofCoeffs proof_coeffs(const CombinatorialContext& ctx) {
  const long long p = ctx.p, q = ctx.q;
  if (p < 0)
    throw Error(Errc::IndexGuard, "p < 0 at " + ctx.triple.str() + "; the proof coefficients are outside their guarded region");

  ProofCoeffs out;
  out.a0 = binomial(p, q) - binomial(p, q - 1) - ctx.sum_r;
  out.b0 = binomial(p, q + 1) - binomial(p, q) - ctx.sum_s;
  out.a1 = Rational(q) * binomial(p + 1, q) - Rational(q + 1) * binomial(p + 1, q - 1) -
           Rational(p + 1) * ctx.sum_r;
  out.b1 = Rational(q) * binomial(p + 1, q + 1) - binomial(p + 1, q) - Rational(q + 1) * binomial(p + 1, q) -
           binomial(p + 1, q - 1) - ctx.sum_r - Rational(p + 1) * ctx.sum_s;
  out.c1 = binomial(p + 1, q + 1) - binomial(p + 1, q) - ctx.sum_s;
  out.a_prime = Rational(p + 1) * out.a0 - out.a1;
  out.b_prime = Rational(p + 1) * out.b0 - out.b1;

  // the general-m formulas must reproduce the proof's m = 0, 1 displays
  Abc m0 = abc(ctx, 0), m1 = abc(ctx, 1);
  if (m0.a != out.a0 || m0.b != out.b0 || m1.a != out.a1 || m1.b != out.b1 || m1.c != out.c1)
    throw Error(Errc::VerificationFailure, "a_m/b_m/c_m disagree with the proof coefficients at " + ctx.triple.str());

  auto check = [&](const std::string& name, bool defined, const Rational& raw, auto simplified) {
    if (!defined) {
      out.skipped_simplifications.push_back(name);
      return;
    }
    Rational s = simplified();
    if (raw != s)
      throw Error(Errc::VerificationFailure, "raw and simplified " + name + " disagree at " +
                                                 ctx.triple.str() + ": " + raw.str() + " vs " + s.str());
  };

  check("a0", p - q + 1 != 0, out.a0, [&] {
    return Rational(p - 2 * q + 1) / Rational(p - q + 1) * binomial(p, q) - ctx.sum_r;
  });
  check("b0", q + 1 != 0, out.b0, [&] {
    return Rational(p - 2 * q - 1) / Rational(q + 1) * binomial(p, q) - ctx.sum_s;
  });
  check("a1", p - q + 2 != 0, out.a1, [&] {
    return Rational(p - 2 * q + 1) / Rational(p - q + 2) * Rational(q) * binomial(p + 1, q) -
           Rational(p + 1) * ctx.sum_r;
  });
  check("b1", (q + 1) != 0 && (p - q + 2) != 0, out.b1, [&] {
    return Rational((q * (p - 2 * q - 2) - 2) * (p - q + 2) - q * (q + 1)) /
               Rational((q + 1) * (p - q + 2)) * binomial(p + 1, q) -
           ctx.sum_r - Rational(p + 1) * ctx.sum_s;
  });
  check("c1", p - q + 1 != 0, out.c1, [&] {
    return Rational(p - 2 * q) / Rational(p - q + 1) * binomial(p + 1, q + 1) - ctx.sum_s;
  });
  check("a'", p - q + 2 != 0, out.a_prime, [&] {
    return Rational((p - 2 * q + 1) * (p - 2 * q + 2)) / Rational(p - q + 2) * binomial(p + 1, q);
  });
  check("b'", (p - q + 2) != 0 && (q + 1) != 0, out.b_prime, [&] {
    return Rational((p - q + 2) * ((p - 2 * q) * (p - 2 * q) + (q + 1)) + q * (q + 1)) /
               Rational((p - q + 2) * (q + 1)) * binomial(p + 1, q) +
           ctx.sum_r;
  });

  return out;
}

Polynomial alpha1_coefficient(const Triple& t) {
  CombinatorialContext ctx = context(t);
  const long long p = ctx.p, q = ctx.q, r = ctx.r;
  const long long z1 = t.z1, z2 = t.z2, n = t.n;
  if (p < 0 || p + 4 > n)
    throw Error(Errc::IndexGuard, "alpha1 coefficient not applicable at " + t.str() + " (needs 0 <= p and p+4 <= n)");
  Rational first = binomial(p + 2, r - z2 + 1) - binomial(q + r, r - 1) - binomial(p + 2, r - z2 + 2);
  Rational second = -(Rational(z1 - 2) / Rational(q + 1)) * binomial(p + 2, q) - binomial(q + r, r - 1);
  if (first != second)
    throw Error(Errc::VerificationFailure,
                "the two displayed alpha1-coefficient forms disagree at " + t.str() + ": " + first.str() +
                    " vs " + second.str());
  Polynomial a1 = Polynomial::variable(alpha_name(1));
  return a1 * a1 * Polynomial(second);
}

Polynomial alpha1_coefficient_symbolic(const Triple& t) {
  CombinatorialContext ctx = context(t);
  if (ctx.p < 0 || ctx.p + 4 > t.n)
    throw Error(Errc::IndexGuard, "alpha1 coefficient not applicable at " + t.str());
  GeneralLawParams params = GeneralLawParams::zero(t);
  params.alpha[1] = Polynomial::variable(alpha_name(1));
  LieAlgebra g = generate_general(params);
  PolyVec jac = g.jacobiator(t.z1, t.n - 1, t.n);
  return LieAlgebra::coord(jac, static_cast<int>(ctx.p) + 4);
}

std::string IdentityVerdict::str() const {
  std::string s = triple.str() + " m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " +
                  (pass ? "pass" : "FAIL");
  if (!pass) s += "  extracted = " + extracted.str() + "  closed = " + closed.str();
  return s;
}

IdentityVerdict jacobi_coefficient_identity(const Triple& t, int m, int k) {
  CombinatorialContext ctx = context(t);
  const long long p = ctx.p, r = ctx.r;
  if (t.z2 > t.n - 3)
    throw Error(Errc::IndexGuard, "identity requires z2 <= n-3 (non-abelian derived algebra range)");
  if (m < 0 || m > r - 1) throw Error(Errc::IndexGuard, "m outside [0, r-1]");
  int kmax = std::min(t.n - t.z2 - 1, t.z2 - t.z1);
  if (k < 1 || k > kmax) throw Error(Errc::IndexGuard, "k outside [1, min(n-z2-1, z2-z1)]");
  long long target = m + p + 4 - 2 * k;
  if (target < 3 || target > t.n)
    throw Error(Errc::IndexGuard, "coefficient index e_" + std::to_string(target) + " outside [3, n]");

  GeneralLawParams params = GeneralLawParams::symbolic(t);
  params.alpha[1] = Polynomial();
  for (int i = 1; i < k; ++i) {
    params.gamma[i] = Polynomial();
    params.alpha[i + 1] = Polynomial();
  }
  params = specialize_fag(params, FagRange::Full);
  LieAlgebra g = generate_general(params);
  PolyVec jac = g.jacobiator(t.z1 + m, t.n - 1, t.n);

  IdentityVerdict v;
  v.triple = t;
  v.m = m;
  v.k = k;
  v.extracted = LieAlgebra::coord(jac, static_cast<int>(target));
  Abc co = abc(ctx, m);
  Polynomial gk = Polynomial::variable(gamma_name(k));
  Polynomial ak1 = Polynomial::variable(alpha_name(k + 1));
  v.closed = gk * gk * Polynomial(co.a) + gk * ak1 * Polynomial(co.b) + ak1 * ak1 * Polynomial(co.c);
  v.pass = v.extracted == v.closed;
  return v;
}

std::vector<std::pair<int, int>> guarded_mk(const Triple& t) {
  std::vector<std::pair<int, int>> out;
  CombinatorialContext ctx = context(t);
  if (t.z2 > t.n - 3) return out;
  int kmax = std::min(t.n - t.z2 - 1, t.z2 - t.z1);
  for (int k = 1; k <= kmax; ++k)
    for (int m = 0; m <= ctx.r - 1; ++m) {
      long long target = m + ctx.p + 4 - 2 * k;
      if (target >= 3 && target <= t.n) out.emplace_back(m, k);
    }
  return out;
}

std::vector<int> skipped_m(const Triple& t, int k) {
  std::vector<int> out;
  CombinatorialContext ctx = context(t);
  for (int m = 0; m <= ctx.r - 1; ++m) {
    long long target = m + ctx.p + 4 - 2 * k;
    if (target < 3 || target > t.n) out.push_back(m);
  }
  return out;
}

bool comb2_identity_holds(const Triple& t, int k) {
  CombinatorialContext ctx = context(t);
  if (k < 0 || k > ctx.q + 1 || t.z1 + k >= t.n - k)
    throw Error(Errc::IndexGuard, "comb2 index k out of range at " + t.str());
  GeneralLawParams params = GeneralLawParams::symbolic(t);
  params.alpha[1] = Polynomial();
  LieAlgebra g = generate_general(params);
  Polynomial got = LieAlgebra::coord(g.bracket_basis(t.z1 + k, t.n - k), t.n - t.z2);
  Polynomial want = Polynomial::variable(gamma_name(1)) * Polynomial(binomial(ctx.q, k)) +
                    Polynomial::variable(alpha_name(2)) * Polynomial(binomial(ctx.q, k - 1));
  return got == want;
}

bool vandermonde_step_holds(const Triple& t, int k) {
  CombinatorialContext ctx = context(t);
  if (k < 0 || k > ctx.q + 1 || t.z1 + k >= t.n - k)
    throw Error(Errc::IndexGuard, "index k out of range at " + t.str());
  LieAlgebra g = generate_general(GeneralLawParams::symbolic(t));
  Polynomial got = LieAlgebra::coord(g.bracket_basis(t.z1 + k, t.n - k), t.n - t.z2 + 1);
  Polynomial want = Polynomial::variable(alpha_name(1)) * Polynomial(binomial(ctx.q + 1, k));
  return got == want;
}

}  // namespace filiform
