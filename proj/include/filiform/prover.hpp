#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "filiform/lemmas.hpp"
#include "filiform/series.hpp"

namespace filiform {

/// Replay of the derived-length theorem's contradiction at one triple of
/// the empty region: exact sign pattern, violated relation
/// b0^2 a' = a0 (a0 c1 - b0 b'), and the inductive step count.
struct EmptinessCertificate {
  Triple triple;
  long long p = 0, q = 0, r = 0;
  Rational alpha1_factor;  // nonzero => alpha_1 = 0 forced
  Rational a0, b0, a1, b1, c1, a_prime, b_prime;
  bool signs_ok = false;
  Rational lhs, rhs;  // b0^2 a' and a0 (a0 c1 - b0 b')
  bool relation_violated = false;
  int steps = 0;  // min(n-z2-1, z2-z1)
  std::vector<std::string> step_conclusions;
  std::string terminal;
  bool conclusion = false;

  std::string to_json() const;
};

EmptinessCertificate emptiness_certificate(const Triple& t);  // NotInRegion, SignPatternFailure

struct FoundInstance {
  std::map<std::string, Rational> params;
};

/// Heuristic evidence only: absence of grid solutions never proves
/// emptiness over the complex field.
struct SearchReport {
  Triple triple;
  std::vector<Rational> grid;
  long long budget = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  long long tested = 0;
  std::vector<FoundInstance> found;  // Jacobi-consistent, nondegenerate

  std::string to_json() const;
};

SearchReport grid_search(const Triple& t, const std::vector<Rational>& grid, long long budget,
                         std::uint64_t seed);

struct TheoremVerdict {
  Triple triple;
  int derived_length = 0;
  int z1 = 0, z2 = 0;
  bool pass = false;
  std::string detail;
};

/// For a numeric Jacobi-consistent nondegenerate F_{alpha,gamma} instance:
/// derived length <= 3, with = 2 exactly when z2 = n-1 (non-model
/// metabelian) and = 3 when z2 = n-2. PreconditionFailure on instances that
/// fail Jacobi or do not realize their triple.
TheoremVerdict derived_length_theorem_check(const Triple& t,
                                            const std::map<std::string, Rational>& fag_params);

/// The dimension-15 derived-length-4 family at (4,9,15): the general law
/// with alpha_6 = beta33/14, gamma_5 = 363 beta33, beta_{1,5} = 27 beta33,
/// beta_{2,4} = 21/5 beta33, beta_{4,2} = 3/10 beta33, all others zero.
LieAlgebra paper15(const Rational& beta33);

/// The 14-parameter symbolic family at (4,17,31) together with its quadratic
/// Jacobi constraints; the constraint system is emitted, not solved.
std::pair<LieAlgebra, std::vector<Polynomial>> paper31_family();

/// Nonzero coordinate polynomials of all Jacobiators of a parametric
/// algebra, sign-normalized, deduplicated, in canonical order. Total degree
/// is at most 2 in the parameters.
std::vector<Polynomial> constraints(const LieAlgebra& g);

}  // namespace filiform
