#include <doctest.h>

#include <random>

#include "filiform/family.hpp"
#include "filiform/lie_algebra.hpp"

using namespace filiform;

namespace {

PolyVec random_vector(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-3, 3);
  PolyVec v(n);
  for (int i = 0; i < n; ++i) v[i] = Polynomial(d(rng));
  return v;
}

}  // namespace

TEST_CASE("model bracket follows the chain") {
  LieAlgebra g = model_algebra(5);
  PolyVec b = g.bracket(g.basis_vector(1), g.basis_vector(4));
  CHECK(LieAlgebra::coord(b, 3) == Polynomial(1));
  for (int h : {1, 2, 4, 5}) CHECK(LieAlgebra::coord(b, h).is_zero());
  // antisymmetry
  std::mt19937_64 rng(3);
  PolyVec u = random_vector(rng, 5);
  for (const auto& c : g.bracket(u, u)) CHECK(c.is_zero());
}

TEST_CASE("Bratzlavsky brackets") {
  BratzlavskyParams p;
  p.n = 6;
  p.lambda = {Polynomial(1), Polynomial(0)};
  LieAlgebra g = generate_bratzlavsky(p);
  // [x2, x3] = lambda_0 x5 + lambda_1 x6 = x5
  PolyVec b = g.bracket_basis(2, 3);
  CHECK(LieAlgebra::coord(b, 5) == Polynomial(1));
  CHECK(LieAlgebra::coord(b, 6).is_zero());
}

TEST_CASE("bilinearity on random vectors") {
  GeneralLawParams params = GeneralLawParams::symbolic({4, 5, 7});
  LieAlgebra g = generate_general(params);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    PolyVec u = random_vector(rng, 7), v = random_vector(rng, 7), w = random_vector(rng, 7);
    Polynomial a(2), b(-3);
    PolyVec au_bv(7);
    for (int i = 0; i < 7; ++i) au_bv[i] = a * u[i] + b * v[i];
    PolyVec lhs = g.bracket(au_bv, w);
    PolyVec r1 = g.bracket(u, w), r2 = g.bracket(v, w);
    for (int i = 0; i < 7; ++i) CHECK(lhs[i] == a * r1[i] + b * r2[i]);
  }
}

TEST_CASE("jacobiator vanishes on the model") {
  LieAlgebra g = model_algebra(6);
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      for (int k = j + 1; k <= 6; ++k)
        for (const auto& c : g.jacobiator(i, j, k)) CHECK(c.is_zero());
  CHECK(model_algebra(8).jacobi_check().empty());
}

TEST_CASE("Bratzlavsky is Jacobi-flat with symbolic lambda") {
  LieAlgebra g = generate_bratzlavsky(BratzlavskyParams::symbolic(7));
  for (const auto& c : g.jacobiator(1, 2, 4)) CHECK(c.is_zero());
  CHECK(g.jacobi_check().empty());
}

TEST_CASE("fully symbolic general law has quadratic violations") {
  LieAlgebra g = generate_general(GeneralLawParams::symbolic({4, 6, 10}));
  auto violations = g.jacobi_check();
  CHECK(!violations.empty());
  for (const auto& v : violations) {
    CHECK(v.i < v.j);
    CHECK(v.j < v.k);
    for (const auto& [h, poly] : v.coords) CHECK(poly.total_degree() <= 2);
  }
}

TEST_CASE("change_basis identity and permutation round trip") {
  LieAlgebra g = model_algebra(5);
  CHECK(g.change_basis(QMatrix::identity(5)).table() == g.table());

  QMatrix perm(5, 5);  // cyclic shift e_i -> e_{i+1 mod 5}
  for (int i = 0; i < 5; ++i) perm.at((i + 1) % 5, i) = Rational(1);
  LieAlgebra h = g.change_basis(perm);
  LieAlgebra back = h.change_basis(inverse(perm));
  CHECK(back.table() == g.table());

  QMatrix sing(5, 5);
  CHECK_THROWS_AS(g.change_basis(sing), Error);
}

TEST_CASE("change_basis is functorial") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-2, 2);
  LieAlgebra g = generate_bratzlavsky({6, {Polynomial(1), Polynomial(2)}});
  for (int trial = 0; trial < 8; ++trial) {
    QMatrix a(6, 6), b(6, 6);
    do {
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) a.at(i, j) = Rational(d(rng));
    } while (determinant(a).is_zero());
    do {
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) b.at(i, j) = Rational(d(rng));
    } while (determinant(b).is_zero());
    CHECK(g.change_basis(a * b).table() == g.change_basis(a).change_basis(b).table());
  }
}

TEST_CASE("Bratzlavsky relabeling with lambda = 0 is the model law") {
  BratzlavskyParams p;
  p.n = 6;
  p.lambda = {Polynomial(0), Polynomial(0)};
  LieAlgebra g = generate_bratzlavsky(p);
  LieAlgebra adapted = g.change_basis(bratzlavsky_relabeling(6));
  CHECK(adapted.table() == model_algebra(6).table());
}

TEST_CASE("coord") {
  LieAlgebra g = model_algebra(5);
  CHECK(LieAlgebra::coord(g.basis_vector(3), 3) == Polynomial(1));
  CHECK(LieAlgebra::coord(g.basis_vector(3), 2).is_zero());
  CHECK_THROWS_AS(LieAlgebra::coord(g.basis_vector(3), 6), Error);
}

TEST_CASE("json round trip and strict validation") {
  LieAlgebra g = generate_general(GeneralLawParams::symbolic({4, 4, 5}));
  LieAlgebra h = LieAlgebra::from_json(g.to_json());
  CHECK(h.table() == g.table());
  CHECK(h.parameters() == g.parameters());

  CHECK_THROWS_AS(LieAlgebra::from_json("{\"dim\": 3, \"extra\": 1}"), Error);
  CHECK_THROWS_AS(LieAlgebra::from_json("{\"dim\": 3, \"brackets\": [{\"i\": 2, \"j\": 1, \"coeffs\": {}}]}"), Error);
  CHECK_THROWS_AS(LieAlgebra::from_json("{\"dim\": 3, \"brackets\": [{\"i\": 1, \"j\": 2, \"coeffs\": {\"9\": \"1\"}}]}"), Error);
  // coefficient uses an undeclared parameter
  CHECK_THROWS_AS(
      LieAlgebra::from_json("{\"dim\": 3, \"brackets\": [{\"i\": 1, \"j\": 2, \"coeffs\": {\"1\": \"a_1\"}}]}"),
      Error);
  LieAlgebra ok = LieAlgebra::from_json(
      "{\"dim\": 3, \"parameters\": [\"a_1\"], \"brackets\": [{\"i\": 1, \"j\": 2, \"coeffs\": {\"1\": \"a_1\"}}]}");
  CHECK(ok.parameters() == std::vector<std::string>{"a_1"});
}

TEST_CASE("recursive coordinate-map relation on generated laws") {
  // P_h([e_i, e_j]) = P_{h-1}([e_{i-1}, e_j] + [e_i, e_{j-1}]) on the fourth group
  for (Triple t : {Triple{4, 6, 10}, Triple{4, 5, 7}}) {
    LieAlgebra g = generate_general(GeneralLawParams::symbolic(t));
    for (int l = 2; l <= t.n - t.z2; ++l)
      for (int k = 1; k < t.z2 - t.z1 + l; ++k) {
        int i = t.z1 + k, j = t.z2 + l;
        if (i >= j) continue;
        PolyVec lhs = g.bracket_basis(i, j);
        PolyVec sum(t.n);
        PolyVec b1 = g.bracket_basis(i - 1, j), b2 = g.bracket_basis(i, j - 1);
        for (int h = 0; h < t.n; ++h) sum[h] = b1[h] + b2[h];
        for (int h = 3; h <= t.n; ++h)
          CHECK(LieAlgebra::coord(lhs, h) == LieAlgebra::coord(sum, h - 1));
      }
  }
}
