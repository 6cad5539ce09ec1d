#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "filiform/linalg.hpp"
#include "filiform/polynomial.hpp"

namespace filiform {

/// Coordinate vector relative to the basis e_1..e_n, entry h-1 = P_h.
using PolyVec = std::vector<Polynomial>;

struct JacobiViolation {
  int i, j, k;
  std::vector<std::pair<int, Polynomial>> coords;  // (h, nonzero coefficient)
};

/// Structure-constant presentation of a Lie algebra: only pairs i < j with
/// a nonzero bracket are stored, [e_j, e_i] = -[e_i, e_j] is implied.
class LieAlgebra {
 public:
  using Table = std::map<std::pair<int, int>, PolyVec>;

  LieAlgebra(int n, Table table);

  int dim() const { return n_; }
  bool numeric() const { return parameters_.empty(); }
  const std::vector<std::string>& parameters() const { return parameters_; }
  const Table& table() const { return table_; }

  /// Stored coefficient vector for i < j, nullptr when the bracket is zero.
  const PolyVec* find(int i, int j) const;

  /// [e_i, e_j] for any i, j (antisymmetry applied).
  PolyVec bracket_basis(int i, int j) const;

  PolyVec bracket(const PolyVec& u, const PolyVec& v) const;

  /// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j], requires i < j < k.
  PolyVec jacobiator(int i, int j, int k) const;

  /// Triples (i,j,k) in lexicographic order whose Jacobiator is nonzero,
  /// decided symbolically for parametric algebras.
  std::vector<JacobiViolation> jacobi_check() const;

  /// Same algebra expressed in the basis given by the columns of M.
  LieAlgebra change_basis(const QMatrix& M) const;

  /// Substitutes parameters (all or a subset) by rational values.
  LieAlgebra specialize(const std::map<std::string, Rational>& assignment) const;

  /// Numeric structure constants; ParametricInput when parameters remain.
  std::map<std::pair<int, int>, QVector> numeric_table() const;

  PolyVec basis_vector(int i) const;
  static Polynomial coord(const PolyVec& u, int h);

  static LieAlgebra from_json(const std::string& text);
  std::string to_json() const;

 private:
  int n_;
  Table table_;
  std::vector<std::string> parameters_;  // natural order, derived from entries
};

/// Chain algebra [e_1, e_h] = e_{h-1}: the model filiform law.
LieAlgebra model_algebra(int n);

}  // namespace filiform
