#pragma once

#include <optional>
#include <string>
#include <vector>

#include "filiform/lie_algebra.hpp"

namespace filiform {

/// Subspace of Q^n in canonical form: the basis rows are the reduced row
/// echelon form of any spanning set, so equality is representation-free.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(int ambient, const std::vector<QVector>& vectors);
  static Subspace full(int n);
  static Subspace zero(int n);

  int dim() const { return basis_.rows; }
  int ambient() const { return ambient_; }
  const QMatrix& basis() const { return basis_; }

  bool contains_vector(const QVector& v) const;
  bool contains(const Subspace& other) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  int ambient_ = 0;
  QMatrix basis_;  // RREF, dim rows
};

struct SeriesReport {
  std::vector<int> lcs_dims;
  std::vector<int> ds_dims;
  bool nilpotent = false;
  bool solvable = false;
  std::optional<int> nilindex;
  std::optional<int> derived_length;
  bool filiform = false;
  std::optional<bool> model;  // not applicable unless filiform
  std::optional<int> z1, z2;
  bool abelian = false;

  std::string to_json() const;
};

/// Span of [A, B] inside g (numeric).
Subspace product_space(const LieAlgebra& g, const Subspace& A, const Subspace& B);

/// C^1 = g, C^k = [C^{k-1}, g]; the list ends at the first repetition.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

/// D^0 = g, D^k = [D^{k-1}, D^{k-1}]; ends at the first repetition.
std::vector<Subspace> derived_series(const LieAlgebra& g);

/// Centralizer {x in g : [x, h] = 0}, exact kernel computation.
Subspace centralizer(const LieAlgebra& g, const Subspace& h);

SeriesReport classify(const LieAlgebra& g);

struct ZInvariants {
  bool model = false;
  int z1 = 0, z2 = 0;              // reported values
  int z1_def = 0, z2_def = 0;      // centralizer/abelian-ideal route
  std::optional<int> z1_prac, z2_prac;  // adapted-basis route, when available
  bool agree = true;
};

/// The invariants (z1, z2) of a non-model filiform algebra. With
/// assume_adapted the standard basis must satisfy the adapted relations and
/// both computation routes are required to agree; otherwise an adapted basis
/// is constructed first and both values are reported.
ZInvariants invariants_z(const LieAlgebra& g, bool assume_adapted);

struct AdaptedCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Checks the adapted relations on the standard basis: [e1,e_h] = e_{h-1}
/// for 3 <= h <= n, [e2,.] = 0 and [e3,e_h] = 0 for h >= 2. Works on
/// parametric algebras as well (relations checked symbolically).
AdaptedCheck verify_adapted(const LieAlgebra& g);

/// Finds a basis change M such that change_basis(g, M) is adapted and its
/// lower central series ideals are the coordinate subspaces <e2..e_{n-k+1}>.
/// Complete over its declared candidate space; SearchFailed otherwise.
QMatrix construct_adapted(const LieAlgebra& g);

/// True when every C^k of the (numeric) algebra equals <e2, ..., e_{n-k+1}>.
bool lcs_is_coordinate_flag(const LieAlgebra& g);

}  // namespace filiform
