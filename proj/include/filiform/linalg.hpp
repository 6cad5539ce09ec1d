#pragma once

#include <vector>

#include "filiform/rational.hpp"

namespace filiform {

using QVector = std::vector<Rational>;

/// Dense rational matrix, row-major.
struct QMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static QMatrix identity(int n);
  QVector row(int r) const;
  QVector col(int c) const;

  friend bool operator==(const QMatrix& x, const QMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

QMatrix operator*(const QMatrix& x, const QMatrix& y);
QVector mat_vec(const QMatrix& m, const QVector& v);

/// Reduced row echelon form in place; returns the rank. Zero rows are
/// removed so the result is the canonical basis of the row space.
int rref(QMatrix& m);

int rank(QMatrix m);
Rational determinant(QMatrix m);
QMatrix inverse(const QMatrix& m);  // SingularMatrix if det = 0

/// Canonical (RREF) basis of the null space {x : m x = 0}, rows = vectors.
QMatrix kernel_basis(const QMatrix& m);

}  // namespace filiform
