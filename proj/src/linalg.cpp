#include "filiform/linalg.hpp"

#include <algorithm>

namespace filiform {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

QVector QMatrix::row(int r) const {
  QVector v(cols);
  for (int c = 0; c < cols; ++c) v[c] = at(r, c);
  return v;
}

QVector QMatrix::col(int c) const {
  QVector v(rows);
  for (int r = 0; r < rows; ++r) v[r] = at(r, c);
  return v;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  if (x.cols != y.rows) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
  QMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rational& xik = x.at(i, k);
      if (xik.is_zero()) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Rational& ykj = y.at(k, j);
        if (!ykj.is_zero()) r.at(i, j) += xik * ykj;
      }
    }
  return r;
}

QVector mat_vec(const QMatrix& m, const QVector& v) {
  if (static_cast<int>(v.size()) != m.cols) throw Error(Errc::DimensionMismatch, "matrix-vector shape mismatch");
  QVector r(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m.at(i, j).is_zero() && !v[j].is_zero()) r[i] += m.at(i, j) * v[j];
  return r;
}

int rref(QMatrix& m) {
  int lead = 0;
  for (int r = 0; r < m.rows && lead < m.cols; ++r) {
    int pivot = -1;
    while (lead < m.cols) {
      for (int i = r; i < m.rows; ++i)
        if (!m.at(i, lead).is_zero()) {
          pivot = i;
          break;
        }
      if (pivot >= 0) break;
      ++lead;
    }
    if (pivot < 0) break;
    if (pivot != r)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(r, c));
    Rational inv = Rational(1) / m.at(r, lead);
    for (int c = lead; c < m.cols; ++c) m.at(r, c) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, lead).is_zero()) continue;
      Rational f = m.at(i, lead);
      for (int c = lead; c < m.cols; ++c) m.at(i, c) -= f * m.at(r, c);
    }
    ++lead;
  }
  int rank = 0;
  for (int r = 0; r < m.rows; ++r) {
    bool nonzero = false;
    for (int c = 0; c < m.cols; ++c)
      if (!m.at(r, c).is_zero()) {
        nonzero = true;
        break;
      }
    if (nonzero) ++rank;
  }
  // drop zero rows
  QMatrix out(rank, m.cols);
  int k = 0;
  for (int r = 0; r < m.rows; ++r) {
    bool nonzero = false;
    for (int c = 0; c < m.cols; ++c)
      if (!m.at(r, c).is_zero()) {
        nonzero = true;
        break;
      }
    if (nonzero) {
      for (int c = 0; c < m.cols; ++c) out.at(k, c) = m.at(r, c);
      ++k;
    }
  }
  m = std::move(out);
  return rank;
}

int rank(QMatrix m) { return rref(m); }

Rational determinant(QMatrix m) {
  if (m.rows != m.cols) throw Error(Errc::DimensionMismatch, "determinant of non-square matrix");
  int n = m.rows;
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!m.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    Rational inv = Rational(1) / m.at(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (m.at(r, c).is_zero()) continue;
      Rational f = m.at(r, c) * inv;
      for (int j = c; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
    }
  }
  return det;
}

QMatrix inverse(const QMatrix& m) {
  if (m.rows != m.cols) throw Error(Errc::DimensionMismatch, "inverse of non-square matrix");
  int n = m.rows;
  QMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rational(1);
  }
  int r = rref(aug);
  if (r < n) throw Error(Errc::SingularMatrix, "matrix is singular");
  // after full reduction the left block must be the identity
  for (int i = 0; i < n; ++i)
    if (aug.at(i, i) != Rational(1)) throw Error(Errc::SingularMatrix, "matrix is singular");
  QMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

QMatrix kernel_basis(const QMatrix& m) {
  QMatrix r = m;
  rref(r);
  int n = m.cols;
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < r.rows; ++i) {
    for (int c = 0; c < n; ++c)
      if (!r.at(i, c).is_zero()) {
        pivot_col.push_back(c);
        is_pivot[c] = true;
        break;
      }
  }
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  QMatrix ker(static_cast<int>(free_cols.size()), n);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    ker.at(static_cast<int>(k), fc) = Rational(1);
    for (int i = 0; i < r.rows; ++i) ker.at(static_cast<int>(k), pivot_col[i]) = -r.at(i, fc);
  }
  rref(ker);  // canonical basis
  return ker;
}

}  // namespace filiform
