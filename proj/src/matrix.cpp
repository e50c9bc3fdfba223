#include "qeuler/matrix.hpp"

#include <algorithm>
#include <utility>

namespace qeuler {

BigInt det(const Matrix<BigInt>& m) {
  // Bareiss fraction-free elimination
  const std::size_t k = m.size();
  if (k == 0) return 1;
  Matrix<BigInt> a = m;
  for (const auto& row : a)
    if (row.size() != k) throw Error(ErrorCode::IndexOutOfRange, "determinant of a non-square matrix");
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (a[p][p] == 0) {
      std::size_t r = p + 1;
      while (r < k && a[r][p] == 0) ++r;
      if (r == k) return 0;
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        BigInt v = a[i][j] * a[p][p] - a[i][p] * a[p][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = v;
      }
      a[i][p] = 0;
    }
    prev = a[p][p];
  }
  return sign * a[k - 1][k - 1];
}

Rational det(const Matrix<Rational>& m) {
  const std::size_t k = m.size();
  Matrix<Rational> a = m;
  for (const auto& row : a)
    if (row.size() != k) throw Error(ErrorCode::IndexOutOfRange, "determinant of a non-square matrix");
  Rational out = 1;
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t r = p;
    while (r < k && a[r][p] == 0) ++r;
    if (r == k) return 0;
    if (r != p) {
      std::swap(a[p], a[r]);
      out = -out;
    }
    out *= a[p][p];
    for (std::size_t i = p + 1; i < k; ++i) {
      const Rational f = a[i][p] / a[p][p];
      if (f == 0) continue;
      for (std::size_t j = p; j < k; ++j) a[i][j] -= f * a[p][j];
    }
  }
  return out;
}

QSeries det(const Matrix<QSeries>& m, int empty_order) {
  if (m.empty()) return QSeries::one(empty_order);
  int order = m[0][0].order();
  for (const auto& row : m)
    for (const auto& e : row) order = std::min(order, e.order());
  return det_laplace(m, QSeries::zero(order), QSeries::one(order));
}

QSeries det_gauss(const Matrix<QSeries>& m) {
  const std::size_t k = m.size();
  if (k == 0) return QSeries::one(0);
  Matrix<QSeries> a = m;
  int order = a[0][0].order();
  for (const auto& row : a) {
    if (row.size() != k) throw Error(ErrorCode::IndexOutOfRange, "determinant of a non-square matrix");
    for (const auto& e : row) order = std::min(order, e.order());
  }
  QSeries out = QSeries::one(order);
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t r = p;
    while (r < k && !a[r][p].is_unit()) ++r;
    if (r == k) throw Error(ErrorCode::DivisionByNonUnit, "no unit pivot in column " + std::to_string(p + 1));
    if (r != p) {
      std::swap(a[p], a[r]);
      out = -out;
    }
    out *= a[p][p];
    const QSeries inv = a[p][p].inverse();
    for (std::size_t i = p + 1; i < k; ++i) {
      const QSeries f = a[i][p] * inv;
      for (std::size_t j = p; j < k; ++j) a[i][j] -= f * a[p][j];
    }
  }
  return out;
}

}  // namespace qeuler
