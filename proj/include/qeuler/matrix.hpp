#pragma once

#include <cstddef>
#include <vector>

#include "qeuler/error.hpp"
#include "qeuler/qseries.hpp"

namespace qeuler {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

/// Division-free Laplace expansion memoized over column subsets:
/// O(2^k k) ring multiplications. Works over any commutative ring, so it is
/// safe for series whose pivots are not units. `zero` fixes the ring's zero
/// (for series it carries the order).
template <typename T>
T det_laplace(const Matrix<T>& m, const T& zero, const T& one) {
  const std::size_t k = m.size();
  for (const auto& row : m)
    if (row.size() != k) throw Error(ErrorCode::IndexOutOfRange, "determinant of a non-square matrix");
  if (k > 20) throw Error(ErrorCode::CapExceeded, "determinant larger than 20x20");
  // d[mask]: determinant of rows 0..|mask|-1 against the columns in mask
  std::vector<T> d(std::size_t{1} << k, zero);
  d[0] = one;
  for (std::size_t mask = 1; mask < d.size(); ++mask) {
    const int r = __builtin_popcountll(mask) - 1;
    T acc = zero;
    int sign_pos = 0;  // columns of mask to the right of c
    for (std::size_t c = k; c-- > 0;) {
      if (!((mask >> c) & 1u)) continue;
      T term = m[r][c] * d[mask & ~(std::size_t{1} << c)];
      if (sign_pos % 2 == 0)
        acc = acc + term;
      else
        acc = acc - term;
      ++sign_pos;
    }
    d[mask] = acc;
  }
  return d.back();
}

BigInt det(const Matrix<BigInt>& m);
Rational det(const Matrix<Rational>& m);
/// An empty matrix has determinant 1 at order empty_order.
QSeries det(const Matrix<QSeries>& m, int empty_order = 0);

/// Gaussian elimination over the series ring; throws DivisionByNonUnit when
/// a pivot (after row swaps) is not a unit.
QSeries det_gauss(const Matrix<QSeries>& m);

}  // namespace qeuler
