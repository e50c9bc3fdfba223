#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qeuler {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Truncated power series in q with exact rational coefficients.
///
/// A series of order N knows the coefficients of q^0..q^N and nothing beyond.
/// Binary operations truncate to the smaller of the two orders, so a result
/// never claims more precision than its inputs. Values are immutable once
/// built; every operation returns a fresh series.
class QSeries {
 public:
  QSeries() : QSeries(0) {}
  explicit QSeries(int order);
  QSeries(std::vector<Rational> coeffs, int order);

  static QSeries zero(int order) { return QSeries(order); }
  static QSeries one(int order) { return constant(1, order); }
  static QSeries constant(const Rational& c, int order);
  static QSeries monomial(const Rational& c, int exponent, int order);
  /// Polynomial from integer coefficients (index = exponent).
  static QSeries polynomial(std::span<const long long> coeffs, int order);
  static QSeries polynomial(std::span<const BigInt> coeffs, int order);
  /// 1 / (1 - q^step), step >= 1.
  static QSeries geometric(int step, int order);

  int order() const noexcept { return order_; }
  const Rational& operator[](int exponent) const;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  /// Index of the first nonzero coefficient, or order()+1 for the zero series.
  int valuation() const;
  bool is_unit() const { return sgn(coeffs_[0]) != 0; }

  QSeries truncated(int new_order) const;
  /// Multiply by q^e. A positive shift keeps the order (the top coefficients
  /// fall off); a negative one requires valuation() >= -e and lowers it by -e.
  QSeries shifted(int e) const;

  QSeries mul_one_minus_q_pow(int m) const;
  QSeries div_one_minus_q_pow(int m) const;
  QSeries inverse() const;

  /// Sum of c_i x^i over the known coefficients; equals the polynomial value
  /// whenever the degree does not exceed order().
  Rational evaluate(const Rational& x) const;

  std::string to_string() const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator/(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const Rational& c);
  friend QSeries operator*(const Rational& c, const QSeries& a) { return a * c; }

  QSeries& operator+=(const QSeries& b) { return *this = *this + b; }
  QSeries& operator-=(const QSeries& b) { return *this = *this - b; }
  QSeries& operator*=(const QSeries& b) { return *this = *this * b; }

  /// Same order and identical coefficients.
  friend bool operator==(const QSeries& a, const QSeries& b);

 private:
  std::vector<Rational> coeffs_;
  int order_;
};

/// Coefficient-wise equality up to the shared (minimum) order.
bool eq_mod(const QSeries& a, const QSeries& b);

/// Divide after cancelling a common power of q; the result loses
/// valuation(b) orders of precision. Throws DivisionByNonUnit when a has
/// lower valuation than b.
QSeries div_cancel_q(const QSeries& a, const QSeries& b);

/// (q^a_exp; q)_n = (1 - q^a_exp)(1 - q^{a_exp+1})...(1 - q^{a_exp+n-1}).
QSeries pochhammer(int a_exp, int n, int order);

/// Gaussian binomial [n choose m]_q.
QSeries qbinom(int n, int m, int order);

/// Bivariate truncated series: polynomial in x with QSeries coefficients.
class XQSeries {
 public:
  XQSeries(int xorder, int qorder);
  explicit XQSeries(std::vector<QSeries> xcoeffs);

  int xorder() const noexcept { return static_cast<int>(xcoeffs_.size()) - 1; }
  int qorder() const noexcept { return qorder_; }
  const QSeries& operator[](int power) const;
  std::span<const QSeries> xcoeffs() const noexcept { return xcoeffs_; }

  friend XQSeries operator+(const XQSeries& a, const XQSeries& b);
  friend XQSeries operator-(const XQSeries& a, const XQSeries& b);
  friend XQSeries operator*(const XQSeries& a, const XQSeries& b);
  friend XQSeries operator/(const XQSeries& a, const XQSeries& b);

 private:
  std::vector<QSeries> xcoeffs_;
  int qorder_;
};

bool eq_mod(const XQSeries& a, const XQSeries& b);

}  // namespace qeuler
