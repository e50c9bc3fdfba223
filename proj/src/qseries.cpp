#include "qeuler/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "qeuler/error.hpp"

namespace qeuler {

namespace {

void require_order(int order) {
  if (order < 0) throw Error(ErrorCode::IndexOutOfRange, "series order must be nonnegative");
}

}  // namespace

QSeries::QSeries(int order) : order_(order) {
  require_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

QSeries::QSeries(std::vector<Rational> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1, Rational(0));
}

QSeries QSeries::constant(const Rational& c, int order) {
  QSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

QSeries QSeries::monomial(const Rational& c, int exponent, int order) {
  if (exponent < 0) throw Error(ErrorCode::NegativeExponent, "monomial exponent " + std::to_string(exponent));
  QSeries s(order);
  if (exponent <= order) s.coeffs_[exponent] = c;
  return s;
}

QSeries QSeries::polynomial(std::span<const long long> coeffs, int order) {
  QSeries s(order);
  for (std::size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= order; ++i)
    s.coeffs_[i] = Rational(static_cast<long>(coeffs[i]));
  return s;
}

QSeries QSeries::polynomial(std::span<const BigInt> coeffs, int order) {
  QSeries s(order);
  for (std::size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= order; ++i)
    s.coeffs_[i] = Rational(coeffs[i]);
  return s;
}

QSeries QSeries::geometric(int step, int order) {
  if (step < 1) throw Error(ErrorCode::DivisionByNonUnit, "1/(1-q^m) needs m >= 1");
  QSeries s(order);
  for (int i = 0; i <= order; i += step) s.coeffs_[i] = 1;
  return s;
}

const Rational& QSeries::operator[](int exponent) const {
  if (exponent < 0 || exponent > order_)
    throw Error(ErrorCode::IndexOutOfRange,
                "coefficient q^" + std::to_string(exponent) + " beyond order " + std::to_string(order_));
  return coeffs_[exponent];
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

int QSeries::valuation() const {
  for (int i = 0; i <= order_; ++i)
    if (sgn(coeffs_[i]) != 0) return i;
  return order_ + 1;
}

QSeries QSeries::truncated(int new_order) const {
  if (new_order > order_)
    throw Error(ErrorCode::OrderMismatch,
                "cannot raise order from " + std::to_string(order_) + " to " + std::to_string(new_order));
  return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1), new_order);
}

QSeries QSeries::shifted(int e) const {
  if (e >= 0) {
    QSeries s(order_);
    for (int i = 0; i + e <= order_; ++i) s.coeffs_[i + e] = coeffs_[i];
    return s;
  }
  const int down = -e;
  if (valuation() < down)
    throw Error(ErrorCode::NegativeExponent,
                "dividing by q^" + std::to_string(down) + " leaves a negative power (valuation " +
                    std::to_string(valuation()) + ")");
  if (order_ - down < 0) throw Error(ErrorCode::OrderMismatch, "shift consumes the whole order");
  return QSeries(std::vector<Rational>(coeffs_.begin() + down, coeffs_.end()), order_ - down);
}

QSeries QSeries::mul_one_minus_q_pow(int m) const {
  QSeries s = *this;
  for (int i = order_; i >= m; --i) s.coeffs_[i] -= coeffs_[i - m];
  return s;
}

QSeries QSeries::div_one_minus_q_pow(int m) const {
  if (m < 1) throw Error(ErrorCode::DivisionByNonUnit, "1 - q^0 is not a unit");
  QSeries s = *this;
  for (int i = m; i <= order_; ++i) s.coeffs_[i] += s.coeffs_[i - m];
  return s;
}

QSeries QSeries::inverse() const {
  if (!is_unit()) throw Error(ErrorCode::DivisionByNonUnit, "constant term is zero");
  QSeries r(order_);
  const Rational inv0 = 1 / coeffs_[0];
  r.coeffs_[0] = inv0;
  for (int n = 1; n <= order_; ++n) {
    Rational acc = 0;
    for (int i = 1; i <= n; ++i)
      if (sgn(coeffs_[i]) != 0) acc += coeffs_[i] * r.coeffs_[n - i];
    r.coeffs_[n] = -acc * inv0;
  }
  return r;
}

Rational QSeries::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (int i = order_; i >= 0; --i) acc = acc * x + coeffs_[i];
  return acc;
}

std::string QSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= order_; ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0 || !unit) out << mag.get_str();
    if (i >= 1) out << "q";
    if (i >= 2) out << "^" << i;
  }
  if (first) out << "0";
  out << " + O(q^" << order_ + 1 << ")";
  return out.str();
}

QSeries QSeries::operator-() const {
  QSeries s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  const int order = std::min(a.order_, b.order_);
  QSeries s(order);
  for (int i = 0; i <= order; ++i) s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  const int order = std::min(a.order_, b.order_);
  QSeries s(order);
  for (int i = 0; i <= order; ++i) s.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return s;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int order = std::min(a.order_, b.order_);
  QSeries s(order);
  std::vector<int> nz_b;
  for (int j = 0; j <= order; ++j)
    if (sgn(b.coeffs_[j]) != 0) nz_b.push_back(j);
  for (int i = 0; i <= order; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (int j : nz_b) {
      if (i + j > order) break;
      s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return s;
}

QSeries operator*(const QSeries& a, const Rational& c) {
  QSeries s = a;
  for (auto& x : s.coeffs_) x *= c;
  return s;
}

QSeries operator/(const QSeries& a, const QSeries& b) {
  if (!b.is_unit()) throw Error(ErrorCode::DivisionByNonUnit, "divisor has zero constant term");
  const int order = std::min(a.order_, b.order_);
  QSeries r(order);
  const Rational inv0 = 1 / b.coeffs_[0];
  for (int n = 0; n <= order; ++n) {
    Rational acc = a.coeffs_[n];
    for (int i = 1; i <= n; ++i)
      if (sgn(b.coeffs_[i]) != 0) acc -= b.coeffs_[i] * r.coeffs_[n - i];
    r.coeffs_[n] = acc * inv0;
  }
  return r;
}

bool operator==(const QSeries& a, const QSeries& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

bool eq_mod(const QSeries& a, const QSeries& b) {
  const int order = std::min(a.order(), b.order());
  for (int i = 0; i <= order; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

QSeries div_cancel_q(const QSeries& a, const QSeries& b) {
  const int v = b.valuation();
  if (v > b.order()) throw Error(ErrorCode::DivisionByNonUnit, "divisor is zero to its order");
  if (v == 0) return a / b;
  if (a.valuation() < v)
    throw Error(ErrorCode::DivisionByNonUnit, "quotient would have negative powers of q");
  return a.shifted(-v) / b.shifted(-v);
}

QSeries pochhammer(int a_exp, int n, int order) {
  if (a_exp < 0) throw Error(ErrorCode::NegativeExponent, "pochhammer base exponent must be >= 0");
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "pochhammer length must be >= 0");
  QSeries s = QSeries::one(order);
  for (int i = 0; i < n; ++i) {
    const int m = a_exp + i;
    if (m == 0) return QSeries::zero(order);
    s = s.mul_one_minus_q_pow(m);
  }
  return s;
}

QSeries qbinom(int n, int m, int order) {
  if (m < 0 || n < 0 || m > n)
    throw Error(ErrorCode::IndexOutOfRange, "qbinom(" + std::to_string(n) + ", " + std::to_string(m) + ")");
  const int degree = m * (n - m);
  const int work = std::max(order, degree);
  QSeries s = pochhammer(1, n, work);
  for (int i = 1; i <= m; ++i) s = s.div_one_minus_q_pow(i);
  for (int i = 1; i <= n - m; ++i) s = s.div_one_minus_q_pow(i);
  for (int i = 0; i <= work; ++i) {
    const Rational& c = s[i];
    if (c.get_den() != 1 || sgn(c) < 0 || (i > degree && sgn(c) != 0))
      throw Error(ErrorCode::DivisionByNonUnit, "Gaussian binomial division was not exact");
  }
  return s.truncated(order);
}

XQSeries::XQSeries(int xorder, int qorder) : qorder_(qorder) {
  if (xorder < 0) throw Error(ErrorCode::IndexOutOfRange, "x-order must be nonnegative");
  xcoeffs_.assign(static_cast<std::size_t>(xorder) + 1, QSeries::zero(qorder));
}

XQSeries::XQSeries(std::vector<QSeries> xcoeffs) : xcoeffs_(std::move(xcoeffs)) {
  if (xcoeffs_.empty()) throw Error(ErrorCode::IndexOutOfRange, "x-series needs at least one coefficient");
  qorder_ = xcoeffs_.front().order();
  for (const auto& c : xcoeffs_)
    if (c.order() != qorder_) throw Error(ErrorCode::OrderMismatch, "x-coefficients must share one q-order");
}

const QSeries& XQSeries::operator[](int power) const {
  if (power < 0 || power > xorder())
    throw Error(ErrorCode::IndexOutOfRange, "x^" + std::to_string(power) + " beyond x-order");
  return xcoeffs_[power];
}

namespace {

template <typename Op>
XQSeries zip(const XQSeries& a, const XQSeries& b, Op op) {
  const int xo = std::min(a.xorder(), b.xorder());
  std::vector<QSeries> out;
  out.reserve(xo + 1);
  for (int i = 0; i <= xo; ++i) out.push_back(op(a[i], b[i]));
  return XQSeries(std::move(out));
}

}  // namespace

XQSeries operator+(const XQSeries& a, const XQSeries& b) {
  return zip(a, b, [](const QSeries& x, const QSeries& y) { return x + y; });
}

XQSeries operator-(const XQSeries& a, const XQSeries& b) {
  return zip(a, b, [](const QSeries& x, const QSeries& y) { return x - y; });
}

XQSeries operator*(const XQSeries& a, const XQSeries& b) {
  const int xo = std::min(a.xorder(), b.xorder());
  const int qo = std::min(a.qorder(), b.qorder());
  std::vector<QSeries> out(xo + 1, QSeries::zero(qo));
  for (int i = 0; i <= xo; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= xo; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return XQSeries(std::move(out));
}

XQSeries operator/(const XQSeries& a, const XQSeries& b) {
  if (!b[0].is_unit()) throw Error(ErrorCode::DivisionByNonUnit, "x^0 coefficient of divisor is not a q-unit");
  const int xo = std::min(a.xorder(), b.xorder());
  const int qo = std::min(a.qorder(), b.qorder());
  const QSeries inv0 = b[0].truncated(qo).inverse();
  std::vector<QSeries> out;
  out.reserve(xo + 1);
  for (int n = 0; n <= xo; ++n) {
    QSeries acc = a[n].truncated(qo);
    for (int i = 1; i <= n; ++i)
      if (!b[i].is_zero()) acc -= b[i] * out[n - i];
    out.push_back(acc * inv0);
  }
  return XQSeries(std::move(out));
}

bool eq_mod(const XQSeries& a, const XQSeries& b) {
  const int xo = std::min(a.xorder(), b.xorder());
  for (int i = 0; i <= xo; ++i)
    if (!eq_mod(a[i], b[i])) return false;
  return true;
}

}  // namespace qeuler
