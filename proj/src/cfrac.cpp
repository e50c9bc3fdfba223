#include "qeuler/cfrac.hpp"

#include <map>

#include "qeuler/error.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/tableaux.hpp"

namespace qeuler {

namespace {

/// 1/((1-q^{2i+1})(1-q^{2i+3})) times q^e.
QSeries tangent_weight(int e, int i, int order) {
  return QSeries::monomial(1, e, order).div_one_minus_q_pow(2 * i + 1).div_one_minus_q_pow(2 * i + 3);
}

}  // namespace

CFSpec cf_tangent_spec() {
  return {"tangent", [](int i, int order) { return tangent_weight(2 * i + 1, i, order); }};
}

CFSpec cf_tangent_star_spec() {
  return {"tangent-star",
          [](int i, int order) { return tangent_weight(i % 2 == 0 ? i : 3 * i + 2, i, order); }};
}

CFSpec cf_constant_spec(const QSeries& c) {
  return {"constant", [c](int, int order) { return c.truncated(std::min(order, c.order())); }};
}

QSeries delta_specialization(int i, int order) {
  if (i <= 0) return QSeries::one(order);
  const int m = (i + 1) / 2;  // number of rows
  Partition lambda, mu;
  const int top = i % 2 == 0 ? 3 * m + 1 : 3 * m - 1;
  for (int r = 0; r < m; ++r) {
    lambda.push_back(top - r);
    mu.push_back(m - 1 - r);
  }
  return principal_spec_skew_schur(SkewShape(lambda, mu), order);
}

CFSpec cf_delta_spec() {
  return {"delta", [](int i, int order) {
            auto delta_ratio = [&](int margin) {
              const int o = order + margin;
              const QSeries num = delta_specialization(i - 2, o) * delta_specialization(i + 1, o);
              const QSeries den = delta_specialization(i - 1, o) * delta_specialization(i, o);
              return std::make_pair(den.valuation(), div_cancel_q(num, den));
            };
            auto [v, w] = delta_ratio(8);
            if (v > 8) w = delta_ratio(v).second;
            if (i % 2 == 1) w = -w;
            return w.truncated(order);
          }};
}

XQSeries cf_convergent(const CFSpec& spec, int depth, int xorder, int qorder) {
  if (2 * depth < xorder)
    throw Error(ErrorCode::DepthTooSmall, "depth " + std::to_string(depth) + " cannot fix x^" + std::to_string(xorder));
  auto constant = [&](const QSeries& c) {
    std::vector<QSeries> xs(xorder + 1, QSeries::zero(qorder));
    xs[0] = c;
    return XQSeries(xs);
  };
  XQSeries f = constant(QSeries::one(qorder));
  for (int i = depth - 1; i >= 0; --i) {
    // 1 - w_i x^2 f
    std::vector<QSeries> xs(xorder + 1, QSeries::zero(qorder));
    xs[0] = QSeries::one(qorder);
    const QSeries w = spec.w(i, qorder);
    for (int p = 0; p + 2 <= xorder; ++p) xs[p + 2] = -(w * f[p]);
    f = constant(QSeries::one(qorder)) / XQSeries(xs);
  }
  return f;
}

QSeries flajolet_path_sum(const std::function<QSeries(int, int)>& u, const std::function<QSeries(int, int)>& d,
                          int n, int qorder) {
  std::vector<QSeries> dp(n + 2, QSeries::zero(qorder));
  dp[0] = QSeries::one(qorder);
  for (int step = 0; step < 2 * n; ++step) {
    std::vector<QSeries> next(n + 2, QSeries::zero(qorder));
    const int remaining = 2 * n - step - 1;
    for (int h = 0; h <= n; ++h) {
      if (dp[h].is_zero()) continue;
      if (h + 1 <= remaining) next[h + 1] += dp[h] * u(h, qorder);
      if (h >= 1) next[h - 1] += dp[h] * d(h, qorder);
    }
    dp.swap(next);
  }
  return dp[0];
}

QSeries flajolet_path_sum(const CFSpec& spec, int n, int qorder) {
  return flajolet_path_sum(spec.w, [](int, int order) { return QSeries::one(order); }, n, qorder);
}

XQSeries quotient_gf(const QuotientSpec& spec, int xorder, int qorder) {
  std::vector<QSeries> num(xorder + 1, QSeries::zero(qorder)), den(xorder + 1, QSeries::zero(qorder));
  for (int n = 0; 2 * n <= xorder; ++n) {
    const Rational sign = n % 2 == 0 ? 1 : -1;
    const int de = spec.C * n * n + spec.D * n;
    if (de < 0) throw Error(ErrorCode::NegativeExponent, "denominator exponent below zero");
    den[2 * n] = QSeries::monomial(sign, de, qorder) / pochhammer(1, 2 * n, qorder);
    if (2 * n + 1 <= xorder) {
      const int ne = spec.A * n * n + spec.B * n;
      if (ne < 0) throw Error(ErrorCode::NegativeExponent, "numerator exponent below zero");
      num[2 * n + 1] = QSeries::monomial(sign, ne, qorder) / pochhammer(1, 2 * n + 1, qorder);
    }
  }
  if (spec.parity == QuotientParity::Secant) {
    std::vector<QSeries> one(xorder + 1, QSeries::zero(qorder));
    one[0] = QSeries::one(qorder);
    return XQSeries(one) / XQSeries(den);
  }
  return XQSeries(num) / XQSeries(den);
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = [] {
    auto w_pow = [](std::string name, std::function<int(int)> e) {
      return CFSpec{std::move(name), [e](int i, int order) { return tangent_weight(e(i), i, order); }};
    };
    using Q = QuotientSpec;
    const auto T = QuotientParity::Tangent;
    std::vector<Table1Row> r;
    r.push_back({"ge-lt", "ge-lt", Q{0, 0, 0, 0, T}, cf_tangent_spec(), ClassKind::Alt, StatExpr::MajInv});
    r.push_back({"le-gt", "le-gt", Q{2, 1, 2, -1, T}, cf_tangent_spec(), ClassKind::Ralt, StatExpr::MajInv});
    r.push_back({"ge-le", "ge-le", Q{1, 1, 1, -1, T}, cf_tangent_star_spec(), ClassKind::Alt, StatExpr::MajKappaInv});
    r.push_back({"lt-gt", "lt-gt", Q{1, 1, 1, 0, T}, std::nullopt, ClassKind::Ralt, StatExpr::MajKappaInv});
    r.push_back({"gt-lt", "gt-lt", Q{1, 0, 1, 0, T},
                 w_pow("gt-lt", [](int i) { return i % 2 == 0 ? 3 * i + 2 : i; }), ClassKind::Alt,
                 StatExpr::MajEtaInv});
    r.push_back({"q01", "", Q{0, 1, 0, 1, T}, w_pow("q01", [](int i) { return 2 * i + 2; }), std::nullopt,
                 std::nullopt});
    r.push_back({"q20", "", Q{2, 0, 2, -2, T}, w_pow("q20", [](int i) { return 2 * i; }), std::nullopt,
                 std::nullopt});
    r.push_back({"le-ge", "le-ge", Q{1, 0, 1, -1, T}, std::nullopt, ClassKind::Ralt, StatExpr::MajEtaInv});
    return r;
  }();
  return rows;
}

const Table1Row& table1_row(const std::string& id) {
  for (const auto& r : table1_rows())
    if (r.id == id) return r;
  throw Error(ErrorCode::UnknownRow, "no continued fraction row '" + id + "'");
}

Table1Check table1_row_check(const Table1Row& row, int n, int qorder) {
  Table1Check out;
  const int N = 2 * n + 1;
  out.quotient = quotient_gf(row.quotient, N, qorder)[N];
  bool ok = true;
  if (row.m_class && row.m_expr) {
    out.normalized_tau = stat_sum(*row.m_class, N, *row.m_expr, qorder) / pochhammer(1, N, qorder);
    ok = ok && eq_mod(*out.normalized_tau, out.quotient);
  }
  if (row.cf) {
    const XQSeries f = cf_convergent(*row.cf, n, 2 * n, qorder);
    out.cf = f[2 * n].div_one_minus_q_pow(1);
    ok = ok && eq_mod(*out.cf, out.quotient);
  }
  out.ok = ok;
  return out;
}

SeriesPair secant_delta_check(int n, int qorder) {
  const QSeries lhs = stat_sum(ClassKind::Alt, 2 * n, StatExpr::MajInv, qorder) / pochhammer(1, 2 * n, qorder);
  return {lhs, flajolet_path_sum(cf_delta_spec(), n, qorder)};
}

SeriesPair schroder_cf_check(int n, int qorder) {
  // dp over positions; a flat step covers two units
  std::vector<std::vector<QSeries>> dp(2 * n + 1, std::vector<QSeries>(n + 2, QSeries::zero(qorder)));
  dp[0][0] = QSeries::one(qorder);
  for (int x = 0; x < 2 * n; ++x) {
    for (int h = 0; h <= n; ++h) {
      const QSeries& cur = dp[x][h];
      if (cur.is_zero()) continue;
      if (h + 1 <= n) dp[x + 1][h + 1] += cur;
      if (h >= 1) {
        const QSeries b = QSeries::one(qorder).div_one_minus_q_pow(2 * h - 1).div_one_minus_q_pow(2 * h + 1);
        dp[x + 1][h - 1] += cur * b;
        if (x + 2 <= 2 * n) dp[x + 2][h] -= cur.div_one_minus_q_pow(2 * h + 1);
      }
    }
  }
  return {dp[2 * n][0], flajolet_path_sum(cf_tangent_star_spec(), n, qorder)};
}

SeriesPair tangent_cf_check(int n, int qorder) {
  return {e_over_poch_paths(n, qorder), flajolet_path_sum(cf_tangent_spec(), n, qorder).div_one_minus_q_pow(1)};
}

SeriesPair tangent_star_cf_check(int n, int qorder) {
  return {estar_over_poch_paths(n, qorder),
          flajolet_path_sum(cf_tangent_star_spec(), n, qorder).div_one_minus_q_pow(1)};
}

SeriesPair combined_weight_check(int i, int qorder) {
  const QSeries lhs = -QSeries::geometric(2 * i + 1, qorder) + tangent_weight(0, i, qorder);
  return {lhs, tangent_weight(2 * i + 3, i, qorder)};
}

}  // namespace qeuler
