#include "qeuler/euler.hpp"

#include <array>

#include "qeuler/error.hpp"

namespace qeuler {

namespace {

// Dyck_{2m} point-weight sums. State: height and whether the last step was
// up; a down step out of an up-step vertex at height >= 2 leaves a high peak.
QSeries dyck_point_sum(int m, int order, bool star) {
  auto point = [&](int b) {
    QSeries w = star ? QSeries::one(order) : QSeries::monomial(1, b, order);
    return w.div_one_minus_q_pow(2 * b + 1);
  };
  const int H = m + 1;
  std::vector<std::array<QSeries, 2>> dp(H + 1, {QSeries::zero(order), QSeries::zero(order)});
  dp[0][0] = point(0);
  for (int step = 0; step < 2 * m; ++step) {
    std::vector<std::array<QSeries, 2>> next(H + 1, {QSeries::zero(order), QSeries::zero(order)});
    const int left = 2 * m - step - 1;
    for (int h = 0; h <= m; ++h)
      for (int up = 0; up < 2; ++up) {
        const QSeries& cur = dp[h][up];
        if (cur.is_zero()) continue;
        if (h + 1 <= left) next[h + 1][1] += cur * point(h + 1);
        if (h >= 1) {
          QSeries w = cur * point(h - 1);
          if (star && up && h >= 2) w = w.shifted(2 * h + 1).truncated(order);
          next[h - 1][0] += w;
        }
      }
    dp.swap(next);
  }
  return dp[0][0] + dp[0][1];
}

QSeries times_poch(const QSeries& s, int n) { return s * pochhammer(1, n, s.order()); }

}  // namespace

QSeries e_over_poch_paths(int m, int order) { return dyck_point_sum(m, order, false); }
QSeries estar_over_poch_paths(int m, int order) { return dyck_point_sum(m, order, true); }

EulerForms euler_forms(int n, bool star, int order) {
  if (n < 1 || n % 2 == 0) throw Error(ErrorCode::IndexOutOfRange, "euler_forms needs odd n");
  const int m = (n - 1) / 2;
  EulerForms f;
  f.maj = stat_sum(ClassKind::Alt, n, star ? StatExpr::MajKappaInv : StatExpr::MajInv, order);
  f.inv = stat_sum(ClassKind::Alt, n, star ? StatExpr::InvMinusNdesE : StatExpr::Inv, order);
  f.path = times_poch(star ? estar_over_poch_paths(m, order) : e_over_poch_paths(m, order), n);
  const QuotientSpec spec = star ? QuotientSpec{1, 1, 1, -1, QuotientParity::Tangent} : QuotientSpec{};
  f.quotient = times_poch(quotient_gf(spec, n, order)[n], n);
  return f;
}

SkewShape family_shape(ShapeFamily f, int n) {
  switch (f) {
    case ShapeFamily::Skew: return SkewShape(staircase(n + 2), staircase(n));
    case ShapeFamily::Skew11: return SkewShape(staircase_ab(n + 3, 1, 1), staircase(n + 1));
    case ShapeFamily::Skew01: return SkewShape(staircase_ab(n + 2, 0, 1), staircase(n));
    case ShapeFamily::Skew10: return SkewShape(staircase_ab(n + 2, 1, 0), staircase(n));
  }
  throw Error(ErrorCode::IndexOutOfRange, "unknown shape family");
}

const std::vector<QEulerRow>& tangent_rows() {
  static const std::vector<QEulerRow> rows = [] {
    using K = TableauKind;
    using S = StatExpr;
    const std::vector<ClassKind> both{ClassKind::Alt, ClassKind::Ralt};
    auto q = [](int a, int b, int c, int d) { return QuotientSpec{a, b, c, d, QuotientParity::Tangent}; };
    return std::vector<QEulerRow>{
        {"ge-lt", true, ShapeFamily::Skew, K::SSYT, ClassKind::Alt, S::MajInv, both, {S::Inv}, q(0, 0, 0, 0)},
        {"ge-le", true, ShapeFamily::Skew, K::RPP, ClassKind::Alt, S::MajKappaInv, both, {S::InvMinusNdesE},
         q(1, 1, 1, -1)},
        {"gt-lt", true, ShapeFamily::Skew, K::ST, ClassKind::Alt, S::MajEtaInv, both, {S::InvPlusNascE},
         q(1, 0, 1, 0)},
        {"lt-ge", true, ShapeFamily::Skew11, K::SSYT, ClassKind::Ralt, S::MajInv, both, {S::Inv}, q(0, 0, 0, 0)},
        {"le-ge", true, ShapeFamily::Skew11, K::RPP, ClassKind::Ralt, S::MajEtaInv, both, {S::InvMinusAscO},
         q(1, 0, 1, -1)},
        {"lt-gt", true, ShapeFamily::Skew11, K::ST, ClassKind::Ralt, S::MajKappaInv, both, {S::InvPlusDesO},
         q(1, 1, 1, 0)},
    };
  }();
  return rows;
}

const std::vector<QEulerRow>& secant_rows() {
  static const std::vector<QEulerRow> rows = [] {
    using K = TableauKind;
    using S = StatExpr;
    const std::vector<ClassKind> alt{ClassKind::Alt}, ralt{ClassKind::Ralt};
    auto q = [](int c, int d) { return QuotientSpec{0, 0, c, d, QuotientParity::Secant}; };
    return std::vector<QEulerRow>{
        {"ge-lt", false, ShapeFamily::Skew01, K::SSYT, ClassKind::Alt, S::MajInv, alt, {S::Inv}, q(0, 0)},
        {"ge-le", false, ShapeFamily::Skew01, K::RPP, ClassKind::Alt, S::MajKappaInv, alt,
         {S::InvMinusAscO, S::InvMinusAscE}, q(1, -1)},
        {"gt-lt", false, ShapeFamily::Skew01, K::ST, ClassKind::Alt, S::MajEtaInv, alt,
         {S::InvPlusNascO, S::InvPlusNascE}, q(1, 0)},
        {"lt-ge", false, ShapeFamily::Skew10, K::SSYT, ClassKind::Ralt, S::MajInv, ralt, {S::Inv}, q(2, -1)},
        {"le-ge", false, ShapeFamily::Skew10, K::RPP, ClassKind::Ralt, S::MajEtaInv, ralt,
         {S::InvMinusNdesO, S::InvMinusNdesE}, q(1, -1)},
        {"lt-gt", false, ShapeFamily::Skew10, K::ST, ClassKind::Ralt, S::MajKappaInv, ralt,
         {S::InvPlusDesO, S::InvPlusDesE}, q(1, 0)},
    };
  }();
  return rows;
}

const QEulerRow& qeuler_row(bool tangent, std::string_view id) {
  for (const auto& r : tangent ? tangent_rows() : secant_rows())
    if (r.id == id) return r;
  throw Error(ErrorCode::UnknownRow, std::string(tangent ? "tangent" : "secant") + " row '" + std::string(id) + "'");
}

QEulerRowCheck qeuler_row_check(const QEulerRow& row, int n, int order) {
  const int N = row.tangent ? 2 * n + 1 : 2 * n;
  if (N < 1) throw Error(ErrorCode::IndexOutOfRange, "secant rows need n >= 1");
  const QSeries poch = pochhammer(1, N, order);
  QEulerRowCheck out;
  out.tab = tableau_gf(family_shape(row.shape, n), row.kind, order);
  out.m = stat_sum(row.m_class, N, row.m_expr, order) / poch;
  out.quotient = quotient_gf(row.quotient, N, order)[N];
  bool ok = eq_mod(out.tab, out.m) && eq_mod(out.tab, out.quotient);
  for (ClassKind c : row.i_classes)
    for (StatExpr e : row.i_exprs) {
      QSeries s = stat_sum(c, N, e, order) / poch;
      ok = ok && eq_mod(out.tab, s);
      out.i_forms.emplace_back(std::string(to_string(c)) + ":" + std::string(to_string(e)), std::move(s));
    }
  out.ok = ok;
  return out;
}

RemarkCheck remark_identity(int which, int n, int order) {
  if (which != 1 && which != 2) throw Error(ErrorCode::IndexOutOfRange, "remark identity is 1 or 2");
  using S = StatExpr;
  const std::vector<std::pair<ClassKind, S>> terms =
      which == 1 ? std::vector<std::pair<ClassKind, S>>{{ClassKind::Alt, S::InvMinusAscO},
                                                        {ClassKind::Alt, S::InvMinusAscE},
                                                        {ClassKind::Ralt, S::InvMinusNdesO},
                                                        {ClassKind::Ralt, S::InvMinusNdesE}}
                 : std::vector<std::pair<ClassKind, S>>{{ClassKind::Alt, S::InvPlusNascO},
                                                        {ClassKind::Alt, S::InvPlusNascE},
                                                        {ClassKind::Ralt, S::InvPlusDesO},
                                                        {ClassKind::Ralt, S::InvPlusDesE}};
  RemarkCheck out;
  bool ok = true;
  for (const auto& [c, e] : terms) {
    QSeries s = stat_sum(c, 2 * n, e, order);
    if (!out.sums.empty()) ok = ok && eq_mod(out.sums.front().second, s);
    out.sums.emplace_back(std::string(to_string(c)) + ":" + std::string(to_string(e)), std::move(s));
  }
  out.ok = ok;
  return out;
}

}  // namespace qeuler
