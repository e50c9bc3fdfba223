#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qeuler/cfrac.hpp"
#include "qeuler/perm.hpp"
#include "qeuler/qseries.hpp"
#include "qeuler/tableaux.hpp"

namespace qeuler {

/// E_{2m+1}/(q;q)_{2m+1} as a sum over Dyck_{2m} of prod q^b/(1-q^{2b+1}).
QSeries e_over_poch_paths(int m, int order);
/// E*_{2m+1}/(q;q)_{2m+1} as a sum over Dyck_{2m} of q^{H(D)} prod 1/(1-q^{2b+1}).
QSeries estar_over_poch_paths(int m, int order);

/// Four independent computations of E_n (star = false) or E*_n (star = true)
/// for odd n: maj-sum, inv-sum (Huber form for E*), path formula times
/// (q;q)_n, quotient coefficient times (q;q)_n.
struct EulerForms {
  QSeries maj, inv, path, quotient;
  bool ok() const { return eq_mod(maj, inv) && eq_mod(maj, path) && eq_mod(maj, quotient); }
};
EulerForms euler_forms(int n, bool star, int order);

/// Shapes of the tangent and secant tables, as functions of n.
enum class ShapeFamily {
  Skew,    // delta_{n+2}/delta_n
  Skew11,  // delta^{(1,1)}_{n+3}/delta_{n+1}
  Skew01,  // delta^{(0,1)}_{n+2}/delta_n
  Skew10,  // delta^{(1,0)}_{n+2}/delta_n
};
SkewShape family_shape(ShapeFamily f, int n);

struct QEulerRow {
  std::string id;  // alpha-beta, e.g. "ge-lt"
  bool tangent = true;
  ShapeFamily shape = ShapeFamily::Skew;
  TableauKind kind = TableauKind::SSYT;
  ClassKind m_class = ClassKind::Alt;
  StatExpr m_expr = StatExpr::MajInv;
  std::vector<ClassKind> i_classes;  // every listed class is checked
  std::vector<StatExpr> i_exprs;     // every listed reading is checked
  QuotientSpec quotient;
};
const std::vector<QEulerRow>& tangent_rows();
const std::vector<QEulerRow>& secant_rows();
/// Throws UnknownRow.
const QEulerRow& qeuler_row(bool tangent, std::string_view id);

struct QEulerRowCheck {
  QSeries tab;       // tableau gf (oracle)
  QSeries m;         // M/(q;q)_N
  QSeries quotient;  // [x^N] of the quotient
  std::vector<std::pair<std::string, QSeries>> i_forms;  // I/(q;q)_N per class and reading
  bool ok = false;
};
/// N = 2n+1 for tangent rows, 2n for secant rows.
QEulerRowCheck qeuler_row_check(const QEulerRow& row, int n, int order);

/// The two open identities between the second/fifth and third/sixth secant
/// rows: every pi_o / pi_e reading on either side gives the same sum.
struct RemarkCheck {
  std::vector<std::pair<std::string, QSeries>> sums;
  bool ok = false;
};
RemarkCheck remark_identity(int which, int n, int order);

}  // namespace qeuler
