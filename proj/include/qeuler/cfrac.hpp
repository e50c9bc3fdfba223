#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qeuler/perm.hpp"
#include "qeuler/qseries.hpp"

namespace qeuler {

/// Level weights w_i of the continued fraction 1/(1 - w_0 x^2/(1 - w_1 x^2/...)).
struct CFSpec {
  std::string name;
  std::function<QSeries(int i, int order)> w;
};

/// w_i = q^{2i+1}/((1-q^{2i+1})(1-q^{2i+3})).
CFSpec cf_tangent_spec();
/// w_i = q^i/(...) for even i, q^{3i+2}/(...) for odd i.
CFSpec cf_tangent_star_spec();
/// w_i = (-1)^i D_{i-2} D_{i+1} / (D_{i-1} D_i) from principal specializations.
/// Deep levels need a q-order above the valuation of D_{i-1} D_i; below that
/// the weight throws DivisionByNonUnit.
CFSpec cf_delta_spec();
/// All w_i equal to c.
CFSpec cf_constant_spec(const QSeries& c);

/// The Delta_i of the secant expansion (Delta_i = 1 for i < 0).
QSeries delta_specialization(int i, int order);

/// Finite continued fraction with zero tail below level `depth`. Exact for
/// x-powers up to 2 * depth; throws DepthTooSmall when 2 * depth < xorder.
XQSeries cf_convergent(const CFSpec& spec, int depth, int xorder, int qorder);

/// Sum over Dyck_{2n} of prod u_j over up steps leaving level j and prod d_j
/// over down steps from level j to j-1.
QSeries flajolet_path_sum(const std::function<QSeries(int, int)>& u, const std::function<QSeries(int, int)>& d,
                          int n, int qorder);
/// The u_j = w_j, d_j = 1 factorization.
QSeries flajolet_path_sum(const CFSpec& spec, int n, int qorder);

enum class QuotientParity { Tangent, Secant };
struct QuotientSpec {
  int A = 0, B = 0, C = 0, D = 0;
  QuotientParity parity = QuotientParity::Tangent;
};
/// Tangent: (sum (-1)^n q^{An^2+Bn} x^{2n+1}/(q;q)_{2n+1}) / (sum (-1)^n q^{Cn^2+Dn} x^{2n}/(q;q)_{2n});
/// secant: 1 / (the denominator).
XQSeries quotient_gf(const QuotientSpec& spec, int xorder, int qorder);

struct Table1Row {
  std::string id;
  std::string tau;                       // empty for rows without a tau entry
  QuotientSpec quotient;
  std::optional<CFSpec> cf;              // absent where no w_i is printed
  std::optional<ClassKind> m_class;      // M = sum over m_class of q^{m_expr}
  std::optional<StatExpr> m_expr;
};
const std::vector<Table1Row>& table1_rows();
/// Throws UnknownRow.
const Table1Row& table1_row(const std::string& id);

struct Table1Check {
  std::optional<QSeries> normalized_tau;  // M/(q;q)_{2n+1}
  QSeries quotient;                       // [x^{2n+1}] of the quotient
  std::optional<QSeries> cf;              // [x^{2n+1}] of x/(1-q) * cf
  bool ok = false;
};
Table1Check table1_row_check(const Table1Row& row, int n, int qorder);

struct SeriesPair {
  QSeries lhs;
  QSeries rhs;
  bool ok() const { return eq_mod(lhs, rhs); }
};

/// E_{2n}/(q;q)_{2n} by permutations against the Dyck sum with Delta weights.
SeriesPair secant_delta_check(int n, int qorder);
/// Little Schroder sum (a_i = 1, c_i = -1/(1-q^{2i+1}), b_i) against the
/// Dyck sum with the tangent-star weights.
SeriesPair schroder_cf_check(int n, int qorder);
/// E_{2n+1}/(q;q) by the Dyck point-weight formula against (1/(1-q)) times
/// the tangent cf path sum.
SeriesPair tangent_cf_check(int n, int qorder);
/// Same for E*_{2n+1}/(q;q) and the tangent-star weights.
SeriesPair tangent_star_cf_check(int n, int qorder);
/// -1/(1-q^{2i+1}) + 1/((1-q^{2i+1})(1-q^{2i+3})) against q^{2i+3}/(...).
SeriesPair combined_weight_check(int i, int qorder);

}  // namespace qeuler
