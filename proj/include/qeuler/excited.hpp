#pragma once

#include <vector>

#include "qeuler/paths.hpp"
#include "qeuler/qseries.hpp"
#include "qeuler/tableaux.hpp"

namespace qeuler {

/// Sorted list of cells.
using Diagram = std::vector<Cell>;

/// Closure of mu under excited moves inside lambda, sorted. Throws
/// CapExceeded when |mu| > mu_cap or |lambda| > lambda_cap.
std::vector<Diagram> excited_diagrams(const SkewShape& shape, int mu_cap = 8, int lambda_cap = 24);

BigInt catalan(int n);
/// Little Schroder number: paths in Sch_{2n} without flats on the axis.
BigInt little_schroder(int n);
/// 2^{n+2} s_n, the pleasant count of delta_{n+2}/delta_n.
BigInt frak_s(int n);

struct ExcitedCounts {
  BigInt e_det;     // det(C_{n+i+j-2})
  Rational e_prod;  // prod_{1<=i<j<=n} (2k+i+j-1)/(i+j-1)
  BigInt e_enum;    // |E(delta_{n+2k}/delta_n)|
};
/// Throws CapExceeded when n + 2k > 10.
ExcitedCounts count_formulas(int n, int k);

enum class PleasantMethod { Definition, RhoStar };

/// Definition: subsets of lambda avoiding some excited diagram, counted by a
/// bitset over the union of all excited cells (cap: union_cap cells).
/// RhoStar: marked non-intersecting paths (skew staircases) or marked
/// families of lambda-Dyck paths (other shapes).
BigInt pleasant_count(const SkewShape& shape, PleasantMethod method, int union_cap = 26);

/// Cell (i,j) of delta_N <-> lattice point (j-i, N-i-j).
Point cell_to_point(Cell c, int N);
Cell point_to_cell(Point p, int N);

/// delta_{n+2k} minus the cells of the paths.
Diagram rho(const std::vector<LatticePath>& tuple, int n, int k);
/// Cells of the paths minus the marked cells.
Diagram rho_star(const std::vector<LatticePath>& tuple, const std::vector<Point>& marks, int n, int k);

struct BijectionCheck {
  bool injective = false;
  bool onto = false;
  BigInt domain = 0;
  BigInt codomain = 0;
  bool ok() const { return injective && onto; }
};
/// rho: ND^k_{2n} -> E(delta_{n+2k}/delta_n), exhaustive. Needs n + 2k <= 8.
BijectionCheck check_rho(int n, int k);
/// rho*: ND*^k_{2n} -> P(delta_{n+2k}/delta_n). Images are materialized
/// when delta_{n+2k} has at most materialize_cap cells, otherwise only the
/// cardinalities are compared.
BijectionCheck check_rho_star(int n, int k, int materialize_cap = 15);

/// Sum over excited D of prod_{(i,j) in lambda \ D} q^{lambda'_j - i}/(1-q^{h(i,j)}).
QSeries mpp1_rhs(const SkewShape& shape, int order);
/// Sum over pleasant P of prod_{u in P} q^{h(u)}/(1-q^{h(u)}).
QSeries mpp2_rhs(const SkewShape& shape, int order, int union_cap = 26);

}  // namespace qeuler
