#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qeuler/qseries.hpp"
#include "qeuler/tableaux.hpp"

namespace qeuler {

/// Cells u_0..u_m of lambda; each step is up (-1,0) or down (0,1).
using LambdaPath = std::vector<Cell>;

bool is_lambda_path(const LambdaPath& p);
bool first_step_up(const LambdaPath& p);
bool last_step_down(const LambdaPath& p);
std::vector<Cell> lambda_valleys(const LambdaPath& p);
std::vector<Cell> lambda_peaks(const LambdaPath& p);
/// Peaks u with u + (1,1) in lambda.
bool all_peaks_high(const LambdaPath& p, const Partition& lambda);

/// Dyck_lambda(s, t), in lexicographic order of the step sequence.
std::vector<LambdaPath> lambda_dyck_paths(const Partition& lambda, Cell s, Cell t);
/// The lowest path L_lambda(s, t); empty when Dyck_lambda(s, t) is empty.
LambdaPath lowest_path(const Partition& lambda, Cell s, Cell t);

bool is_column_bottom(const Partition& lambda, Cell c);
bool is_row_end(const Partition& lambda, Cell c);

bool weakly_below(const LambdaPath& a, const LambdaPath& b);
bool strictly_below(const LambdaPath& a, const LambdaPath& b);

struct KreimanDecomp {
  std::vector<LambdaPath> paths;  // sorted by starting column, then row
  std::vector<std::vector<bool>> less;  // less[i][j]: L_i < L_j
  std::optional<std::vector<int>> ranks;  // present iff the poset is ranked
  int total_rank_weight() const;          // sum r_i |L_i|
  int total_rank() const;                 // sum r_i
};

/// Exact-cover search; throws NoDecomposition or NotUnique, and CapExceeded
/// when |lambda/mu| > cap.
KreimanDecomp kreiman_decompose(const SkewShape& shape, int cap = 40);

/// Unique rank function of the relation (given as a strict order), if any.
std::optional<std::vector<int>> rank_function(const std::vector<std::vector<bool>>& less);

/// Throws HypothesisFailed naming the violated clause and path (1-based).
void check_lp_hypotheses(const SkewShape& shape, const KreimanDecomp& d);

/// Sum over Dyck_lambda(s,t) of prod 1/(1-q^h) prod_{valleys} q^h.
QSeries E_lambda(const Partition& lambda, Cell s, Cell t, int order);
/// Sum over Dyck_lambda(s,t) of q^{#valleys}, as a polynomial.
QSeries F_lambda(const Partition& lambda, Cell s, Cell t, int order);

/// L_lambda(s,t) as a skew shape R/mu' with R = lambda cut to the rectangle
/// spanned by s and t. Empty shape when t is unreachable from s.
SkewShape ribbon_shape(const Partition& lambda, Cell s, Cell t);

/// Pairwise disjoint families (D_1..D_k), D_i in Dyck_lambda(s_i,t_i), of
/// the decomposition: sum of q^{sum #valleys}.
QSeries family_valley_sum(const SkewShape& shape, const KreimanDecomp& d, int order);
/// 2^{|lambda/mu|} times the family sum at q = 1/2: the marked-family count.
BigInt pleasant_count_families(const SkewShape& shape);

struct LpSides {
  QSeries lhs;
  QSeries rhs;
  int exponent = 0;  // the power of q removed from the determinant
};
/// RPP gf (tableau oracle) against q^{-sum r|L|} det E_lambda(s_i,t_j).
LpSides lp_rpp_sides(const SkewShape& shape, int order);
/// Disjoint-family valley sum against q^{-sum r} det F_lambda(s_i,t_j).
LpSides lp_valley_sides(const SkewShape& shape);

struct LpCount {
  BigInt lhs;  // definition-method pleasant count (path count above the bitset cap)
  BigInt rhs;  // 2^{sum r} det p(L_lambda(s_i,t_j))
};
LpCount lp_pleasant_sides(const SkewShape& shape);

/// delta_{n+2k+1}/delta_n: determinant of E*_{2i+2jbar+1}/(q;q) entries.
QSeries odd_staircase_rpp_det(int n, int k, int order);
/// 2^{C(k+1,2)} det(frak_s_{i+jbar}).
BigInt odd_staircase_pleasant_det(int n, int k);
/// The matrix of the determinant above.
std::vector<std::vector<BigInt>> odd_staircase_pleasant_matrix(int n, int k);

/// Thick reverse hook ((b+k)^{a+k})/(b^a) closed forms.
QSeries thick_hook_rpp_det(int a, int b, int k, int order);
BigInt thick_hook_pleasant_det(int a, int b, int k);
/// Reverse hook (b^a)/((b-1)^{a-1}).
QSeries reverse_hook_rpp(int a, int b, int order);
BigInt reverse_hook_pleasant(int a, int b);

}  // namespace qeuler
