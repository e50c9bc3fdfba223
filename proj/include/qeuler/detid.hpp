#pragma once

#include <vector>

#include "qeuler/lambda_paths.hpp"
#include "qeuler/matrix.hpp"
#include "qeuler/paths.hpp"
#include "qeuler/report.hpp"
#include "qeuler/tableaux.hpp"

namespace qeuler {

/// Entry (i,j): sum over Dyck(A_i -> B_j) of wt_V, A_i = (-n-2i+2, 0),
/// B_j = (n+2j-2, 0). Throws CapExceeded when n + 2k > 8.
Matrix<QSeries> lgv_matrix(const WeightScheme& s, int n, int k, int order);

/// det(lgv_matrix) against the weak-tuple sum with (1 - 1/wtext) factors.
IdentityReport lemma53_check(const WeightScheme& s, int n, int k, int order);
/// wtext = 1: the determinant counts strictly non-intersecting tuples only.
IdentityReport classical_lgv_check(int n, int k, int order);

/// wt_V(D) and wt_HP(D) against the sums over phi_V and phi_HP preimages,
/// for every D in Dyck_{2m}, m <= max_m.
IdentityReport prop54_check(const WeightScheme& s, int max_m, int order);
/// For every A in Dyck_{2n}, B in Dyck_{2n+8} with A < B: the weak-below
/// valley sum, the strictly-between Schroder sum and the high-peak sum agree.
IdentityReport prop55_check(const WeightScheme& s, int n, int order);
/// Weak sum = prod t_{n+2i}^i * strict sum. Throws CapExceeded for n + 2k > 8.
IdentityReport prop56_check(const WeightScheme& s, int n, int k, int order);
/// Prop 5.5 at n and Prop 5.6 at (n, k) in one report.
IdentityReport key_exchange_check(const WeightScheme& s, int n, int k, int order);
/// wt (wtext - 1) = c and wt_HP(D) = t_j wt_V(D) on all-high-peak D in
/// Dyck_{2j}, j <= max_j. The VAL_COUNT scheme gives one lemma, MPP_RPP the other.
IdentityReport peak_lemma_check(const WeightScheme& s, int max_j, int order);

/// Polynomial identity det(d_{n+i+j-2}) = q^{C(k,2)} d_{n,k}, its value at
/// q = 1/2, and p(delta_{n+2k}/delta_n) = 2^{C(k,2)} det(frak_s_{n-2+i+j}).
IdentityReport main_theorem_1(int n, int k);
/// RPP gf of delta_{n+2k}/delta_n against the shifted E* determinant.
IdentityReport main_theorem_2(int n, int k, int order);
/// SSYT gf of delta_{n+2k}/delta_n against det(E_{2n+2i+2j-3}/(q;q)).
IdentityReport ssyt_det_check(int n, int k, int order);
/// e(delta_{n+2k}/delta_n) by enumeration, Catalan determinant and product.
IdentityReport excited_count_check(int n, int k);

/// Decomposition found, unique, hypotheses of the determinant theorems.
IdentityReport kreiman_check(const SkewShape& shape);
/// RPP determinant, valley determinant and pleasant determinant for shape.
IdentityReport lp_theorems_check(const SkewShape& shape, int order);
/// delta_{n+2k+1}/delta_n: RPP gf against the E* determinant.
IdentityReport cor64_check(int n, int k, int order);
/// delta_{n+2k+1}/delta_n: pleasant count against the frak_s determinant.
IdentityReport cor65_check(int n, int k);
/// Thick reverse hook RPP gf against the q-binomial determinant.
IdentityReport cor66_check(int a, int b, int k, int order);
/// Thick reverse hook pleasant count against the binomial determinant, and
/// the reverse hook closed form.
IdentityReport cor67_check(int a, int b, int k);

/// Definition-method pleasant count when the bitset cap allows, otherwise
/// the path count; `method` receives the name of the method used.
BigInt pleasant_count_best(const SkewShape& shape, std::string* method = nullptr);

}  // namespace qeuler
