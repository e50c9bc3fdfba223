#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qeuler/perm.hpp"

namespace qeuler {

/// Natural order on integers, or <_i: the natural order with i and i+1
/// exchanged (swapped == i). swapped == 0 means natural.
struct OrderSpec {
  int swapped = 0;

  static OrderSpec natural() { return {}; }
  static OrderSpec swap(int i) { return {i}; }

  int rank(int x) const {
    if (swapped > 0 && x == swapped) return 2 * x + 2;
    if (swapped > 0 && x == swapped + 1) return 2 * x - 2;
    return 2 * x;
  }
  bool less(int a, int b) const { return rank(a) < rank(b); }
};

/// The block map f(w, order): split w_1..w_{k-1} into blocks ending at the
/// letters on the same side of w_k as w_{k-1}, move each block's last letter
/// to its front, and append w_k.
Word block_step(const Word& w, OrderSpec order);
/// Inverse of block_step for the same order.
Word block_step_inverse(const Word& v, OrderSpec order);

/// Classic Foata map (every step uses the natural order).
Permutation foata(const Permutation& p);
Permutation foata_inverse(const Permutation& s);

enum class Twist { None, Kappa, Eta };

/// One row of the modified-Foata table. A step that appends v = pi_k uses
/// the order <_{v + swap_offset} when v has parity trigger_parity and the
/// letter v + absent_offset has not appeared earlier in pi; otherwise the
/// natural order.
struct FoataConfig {
  std::string id;
  ClassKind cls = ClassKind::AltInv;
  bool odd = true;
  Twist twist = Twist::None;
  int trigger_parity = 0;
  int absent_offset = 0;
  int swap_offset = 0;
  /// A(pi) = m_expr evaluated at pi^{-1} (i.e. maj(twist_N pi)).
  StatExpr m_expr = StatExpr::MajInv;
  /// B(sigma) = i_expr evaluated at sigma^{-1}; two entries when the row
  /// leaves the pi_o / pi_e choice open.
  std::vector<StatExpr> i_exprs;

  bool uses_plain_foata() const { return twist == Twist::None; }
};

/// The twelve rows, ordered by class, parity, twist.
const std::vector<FoataConfig>& foata_table();
/// Throws UnknownRow for ids outside the table.
const FoataConfig& foata_row(std::string_view id);
/// The row whose map is FA (AltInv, odd length, kappa twist).
const FoataConfig& fa_row();

Permutation F_mod(const Permutation& p, const FoataConfig& cfg);
Permutation F_mod_inverse(const Permutation& s, const FoataConfig& cfg);

inline Permutation FA(const Permutation& p) { return F_mod(p, fa_row()); }
inline Permutation FA_inverse(const Permutation& s) { return F_mod_inverse(s, fa_row()); }

int foata_a_stat(const Permutation& p, const FoataConfig& cfg);
int foata_b_stat(const Permutation& s, StatExpr which);

/// Exhaustive check of one row at length N.
struct FoataRowCheck {
  long long domain = 0;
  bool closed = true;      // images stay in the class
  bool injective = true;
  bool inverse_ok = true;  // F_mod_inverse undoes F_mod
  std::vector<std::pair<StatExpr, bool>> transport;  // A(pi) = B(sigma) pointwise, per reading
  /// A bijection transporting the statistic under at least one reading.
  bool ok() const;
};
/// Throws NotInClass when N has the wrong parity for the row.
FoataRowCheck check_foata_row(const FoataConfig& cfg, int N);

}  // namespace qeuler
