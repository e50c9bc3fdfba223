#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qeuler/qseries.hpp"

namespace qeuler {

using Word = std::vector<int>;

/// One-line word of a permutation of [n]. Composition follows function
/// composition: (p * s)(i) = p(s(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(Word word);

  static Permutation identity(int n);
  /// Cycles listed with 1-based letters; omitted letters are fixed points.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  /// "317295486" (single digits) or "10,3,1,..." / "10 3 1 ...".
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(word_.size()); }
  /// 1-based access: at(i) = pi_i.
  int at(int i) const { return word_[i - 1]; }
  const Word& word() const noexcept { return word_; }

  Permutation inverse() const;
  Permutation operator*(const Permutation& s) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Word word_;
};

std::string word_to_string(const Word& w);

// Statistics work on arbitrary words of distinct (or repeated) integers;
// positions are 1-based.
std::vector<int> des_set(const Word& w);
std::vector<int> asc_set(const Word& w);
/// i in [n] that is not a descent; position n always qualifies.
std::vector<int> ndes_set(const Word& w);
/// i in [n] that is not an ascent; position n always qualifies.
std::vector<int> nasc_set(const Word& w);
int maj(const Word& w);
int inv(const Word& w);
inline int des(const Word& w) { return static_cast<int>(des_set(w).size()); }
inline int asc(const Word& w) { return static_cast<int>(asc_set(w).size()); }
inline int ndes(const Word& w) { return static_cast<int>(ndes_set(w).size()); }
inline int nasc(const Word& w) { return static_cast<int>(nasc_set(w).size()); }
/// pi_1 pi_3 pi_5 ...
Word odd_subword(const Word& w);
/// pi_2 pi_4 ...
Word even_subword(const Word& w);

struct StatBundle {
  int maj = 0;
  int inv = 0;
  std::vector<int> des_set, asc_set, ndes_set, nasc_set;
  Word pi_o, pi_e;
};

StatBundle statistics(const Permutation& p);

enum class SpecialKind { Kappa, Eta };
/// kappa_n swaps (2,3), (4,5), ... ; eta_n swaps (1,2), (3,4), ...
Permutation special_perm(SpecialKind kind, int n);
inline Permutation kappa(int n) { return special_perm(SpecialKind::Kappa, n); }
inline Permutation eta(int n) { return special_perm(SpecialKind::Eta, n); }

enum class ClassKind { Alt, Ralt, AltInv, RaltInv, All };
std::string_view to_string(ClassKind kind);

bool is_alternating(const Word& w);          // w1 < w2 > w3 < ...
bool is_reverse_alternating(const Word& w);  // w1 > w2 < w3 > ...
bool in_class(const Permutation& p, ClassKind kind);

inline constexpr int kDefaultEnumCap = 11;

/// Calls fn on each member of the class, in lexicographic order of the
/// one-line word. Throws CapExceeded when n > cap.
void for_each_in_class(ClassKind kind, int n, const std::function<void(const Permutation&)>& fn,
                       int cap = kDefaultEnumCap);
std::vector<Permutation> enumerate_class(ClassKind kind, int n, int cap = kDefaultEnumCap);

/// (n+1-pi_n) ... (n+1-pi_1).
Permutation reverse_complement(const Permutation& p);

/// The M and I column expressions of the tangent and secant tables. The O/E
/// suffix selects pi_o or pi_e.
enum class StatExpr {
  MajInv,        // maj(pi^{-1})
  MajKappaInv,   // maj(kappa_n pi^{-1})
  MajEtaInv,     // maj(eta_n pi^{-1})
  Inv,
  InvMinusNdesO,
  InvMinusNdesE,
  InvPlusNascO,
  InvPlusNascE,
  InvMinusAscO,
  InvMinusAscE,
  InvPlusDesO,
  InvPlusDesE,
};

std::string_view to_string(StatExpr expr);
/// Accepts the names printed by to_string; throws UnknownExpr otherwise.
StatExpr parse_stat_expr(std::string_view name);
std::vector<StatExpr> all_stat_exprs();

int eval_stat_expr(const Permutation& p, StatExpr expr);

/// Sum of q^{expr(pi)} over the class. The polynomial is truncated to
/// `order`; a negative exponent raises NegativeExponent.
QSeries stat_sum(ClassKind kind, int n, StatExpr expr, int order, int cap = kDefaultEnumCap);

/// Collect exponents into a series; rejects negative exponents.
QSeries series_from_exponents(const std::vector<int>& exponents, int order);

}  // namespace qeuler
