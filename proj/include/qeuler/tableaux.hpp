#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "qeuler/qseries.hpp"

namespace qeuler {

using Partition = std::vector<int>;

/// 1-based (row, column) square of a Young diagram.
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

class SkewShape {
 public:
  SkewShape() = default;
  /// Trailing zeros are dropped; throws MalformedPartition unless both are
  /// partitions with mu inside lambda.
  SkewShape(Partition lambda, Partition mu = {});

  const Partition& lambda() const noexcept { return lambda_; }
  const Partition& mu() const noexcept { return mu_; }
  int mu_part(int row) const { return row <= static_cast<int>(mu_.size()) ? mu_[row - 1] : 0; }
  int lambda_part(int row) const { return row <= static_cast<int>(lambda_.size()) ? lambda_[row - 1] : 0; }
  int rows() const { return static_cast<int>(lambda_.size()); }

  bool in_lambda(Cell c) const { return c.row >= 1 && c.col >= 1 && c.col <= lambda_part(c.row); }
  bool in_mu(Cell c) const { return c.row >= 1 && c.col >= 1 && c.col <= mu_part(c.row); }
  bool contains(Cell c) const { return in_lambda(c) && !in_mu(c); }

  /// Cells of lambda/mu in row-major order.
  std::vector<Cell> cells() const;
  std::vector<Cell> lambda_cells() const;
  int size() const;

  std::string to_string() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition lambda_;
  Partition mu_;
};

Partition conjugate(const Partition& p);

/// delta_n = (n-1, ..., 1).
Partition staircase(int n);
/// delta_n^{(a,b)} = (n-1-a, n-2, ..., 2, 1-b) with zero parts dropped.
Partition staircase_ab(int n, int a, int b);
/// delta_{n+2k} / delta_n.
SkewShape skew_staircase(int n, int k);
/// ((b+k)^{a+k}) / (b^a).
SkewShape thick_hook(int a, int b, int k);

/// "4,4,3,3/2,1", "(4,4,3,3)/(2,1)", "d6/d2", "d5", "d6^10/d2" (delta^{(1,0)}).
SkewShape parse_shape(std::string_view text);

/// lambda_i + lambda'_j - i - j + 1; throws CellOutside.
int hook(const Partition& lambda, Cell c);

enum class TableauKind { SSYT, RPP, ST };
std::string_view to_string(TableauKind kind);
TableauKind parse_tableau_kind(std::string_view text);

/// omega(c) for each cell of shape.cells(), in the same order.
std::vector<int> labeling(const SkewShape& shape, TableauKind kind);

inline constexpr int kDefaultExtensionCap = 14;

/// Coefficients of sum over the Jordan-Holder set of q^{maj}; index is the
/// exponent. Throws CapExceeded above `cap` cells.
std::vector<BigInt> linear_extension_maj_poly(const SkewShape& shape, TableauKind kind,
                                              int cap = kDefaultExtensionCap);
QSeries linear_extension_majgf(const SkewShape& shape, TableauKind kind, int order,
                               int cap = kDefaultExtensionCap);
BigInt count_linear_extensions(const SkewShape& shape, int cap = kDefaultExtensionCap);

enum class GfMode { Extension, Oracle };

/// Size generating function of SSYT / RPP / ST with nonnegative entries.
/// Extension mode divides the maj polynomial by (q;q)_n; oracle mode fills
/// cells one at a time keeping the last entry of each row.
QSeries tableau_gf(const SkewShape& shape, TableauKind kind, int order, GfMode mode = GfMode::Oracle,
                   int cap = kDefaultExtensionCap);

/// s_{lambda/mu}(1, q, q^2, ...).
QSeries principal_spec_skew_schur(const SkewShape& shape, int order);

struct NaruseCheck {
  BigInt count;
  Rational naruse_value;
};
NaruseCheck syt_count_and_naruse(const SkewShape& shape, int cap = kDefaultExtensionCap);

}  // namespace qeuler
