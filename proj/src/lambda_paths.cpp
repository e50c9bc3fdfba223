#include "qeuler/lambda_paths.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "qeuler/error.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/excited.hpp"
#include "qeuler/matrix.hpp"

namespace qeuler {

namespace {

int part(const Partition& lambda, int row) {
  return row >= 1 && row <= static_cast<int>(lambda.size()) ? lambda[row - 1] : 0;
}

bool in_lambda(const Partition& lambda, Cell c) { return c.row >= 1 && c.col >= 1 && c.col <= part(lambda, c.row); }

bool is_up(Cell a, Cell b) { return b.row == a.row - 1 && b.col == a.col; }
bool is_down(Cell a, Cell b) { return b.row == a.row && b.col == a.col + 1; }

bool contains(const LambdaPath& p, Cell c) { return std::find(p.begin(), p.end(), c) != p.end(); }

bool reachable(const Partition& lambda, Cell s, Cell t) {
  return in_lambda(lambda, s) && in_lambda(lambda, t) && t.row <= s.row && t.col >= s.col;
}

BigInt pow2(int e) {
  BigInt out = 1;
  out <<= e;
  return out;
}

BigInt binom(int n, int m) {
  if (m < 0 || n < 0 || m > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, m);
  return out;
}

}  // namespace

bool is_lambda_path(const LambdaPath& p) {
  if (p.empty()) return false;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (!is_up(p[i - 1], p[i]) && !is_down(p[i - 1], p[i])) return false;
  return true;
}

bool first_step_up(const LambdaPath& p) { return p.size() >= 2 && is_up(p[0], p[1]); }
bool last_step_down(const LambdaPath& p) { return p.size() >= 2 && is_down(p[p.size() - 2], p.back()); }

std::vector<Cell> lambda_valleys(const LambdaPath& p) {
  std::vector<Cell> out;
  for (std::size_t i = 1; i + 1 < p.size(); ++i)
    if (is_down(p[i - 1], p[i]) && is_up(p[i], p[i + 1])) out.push_back(p[i]);
  return out;
}

std::vector<Cell> lambda_peaks(const LambdaPath& p) {
  std::vector<Cell> out;
  for (std::size_t i = 1; i + 1 < p.size(); ++i)
    if (is_up(p[i - 1], p[i]) && is_down(p[i], p[i + 1])) out.push_back(p[i]);
  return out;
}

bool all_peaks_high(const LambdaPath& p, const Partition& lambda) {
  for (const Cell& u : lambda_peaks(p))
    if (!in_lambda(lambda, {u.row + 1, u.col + 1})) return false;
  return true;
}

std::vector<LambdaPath> lambda_dyck_paths(const Partition& lambda, Cell s, Cell t) {
  std::vector<LambdaPath> out;
  if (!reachable(lambda, s, t)) return out;
  LambdaPath cur{s};
  std::function<void()> walk = [&]() {
    const Cell c = cur.back();
    if (c == t) {
      out.push_back(cur);
      return;
    }
    const Cell right{c.row, c.col + 1}, up{c.row - 1, c.col};
    if (right.col <= t.col && in_lambda(lambda, right)) {
      cur.push_back(right);
      walk();
      cur.pop_back();
    }
    if (up.row >= t.row && in_lambda(lambda, up)) {
      cur.push_back(up);
      walk();
      cur.pop_back();
    }
  };
  walk();
  return out;
}

LambdaPath lowest_path(const Partition& lambda, Cell s, Cell t) {
  if (!reachable(lambda, s, t)) return {};
  LambdaPath out{s};
  Cell c = s;
  while (c != t) {
    const Cell right{c.row, c.col + 1};
    if (right.col <= t.col && in_lambda(lambda, right))
      c = right;
    else
      c = {c.row - 1, c.col};
    out.push_back(c);
  }
  return out;
}

bool is_column_bottom(const Partition& lambda, Cell c) {
  return in_lambda(lambda, c) && !in_lambda(lambda, {c.row + 1, c.col});
}

bool is_row_end(const Partition& lambda, Cell c) { return in_lambda(lambda, c) && c.col == part(lambda, c.row); }

bool weakly_below(const LambdaPath& a, const LambdaPath& b) {
  for (const Cell& u : a) {
    bool found = false;
    for (const Cell& v : b)
      if (u.row - v.row == u.col - v.col && u.row >= v.row) found = true;
    if (!found) return false;
  }
  const auto pa = lambda_peaks(a);
  const auto vb = lambda_valleys(b);
  for (const Cell& u : a)
    if (contains(b, u) && (!contains(pa, u) || !contains(vb, u))) return false;
  return true;
}

bool strictly_below(const LambdaPath& a, const LambdaPath& b) {
  for (const Cell& u : a)
    if (contains(b, u)) return false;
  return weakly_below(a, b);
}

int KreimanDecomp::total_rank_weight() const {
  int s = 0;
  if (ranks)
    for (std::size_t i = 0; i < paths.size(); ++i) s += (*ranks)[i] * static_cast<int>(paths[i].size());
  return s;
}

int KreimanDecomp::total_rank() const {
  return ranks ? std::accumulate(ranks->begin(), ranks->end(), 0) : 0;
}

std::optional<std::vector<int>> rank_function(const std::vector<std::vector<bool>>& less) {
  const std::size_t k = less.size();
  auto lt = less;
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (lt[i][m] && lt[m][j]) lt[i][j] = true;
  for (std::size_t i = 0; i < k; ++i)
    if (lt[i][i]) return std::nullopt;  // not an order
  // depth = longest chain below; process in depth order
  std::vector<int> depth(k, 0);
  for (std::size_t round = 0; round < k; ++round)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (lt[i][j]) depth[j] = std::max(depth[j], depth[i] + 1);
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return depth[a] < depth[b]; });
  std::vector<int> rank(k, -1);
  for (std::size_t j : order) {
    int r = -1;
    bool minimal = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (!lt[i][j]) continue;
      minimal = false;
      bool cover = true;
      for (std::size_t m = 0; m < k; ++m)
        if (lt[i][m] && lt[m][j]) cover = false;
      if (!cover) continue;
      if (r >= 0 && rank[i] + 1 != r) return std::nullopt;
      r = rank[i] + 1;
    }
    rank[j] = minimal ? 0 : r;
  }
  return rank;
}

KreimanDecomp kreiman_decompose(const SkewShape& shape, int cap) {
  const int size = shape.size();
  if (size > cap) throw Error(ErrorCode::CapExceeded, "|lambda/mu| = " + std::to_string(size) + " exceeds cap");
  const Partition& lambda = shape.lambda();
  const int rows = shape.rows();
  const int cols = lambda.empty() ? 0 : lambda.front();
  std::vector<std::vector<char>> covered(rows + 2, std::vector<char>(cols + 2, 1));
  for (const Cell& c : shape.cells()) covered[c.row][c.col] = 0;
  int left = size;
  std::vector<LambdaPath> current, first;
  int solutions = 0;

  std::function<void()> solve;
  std::function<void(LambdaPath&)> extend = [&](LambdaPath& p) {
    if (solutions > 1) return;
    const Cell c = p.back();
    if (is_row_end(lambda, c)) {
      current.push_back(p);
      solve();
      current.pop_back();
    }
    for (const Cell next : {Cell{c.row - 1, c.col}, Cell{c.row, c.col + 1}}) {
      if (next.row < 1 || next.col > cols || covered[next.row][next.col]) continue;
      covered[next.row][next.col] = 1;
      --left;
      p.push_back(next);
      extend(p);
      p.pop_back();
      ++left;
      covered[next.row][next.col] = 0;
    }
  };
  solve = [&]() {
    if (solutions > 1) return;
    if (left == 0) {
      if (++solutions == 1) first = current;
      return;
    }
    // an uncovered cell with no uncovered predecessor must start a path
    Cell start{0, 0};
    int best = -(1 << 30);
    for (int r = 1; r <= rows; ++r)
      for (int c = 1; c <= part(lambda, r); ++c)
        if (!covered[r][c] && r - c > best) best = r - c, start = {r, c};
    if (!is_column_bottom(lambda, start)) return;
    covered[start.row][start.col] = 1;
    --left;
    LambdaPath p{start};
    extend(p);
    ++left;
    covered[start.row][start.col] = 0;
  };
  solve();
  if (solutions == 0) throw Error(ErrorCode::NoDecomposition, "no outer decomposition of " + shape.to_string());
  if (solutions > 1) throw Error(ErrorCode::NotUnique, "outer decomposition of " + shape.to_string() + " is not unique");

  KreimanDecomp d;
  d.paths = first;
  std::sort(d.paths.begin(), d.paths.end(), [](const LambdaPath& a, const LambdaPath& b) {
    return a.front().col != b.front().col ? a.front().col < b.front().col : a.front().row < b.front().row;
  });
  const std::size_t k = d.paths.size();
  d.less.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) d.less[i][j] = strictly_below(d.paths[i], d.paths[j]);
  d.ranks = rank_function(d.less);
  return d;
}

void check_lp_hypotheses(const SkewShape& shape, const KreimanDecomp& d) {
  if (!d.ranks) throw Error(ErrorCode::HypothesisFailed, "the poset of the decomposition is not ranked");
  const std::size_t k = d.paths.size();
  for (std::size_t j = 0; j < k; ++j) {
    bool above_something = false;
    for (std::size_t i = 0; i < k; ++i) above_something = above_something || d.less[i][j];
    if (!above_something) continue;
    const std::string name = "L_" + std::to_string(j + 1);
    if (!first_step_up(d.paths[j])) throw Error(ErrorCode::HypothesisFailed, name + " does not start with an up step");
    if (!last_step_down(d.paths[j])) throw Error(ErrorCode::HypothesisFailed, name + " does not end with a down step");
    if (!all_peaks_high(d.paths[j], shape.lambda()))
      throw Error(ErrorCode::HypothesisFailed, name + " has a peak that is not lambda-high");
  }
}

namespace {

/// Sum over Dyck_lambda(s,t) of prod point(u) prod_{valleys} valley(u).
QSeries path_dp(const Partition& lambda, Cell s, Cell t, int order, const std::function<QSeries(Cell)>& point,
                const std::function<QSeries(Cell)>& valley) {
  if (!reachable(lambda, s, t)) return QSeries::zero(order);
  const int H = s.row - t.row, W = t.col - s.col;
  auto cell = [&](int a, int b) { return Cell{s.row - a, s.col + b}; };
  // dp[a][b][last]: last = 0 for start or up step, 1 for a down step
  std::vector<std::vector<std::array<QSeries, 2>>> dp(
      H + 1, std::vector<std::array<QSeries, 2>>(W + 1, {QSeries::zero(order), QSeries::zero(order)}));
  dp[0][0][0] = point(s);
  for (int a = 0; a <= H; ++a) {
    for (int b = 0; b <= W; ++b) {
      const Cell c = cell(a, b);
      if (!in_lambda(lambda, c)) continue;
      const auto& here = dp[a][b];
      if (here[0].is_zero() && here[1].is_zero()) continue;
      if (a < H && in_lambda(lambda, cell(a + 1, b)))
        dp[a + 1][b][0] += (here[0] + here[1] * valley(c)) * point(cell(a + 1, b));
      if (b < W && in_lambda(lambda, cell(a, b + 1))) dp[a][b + 1][1] += (here[0] + here[1]) * point(cell(a, b + 1));
    }
  }
  return dp[H][W][0] + dp[H][W][1];
}

}  // namespace

QSeries E_lambda(const Partition& lambda, Cell s, Cell t, int order) {
  return path_dp(
      lambda, s, t, order, [&](Cell u) { return QSeries::geometric(hook(lambda, u), order); },
      [&](Cell u) { return QSeries::monomial(1, hook(lambda, u), order); });
}

QSeries F_lambda(const Partition& lambda, Cell s, Cell t, int order) {
  return path_dp(
      lambda, s, t, order, [&](Cell) { return QSeries::one(order); },
      [&](Cell) { return QSeries::monomial(1, 1, order); });
}

SkewShape ribbon_shape(const Partition& lambda, Cell s, Cell t) {
  if (!reachable(lambda, s, t)) return SkewShape();
  Partition r, inner;
  for (int row = t.row; row <= s.row; ++row) r.push_back(std::min(part(lambda, row), t.col) - s.col + 1);
  for (std::size_t i = 0; i + 1 < r.size(); ++i) inner.push_back(std::max(r[i + 1] - 1, 0));
  return SkewShape(r, inner);
}

namespace {

/// Histogram of total valley counts over pairwise disjoint families.
std::vector<BigInt> family_histogram(const SkewShape& shape, const KreimanDecomp& d) {
  const Partition& lambda = shape.lambda();
  const std::size_t k = d.paths.size();
  std::vector<std::vector<LambdaPath>> options(k);
  std::vector<std::vector<int>> valleys(k);
  for (std::size_t i = 0; i < k; ++i) {
    options[i] = lambda_dyck_paths(lambda, d.paths[i].front(), d.paths[i].back());
    for (const auto& p : options[i]) valleys[i].push_back(static_cast<int>(lambda_valleys(p).size()));
  }
  const int rows = shape.rows();
  const int cols = lambda.empty() ? 0 : lambda.front();
  std::vector<std::vector<char>> used(rows + 2, std::vector<char>(cols + 2, 0));
  std::vector<BigInt> hist(shape.size() + 1, 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int v) {
    if (i == k) {
      hist[v] += 1;
      return;
    }
    for (std::size_t a = 0; a < options[i].size(); ++a) {
      const auto& p = options[i][a];
      bool clash = false;
      for (const Cell& c : p) clash = clash || used[c.row][c.col];
      if (clash) continue;
      for (const Cell& c : p) used[c.row][c.col] = 1;
      walk(i + 1, v + valleys[i][a]);
      for (const Cell& c : p) used[c.row][c.col] = 0;
    }
  };
  walk(0, 0);
  return hist;
}

}  // namespace

QSeries family_valley_sum(const SkewShape& shape, const KreimanDecomp& d, int order) {
  const auto hist = family_histogram(shape, d);
  QSeries out = QSeries::zero(order);
  for (std::size_t v = 0; v < hist.size(); ++v)
    if (hist[v] != 0) out += QSeries::monomial(Rational(hist[v]), static_cast<int>(v), order);
  return out;
}

BigInt pleasant_count_families(const SkewShape& shape) {
  const KreimanDecomp d = kreiman_decompose(shape, 64);
  const auto hist = family_histogram(shape, d);
  BigInt total = 0;
  for (std::size_t v = 0; v < hist.size(); ++v) total += hist[v] * pow2(shape.size() - static_cast<int>(v));
  return total;
}

LpSides lp_rpp_sides(const SkewShape& shape, int order) {
  const KreimanDecomp d = kreiman_decompose(shape);
  check_lp_hypotheses(shape, d);
  LpSides out;
  out.exponent = d.total_rank_weight();
  const int inner = order + out.exponent;
  const std::size_t k = d.paths.size();
  Matrix<QSeries> m(k, std::vector<QSeries>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = E_lambda(shape.lambda(), d.paths[i].front(), d.paths[j].back(), inner);
  out.rhs = det(m, inner).shifted(-out.exponent).truncated(order);
  out.lhs = tableau_gf(shape, TableauKind::RPP, order);
  return out;
}

LpSides lp_valley_sides(const SkewShape& shape) {
  const KreimanDecomp d = kreiman_decompose(shape);
  check_lp_hypotheses(shape, d);
  LpSides out;
  out.exponent = d.total_rank();
  // F entries are polynomials of degree below |lambda|
  int lam = 0;
  for (int v : shape.lambda()) lam += v;
  const int order = lam * static_cast<int>(std::max<std::size_t>(1, d.paths.size())) + out.exponent;
  const std::size_t k = d.paths.size();
  Matrix<QSeries> m(k, std::vector<QSeries>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = F_lambda(shape.lambda(), d.paths[i].front(), d.paths[j].back(), order);
  out.rhs = det(m, order).shifted(-out.exponent);
  out.lhs = family_valley_sum(shape, d, out.rhs.order());
  return out;
}

namespace {

// Definition method below the bitset cap, marked families above it.
BigInt pleasant_definition_or_families(const SkewShape& shape) {
  try {
    return pleasant_count(shape, PleasantMethod::Definition);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
  }
  return pleasant_count_families(shape);
}

}  // namespace

LpCount lp_pleasant_sides(const SkewShape& shape) {
  const KreimanDecomp d = kreiman_decompose(shape);
  check_lp_hypotheses(shape, d);
  LpCount out;
  out.lhs = pleasant_definition_or_families(shape);
  const std::size_t k = d.paths.size();
  Matrix<BigInt> m(k, std::vector<BigInt>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Cell s = d.paths[i].front(), t = d.paths[j].back();
      m[i][j] = reachable(shape.lambda(), s, t)
                    ? pleasant_definition_or_families(ribbon_shape(shape.lambda(), s, t))
                    : BigInt(0);
    }
  }
  out.rhs = det(m) * pow2(d.total_rank());
  return out;
}

namespace {

int jbar(int j, int n) { return j > n ? j - n - 1 : -j; }

}  // namespace

QSeries odd_staircase_rpp_det(int n, int k, int order) {
  const int e = k * (k + 1) * (6 * n + 8 * k + 1) / 6;
  const int inner = order + e;
  const int size = n + k;
  Matrix<QSeries> m(size, std::vector<QSeries>(size));
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) {
      const int t = 2 * i + 2 * jbar(j, n) + 1;
      m[i - 1][j - 1] = t < 0 ? QSeries::zero(inner) : estar_over_poch_paths((t - 1) / 2, inner);
    }
  }
  return det(m, inner).shifted(-e).truncated(order);
}

std::vector<std::vector<BigInt>> odd_staircase_pleasant_matrix(int n, int k) {
  const int size = n + k;
  std::vector<std::vector<BigInt>> m(size, std::vector<BigInt>(size));
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) {
      const int idx = i + jbar(j, n);
      m[i - 1][j - 1] = idx < 0 ? BigInt(0) : idx == 0 ? BigInt(2) : frak_s(idx);
    }
  }
  return m;
}

BigInt odd_staircase_pleasant_det(int n, int k) {
  return det(odd_staircase_pleasant_matrix(n, k)) * pow2(k * (k + 1) / 2);
}

QSeries reverse_hook_rpp(int a, int b, int order) {
  QSeries out = QSeries::zero(order);
  for (int t = 0; t <= order; ++t) out += (qbinom(a + t - 1, t, order) * qbinom(b + t - 1, t, order)).shifted(t).truncated(order);
  return out;
}

BigInt reverse_hook_pleasant(int a, int b) {
  BigInt out = 0;
  for (int t = 0; t <= std::min(a - 1, b - 1); ++t) out += pow2(a + b - t - 1) * binom(a - 1, t) * binom(b - 1, t);
  return out;
}

QSeries thick_hook_rpp_det(int a, int b, int k, int order) {
  const int e = k * (k - 1) * (3 * a + 3 * b + 4 * k + 1) / 6;
  const int inner = order + e;
  Matrix<QSeries> m(k, std::vector<QSeries>(k));
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      QSeries entry = QSeries::zero(inner);
      for (int t = 0; t <= inner; ++t)
        entry += (qbinom(a + t + i - 1, t, inner) * qbinom(b + t + j - 1, t, inner)).shifted(t).truncated(inner);
      m[i - 1][j - 1] = entry;
    }
  }
  return det(m, inner).shifted(-e).truncated(order);
}

BigInt thick_hook_pleasant_det(int a, int b, int k) {
  Matrix<BigInt> m(k, std::vector<BigInt>(k));
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      BigInt entry = 0;
      for (int t = 0; t <= std::min(a + i - 1, b + j - 1); ++t)
        entry += pow2(a + b + i + j - t - 1) * binom(a + i - 1, t) * binom(b + j - 1, t);
      m[i - 1][j - 1] = entry;
    }
  }
  return det(m) * pow2(k * (k - 1) / 2);
}

}  // namespace qeuler
