#include "qeuler/excited.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>

#include "qeuler/error.hpp"
#include "qeuler/lambda_paths.hpp"
#include "qeuler/matrix.hpp"

namespace qeuler {

namespace {

int partition_size(const Partition& p) {
  int s = 0;
  for (int v : p) s += v;
  return s;
}

bool has(const Diagram& d, Cell c) { return std::binary_search(d.begin(), d.end(), c); }

}  // namespace

std::vector<Diagram> excited_diagrams(const SkewShape& shape, int mu_cap, int lambda_cap) {
  const int mu_size = partition_size(shape.mu());
  const int lambda_size = partition_size(shape.lambda());
  if (mu_size > mu_cap) throw Error(ErrorCode::CapExceeded, "|mu| = " + std::to_string(mu_size) + " exceeds cap");
  if (lambda_size > lambda_cap)
    throw Error(ErrorCode::CapExceeded, "|lambda| = " + std::to_string(lambda_size) + " exceeds cap");
  Diagram start;
  for (int r = 1; r <= static_cast<int>(shape.mu().size()); ++r)
    for (int c = 1; c <= shape.mu_part(r); ++c) start.push_back({r, c});
  std::set<Diagram> seen{start};
  std::vector<Diagram> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Diagram d = queue[head];
    for (std::size_t idx = 0; idx < d.size(); ++idx) {
      const Cell c = d[idx];
      const Cell below{c.row + 1, c.col}, right{c.row, c.col + 1}, diag{c.row + 1, c.col + 1};
      if (!shape.in_lambda(diag) || has(d, below) || has(d, right) || has(d, diag)) continue;
      Diagram next = d;
      next[idx] = diag;
      std::sort(next.begin(), next.end());
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

BigInt catalan(int n) {
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
  return c / (n + 1);
}

BigInt little_schroder(int n) { return BigInt(static_cast<unsigned long>(schroder_paths(n).size())); }

BigInt frak_s(int n) {
  BigInt p = little_schroder(n);
  return p << (n + 2);
}

ExcitedCounts count_formulas(int n, int k) {
  if (n < 1 || k < 1) throw Error(ErrorCode::IndexOutOfRange, "count formulas need n, k >= 1");
  if (n + 2 * k > 10) throw Error(ErrorCode::CapExceeded, "n + 2k exceeds 10");
  ExcitedCounts out;
  Matrix<BigInt> m(k, std::vector<BigInt>(k));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) m[i - 1][j - 1] = catalan(n + i + j - 2);
  out.e_det = det(m);
  out.e_prod = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.e_prod *= Rational(2 * k + i + j - 1, i + j - 1);
  out.e_prod.canonicalize();
  out.e_enum = static_cast<unsigned long>(excited_diagrams(skew_staircase(n, k), 64, 64).size());
  return out;
}

namespace {

/// Union U of all excited cells and, over subsets of U, the down-closed
/// family of subsets missing at least one excited diagram.
struct PleasantCore {
  std::vector<Cell> lambda_cells;
  std::vector<Cell> union_cells;
  std::vector<std::uint64_t> good;  // bitset over subsets of union_cells

  bool is_good(std::uint64_t mask) const { return (good[mask >> 6] >> (mask & 63)) & 1u; }
};

PleasantCore pleasant_core(const SkewShape& shape, int union_cap) {
  PleasantCore core;
  core.lambda_cells = shape.lambda_cells();
  const auto diagrams = excited_diagrams(shape, 64, 1 << 20);
  std::set<Cell> u;
  for (const auto& d : diagrams) u.insert(d.begin(), d.end());
  core.union_cells.assign(u.begin(), u.end());
  const int m = static_cast<int>(core.union_cells.size());
  if (m > union_cap)
    throw Error(ErrorCode::CapExceeded, "excited cells cover " + std::to_string(m) + " cells, cap " +
                                            std::to_string(union_cap));
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  core.good.assign(std::max<std::uint64_t>(1, (full >> 6) + 1), 0);
  for (const auto& d : diagrams) {
    std::uint64_t dm = 0;
    for (const Cell& c : d) {
      const auto it = std::lower_bound(core.union_cells.begin(), core.union_cells.end(), c);
      dm |= std::uint64_t{1} << (it - core.union_cells.begin());
    }
    const std::uint64_t comp = full & ~dm;
    core.good[comp >> 6] |= std::uint64_t{1} << (comp & 63);
  }
  // close downwards: good[S] |= good[S | bit]
  static constexpr std::uint64_t kLow[6] = {0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
                                            0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};
  for (int b = 0; b < m; ++b) {
    if (b < 6) {
      for (auto& w : core.good) w |= (w >> (1u << b)) & kLow[b];
    } else {
      const std::size_t stride = std::size_t{1} << (b - 6);
      for (std::size_t i = 0; i < core.good.size(); ++i)
        if (!(i & stride)) core.good[i] |= core.good[i | stride];
    }
  }
  // entries past `full` inside the last word are never read
  return core;
}

bool is_skew_staircase(const SkewShape& shape, int& n, int& k) {
  const int N = shape.rows() + 1;
  if (shape.lambda() != staircase(N)) return false;
  const int mrows = static_cast<int>(shape.mu().size());
  const int nn = mrows == 0 ? N % 2 : mrows + 1;
  if (shape.mu() != staircase(nn)) return false;
  if ((N - nn) % 2 != 0 || N == nn) return false;
  n = nn;
  k = (N - nn) / 2;
  return true;
}

}  // namespace

BigInt pleasant_count(const SkewShape& shape, PleasantMethod method, int union_cap) {
  if (method == PleasantMethod::RhoStar) {
    int n = 0, k = 0;
    if (is_skew_staircase(shape, n, k)) return count_marked_tuples(n, k, 64);
    return pleasant_count_families(shape);
  }
  const PleasantCore core = pleasant_core(shape, union_cap);
  const std::uint64_t subsets = std::uint64_t{1} << core.union_cells.size();
  BigInt good = 0;
  if (subsets >= 64) {
    for (auto w : core.good) good += static_cast<unsigned long>(std::popcount(w));
  } else {
    for (std::uint64_t s = 0; s < subsets; ++s) good += core.is_good(s) ? 1 : 0;
  }
  const int free_cells = static_cast<int>(core.lambda_cells.size() - core.union_cells.size());
  return good << free_cells;
}

Point cell_to_point(Cell c, int N) { return {c.col - c.row, N - c.row - c.col}; }
Cell point_to_cell(Point p, int N) { return {(N - p.x - p.y) / 2, (N - p.y + p.x) / 2}; }

namespace {

std::vector<Cell> path_cells(const std::vector<LatticePath>& tuple, int N) {
  std::vector<Cell> cells;
  for (const auto& d : tuple)
    for (const Point& p : d.points()) cells.push_back(point_to_cell(p, N));
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace

Diagram rho(const std::vector<LatticePath>& tuple, int n, int k) {
  const int N = n + 2 * k;
  const auto used = path_cells(tuple, N);
  Diagram out;
  for (const Cell& c : SkewShape(staircase(N)).cells())
    if (!std::binary_search(used.begin(), used.end(), c)) out.push_back(c);
  return out;
}

Diagram rho_star(const std::vector<LatticePath>& tuple, const std::vector<Point>& marks, int n, int k) {
  const int N = n + 2 * k;
  std::vector<Cell> marked;
  for (const Point& p : marks) marked.push_back(point_to_cell(p, N));
  std::sort(marked.begin(), marked.end());
  Diagram out;
  for (const Cell& c : path_cells(tuple, N))
    if (!std::binary_search(marked.begin(), marked.end(), c)) out.push_back(c);
  return out;
}

BijectionCheck check_rho(int n, int k) {
  if (n + 2 * k > 8) throw Error(ErrorCode::CapExceeded, "rho check needs n + 2k <= 8");
  const auto tuples = enumerate_tuples(n, k, std::vector<Relation>(k - 1, Relation::Strict), 8);
  const auto diagrams = excited_diagrams(skew_staircase(n, k), 64, 64);
  std::set<Diagram> images;
  for (const auto& t : tuples) images.insert(rho(t, n, k));
  BijectionCheck out;
  out.domain = static_cast<unsigned long>(tuples.size());
  out.codomain = static_cast<unsigned long>(diagrams.size());
  out.injective = images.size() == tuples.size();
  out.onto = images == std::set<Diagram>(diagrams.begin(), diagrams.end());
  return out;
}

BijectionCheck check_rho_star(int n, int k, int materialize_cap) {
  if (n + 2 * k > 8) throw Error(ErrorCode::CapExceeded, "rho* check needs n + 2k <= 8");
  const int N = n + 2 * k;
  const SkewShape shape = skew_staircase(n, k);
  BijectionCheck out;
  out.domain = count_marked_tuples(n, k, 8);
  out.codomain = pleasant_count(shape, PleasantMethod::Definition);
  const auto lam = shape.lambda_cells();
  if (static_cast<int>(lam.size()) > materialize_cap) {
    // counts only; the map is into P by construction of the marks
    out.injective = out.onto = out.domain == out.codomain;
    return out;
  }
  auto index = [&](Cell c) { return std::lower_bound(lam.begin(), lam.end(), c) - lam.begin(); };
  const PleasantCore core = pleasant_core(shape, 26);
  auto pleasant = [&](std::uint64_t mask) {
    std::uint64_t u = 0;
    for (std::size_t i = 0; i < lam.size(); ++i) {
      if (!((mask >> i) & 1u)) continue;
      const auto it = std::lower_bound(core.union_cells.begin(), core.union_cells.end(), lam[i]);
      if (it != core.union_cells.end() && *it == lam[i]) u |= std::uint64_t{1} << (it - core.union_cells.begin());
    }
    return core.is_good(u);
  };
  std::set<std::uint64_t> images;
  BigInt produced = 0;
  bool all_pleasant = true;
  for (const auto& t : enumerate_tuples(n, k, std::vector<Relation>(k - 1, Relation::Strict), 8)) {
    std::uint64_t base = 0;
    std::vector<std::uint64_t> markable;
    for (const auto& d : t) {
      const PathFeatures f = features(d);
      for (const Point& p : d.points()) {
        const std::uint64_t bit = std::uint64_t{1} << index(point_to_cell(p, N));
        base |= bit;
        if (!std::binary_search(f.valleys.begin(), f.valleys.end(), p)) markable.push_back(bit);
      }
    }
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << markable.size()); ++s) {
      std::uint64_t img = base;
      for (std::size_t b = 0; b < markable.size(); ++b)
        if ((s >> b) & 1u) img &= ~markable[b];
      all_pleasant = all_pleasant && pleasant(img);
      images.insert(img);
      produced += 1;
    }
  }
  out.injective = BigInt(static_cast<unsigned long>(images.size())) == produced;
  out.onto = all_pleasant && BigInt(static_cast<unsigned long>(images.size())) == out.codomain;
  return out;
}

QSeries mpp1_rhs(const SkewShape& shape, int order) {
  const Partition conj = conjugate(shape.lambda());
  QSeries total = QSeries::zero(order);
  for (const auto& d : excited_diagrams(shape, 64, 1 << 20)) {
    QSeries term = QSeries::one(order);
    for (const Cell& c : shape.lambda_cells()) {
      if (has(d, c)) continue;
      term = term.shifted(conj[c.col - 1] - c.row).truncated(order).div_one_minus_q_pow(hook(shape.lambda(), c));
    }
    total += term;
  }
  return total;
}

QSeries mpp2_rhs(const SkewShape& shape, int order, int union_cap) {
  const PleasantCore core = pleasant_core(shape, union_cap);
  auto x = [&](Cell c) {
    const int h = hook(shape.lambda(), c);
    return QSeries::monomial(1, h, order).div_one_minus_q_pow(h);
  };
  QSeries free_part = QSeries::one(order);
  for (const Cell& c : core.lambda_cells)
    if (!std::binary_search(core.union_cells.begin(), core.union_cells.end(), c)) free_part *= QSeries::one(order) + x(c);
  std::vector<QSeries> xs;
  for (const Cell& c : core.union_cells) xs.push_back(x(c));
  const int m = static_cast<int>(xs.size());
  QSeries inner = QSeries::zero(order);
  std::function<void(std::uint64_t, int, const QSeries&)> walk = [&](std::uint64_t mask, int from, const QSeries& w) {
    inner += w;
    for (int b = from; b < m; ++b) {
      const std::uint64_t next = mask | (std::uint64_t{1} << b);
      if (!core.is_good(next)) continue;
      const QSeries nw = w * xs[b];
      if (nw.is_zero()) continue;  // every extension has weight beyond the order
      walk(next, b + 1, nw);
    }
  };
  walk(0, 0, QSeries::one(order));
  return inner * free_part;
}

}  // namespace qeuler
