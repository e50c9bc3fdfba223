#include "qeuler/tableaux.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "qeuler/error.hpp"
#include "qeuler/excited.hpp"

namespace qeuler {

namespace {

void normalize(Partition& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void require_partition(const Partition& p, const char* name) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) throw Error(ErrorCode::MalformedPartition, std::string(name) + " has a nonpositive part");
    if (i > 0 && p[i] > p[i - 1]) throw Error(ErrorCode::MalformedPartition, std::string(name) + " is not weakly decreasing");
  }
}

std::string partition_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

}  // namespace

SkewShape::SkewShape(Partition lambda, Partition mu) : lambda_(std::move(lambda)), mu_(std::move(mu)) {
  normalize(lambda_);
  normalize(mu_);
  require_partition(lambda_, "lambda");
  require_partition(mu_, "mu");
  if (mu_.size() > lambda_.size()) throw Error(ErrorCode::MalformedPartition, "mu has more rows than lambda");
  for (std::size_t i = 0; i < mu_.size(); ++i)
    if (mu_[i] > lambda_[i]) throw Error(ErrorCode::MalformedPartition, "mu is not contained in lambda");
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= rows(); ++i)
    for (int j = mu_part(i) + 1; j <= lambda_part(i); ++j) out.push_back({i, j});
  return out;
}

std::vector<Cell> SkewShape::lambda_cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= rows(); ++i)
    for (int j = 1; j <= lambda_part(i); ++j) out.push_back({i, j});
  return out;
}

int SkewShape::size() const {
  return std::accumulate(lambda_.begin(), lambda_.end(), 0) - std::accumulate(mu_.begin(), mu_.end(), 0);
}

std::string SkewShape::to_string() const {
  if (mu_.empty()) return partition_string(lambda_);
  return partition_string(lambda_) + "/" + partition_string(mu_);
}

Partition conjugate(const Partition& p) {
  Partition out(p.empty() ? 0 : p.front(), 0);
  for (int part : p)
    for (int j = 0; j < part; ++j) ++out[j];
  return out;
}

Partition staircase(int n) {
  Partition p;
  for (int i = n - 1; i >= 1; --i) p.push_back(i);
  return p;
}

Partition staircase_ab(int n, int a, int b) {
  if (a < 0 || a > 1 || b < 0 || b > 1) throw Error(ErrorCode::MalformedPartition, "staircase flags must be 0 or 1");
  Partition p = staircase(n);
  if (!p.empty()) {
    p.front() -= a;
    p.back() -= b;
  }
  normalize(p);
  require_partition(p, "staircase");
  return p;
}

SkewShape skew_staircase(int n, int k) { return SkewShape(staircase(n + 2 * k), staircase(n)); }

SkewShape thick_hook(int a, int b, int k) {
  if (a < 0 || b < 0 || k < 0) throw Error(ErrorCode::MalformedPartition, "thick hook parameters must be >= 0");
  return SkewShape(Partition(a + k, b + k), Partition(a, b));
}

namespace {

Partition parse_partition(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '(' && ch != ')') t += ch;
  if (t.empty() || t == "0" || t == "e") return {};
  if (t[0] == 'd') {
    const auto caret = t.find('^');
    const std::string num = t.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit))
      throw Error(ErrorCode::ParseError, "bad staircase '" + std::string(text) + "'");
    const int n = std::stoi(num);
    if (caret == std::string::npos) return staircase(n);
    const std::string ab = t.substr(caret + 1);
    if (ab.size() != 2 || (ab[0] != '0' && ab[0] != '1') || (ab[1] != '0' && ab[1] != '1'))
      throw Error(ErrorCode::ParseError, "staircase flags must look like ^10");
    return staircase_ab(n, ab[0] - '0', ab[1] - '0');
  }
  Partition p;
  std::stringstream in(t);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit))
      throw Error(ErrorCode::ParseError, "bad partition '" + std::string(text) + "'");
    p.push_back(std::stoi(part));
  }
  return p;
}

}  // namespace

SkewShape parse_shape(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(parse_partition(text));
  return SkewShape(parse_partition(text.substr(0, slash)), parse_partition(text.substr(slash + 1)));
}

int hook(const Partition& lambda, Cell c) {
  const int rows = static_cast<int>(lambda.size());
  if (c.row < 1 || c.row > rows || c.col < 1 || c.col > lambda[c.row - 1])
    throw Error(ErrorCode::CellOutside, "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ") not in " +
                                            partition_string(lambda));
  int leg = 0;
  for (int i = c.row; i <= rows && lambda[i - 1] >= c.col; ++i) ++leg;
  return lambda[c.row - 1] - c.col + leg;
}

std::string_view to_string(TableauKind kind) {
  switch (kind) {
    case TableauKind::SSYT: return "ssyt";
    case TableauKind::RPP: return "rpp";
    case TableauKind::ST: return "st";
  }
  return "?";
}

TableauKind parse_tableau_kind(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), ::tolower);
  if (t == "ssyt") return TableauKind::SSYT;
  if (t == "rpp") return TableauKind::RPP;
  if (t == "st") return TableauKind::ST;
  throw Error(ErrorCode::BadFlag, "unknown tableau kind '" + std::string(text) + "'");
}

std::vector<int> labeling(const SkewShape& shape, TableauKind kind) {
  const std::vector<Cell> cells = shape.cells();
  std::vector<int> idx(cells.size());
  std::iota(idx.begin(), idx.end(), 0);
  auto before = [&](int x, int y) {
    const Cell a = cells[x], b = cells[y];
    switch (kind) {
      case TableauKind::SSYT: return a.col != b.col ? a.col > b.col : a.row < b.row;
      case TableauKind::RPP: return a.col != b.col ? a.col > b.col : a.row > b.row;
      case TableauKind::ST: return a.row != b.row ? a.row < b.row : a.col < b.col;
    }
    return false;
  };
  std::sort(idx.begin(), idx.end(), before);
  std::vector<int> label(cells.size());
  for (std::size_t r = 0; r < idx.size(); ++r) label[idx[r]] = static_cast<int>(r) + 1;
  return label;
}

namespace {

using Poly = std::vector<std::uint64_t>;

struct ExtensionCounter {
  int n;
  std::vector<std::uint32_t> below;  // strictly southeast elements
  std::vector<int> label;
  std::unordered_map<std::uint64_t, Poly> memo;
  std::size_t degree;

  const Poly& solve(std::uint32_t placed, int last) {
    const std::uint64_t key = (static_cast<std::uint64_t>(placed) << 6) | static_cast<std::uint64_t>(last + 1);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Poly out(degree + 1, 0);
    const std::uint32_t full = n == 32 ? 0xffffffffu : ((1u << n) - 1);
    if (placed == full) {
      out[0] = 1;
    } else {
      const int pos = std::popcount(placed);
      for (int x = 0; x < n; ++x) {
        if ((placed >> x) & 1u) continue;
        if ((below[x] & placed) != below[x]) continue;
        const Poly& sub = solve(placed | (1u << x), x);
        const std::size_t shift = (last >= 0 && label[last] > label[x]) ? static_cast<std::size_t>(pos) : 0;
        for (std::size_t e = 0; e + shift <= degree; ++e)
          if (sub[e]) out[e + shift] += sub[e];
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  }
};

}  // namespace

std::vector<BigInt> linear_extension_maj_poly(const SkewShape& shape, TableauKind kind, int cap) {
  const std::vector<Cell> cells = shape.cells();
  const int n = static_cast<int>(cells.size());
  if (n > cap || n > 20)
    throw Error(ErrorCode::CapExceeded, std::to_string(n) + " cells exceed the linear-extension cap " + std::to_string(cap));
  ExtensionCounter counter{n, std::vector<std::uint32_t>(n, 0), labeling(shape, kind), {},
                           static_cast<std::size_t>(n * (n - 1) / 2)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && cells[y].row >= cells[x].row && cells[y].col >= cells[x].col) counter.below[x] |= 1u << y;
  const Poly& poly = counter.solve(0, -1);
  std::vector<BigInt> out;
  for (std::uint64_t c : poly) {
    BigInt b;
    mpz_import(b.get_mpz_t(), 1, 1, sizeof(c), 0, 0, &c);
    out.push_back(b);
  }
  return out;
}

QSeries linear_extension_majgf(const SkewShape& shape, TableauKind kind, int order, int cap) {
  const auto poly = linear_extension_maj_poly(shape, kind, cap);
  return QSeries::polynomial(std::span<const BigInt>(poly), order);
}

BigInt count_linear_extensions(const SkewShape& shape, int cap) {
  BigInt total = 0;
  for (const auto& c : linear_extension_maj_poly(shape, TableauKind::SSYT, cap)) total += c;
  return total;
}

namespace {

// Cell-by-cell transfer in column-major order. The state records, for each
// row, the entry of its most recently filled cell (-1 if none is pending).
QSeries oracle_gf(const SkewShape& shape, TableauKind kind, int order) {
  const int rows = shape.rows();
  const bool row_strict = kind == TableauKind::ST;
  const bool col_strict = kind != TableauKind::RPP;
  using State = std::vector<std::int8_t>;
  using Counts = std::vector<BigInt>;
  if (order > 120) throw Error(ErrorCode::CapExceeded, "oracle order too large");
  std::map<State, Counts> layer;
  Counts unit(order + 1, 0);
  unit[0] = 1;
  layer.emplace(State(rows, -1), unit);
  const int width = shape.lambda_part(1);
  for (int j = 1; j <= width; ++j) {
    // rows that have ended no longer constrain anything
    std::map<State, Counts> cleared;
    for (auto& [st, cnt] : layer) {
      State s = st;
      for (int r = 1; r <= rows; ++r)
        if (shape.lambda_part(r) < j) s[r - 1] = -1;
      auto [it, fresh] = cleared.emplace(s, cnt);
      if (!fresh)
        for (int e = 0; e <= order; ++e) it->second[e] += cnt[e];
    }
    layer.swap(cleared);
    for (int r = 1; r <= rows; ++r) {
      if (!shape.contains({r, j})) continue;
      const bool has_above = shape.contains({r - 1, j});
      std::map<State, Counts> next;
      for (const auto& [st, cnt] : layer) {
        int lo = 0;
        if (st[r - 1] >= 0) lo = std::max(lo, st[r - 1] + (row_strict ? 1 : 0));
        if (has_above) lo = std::max(lo, st[r - 2] + (col_strict ? 1 : 0));
        int min_size = 0;
        while (min_size <= order && cnt[min_size] == 0) ++min_size;
        for (int e = lo; min_size + e <= order; ++e) {
          State s = st;
          s[r - 1] = static_cast<std::int8_t>(e);
          auto it = next.find(s);
          if (it == next.end()) it = next.emplace(s, Counts(order + 1, 0)).first;
          for (int m = min_size; m + e <= order; ++m)
            if (cnt[m] != 0) it->second[m + e] += cnt[m];
        }
      }
      layer.swap(next);
    }
  }
  std::vector<Rational> total(order + 1, Rational(0));
  for (const auto& [st, cnt] : layer)
    for (int e = 0; e <= order; ++e) total[e] += cnt[e];
  return QSeries(std::move(total), order);
}

}  // namespace

QSeries tableau_gf(const SkewShape& shape, TableauKind kind, int order, GfMode mode, int cap) {
  if (mode == GfMode::Oracle) return oracle_gf(shape, kind, order);
  const int n = shape.size();
  const auto poly = linear_extension_maj_poly(shape, kind, cap);
  QSeries s = QSeries::polynomial(std::span<const BigInt>(poly), order);
  for (int i = 1; i <= n; ++i) s = s.div_one_minus_q_pow(i);
  return s;
}

QSeries principal_spec_skew_schur(const SkewShape& shape, int order) {
  return tableau_gf(shape, TableauKind::SSYT, order, GfMode::Oracle);
}

NaruseCheck syt_count_and_naruse(const SkewShape& shape, int cap) {
  NaruseCheck out;
  out.count = count_linear_extensions(shape, cap);
  BigInt fact = 1;
  for (int i = 2; i <= shape.size(); ++i) fact *= i;
  Rational sum = 0;
  for (const auto& d : excited_diagrams(shape)) {
    Rational term = 1;
    for (const Cell& u : shape.lambda_cells())
      if (!std::binary_search(d.begin(), d.end(), u)) term /= hook(shape.lambda(), u);
    sum += term;
  }
  out.naruse_value = Rational(fact) * sum;
  return out;
}

}  // namespace qeuler
