#include "qeuler/paths.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "qeuler/error.hpp"

namespace qeuler {

LatticePath::LatticePath(int start_x, std::vector<Step> steps, int start_y) : steps_(std::move(steps)) {
  int x = start_x, y = start_y;
  points_.push_back({x, y});
  heights_.push_back(y);
  for (Step s : steps_) {
    switch (s) {
      case Step::Up: ++x, ++y; break;
      case Step::Down: ++x, --y; break;
      case Step::Flat:
        heights_.push_back(y);
        x += 2;
        break;
    }
    if (y < 0) throw Error(ErrorCode::BadEndpoints, "path goes below the x-axis");
    points_.push_back({x, y});
    heights_.push_back(y);
  }
}

LatticePath LatticePath::parse(int start_x, std::string_view word, int start_y) {
  std::vector<Step> steps;
  for (char ch : word) {
    switch (ch) {
      case 'U': steps.push_back(Step::Up); break;
      case 'D': steps.push_back(Step::Down); break;
      case 'H': steps.push_back(Step::Flat); break;
      default: throw Error(ErrorCode::ParseError, "bad step letter '" + std::string(1, ch) + "'");
    }
  }
  return LatticePath(start_x, std::move(steps), start_y);
}

int LatticePath::flats() const {
  return static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::Flat));
}

int LatticePath::height_at(int x) const {
  if (!covers(x)) throw Error(ErrorCode::IndexOutOfRange, "x = " + std::to_string(x) + " outside the path");
  return heights_[x - start_x()];
}

bool LatticePath::contains(Point p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::string LatticePath::word() const {
  std::string w;
  for (Step s : steps_) w += static_cast<char>(s);
  return w;
}

PathFeatures features(const LatticePath& p) {
  PathFeatures f;
  const auto& pts = p.points();
  const auto& st = p.steps();
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (st[i - 1] == Step::Down && st[i] == Step::Up) f.valleys.push_back(pts[i]);
    if (st[i - 1] == Step::Up && st[i] == Step::Down) {
      f.peaks.push_back(pts[i]);
      if (pts[i].y >= 2) {
        f.high_peaks.push_back(pts[i]);
        f.H += 2 * pts[i].y + 1;
      }
    }
  }
  return f;
}

namespace {

void extend(PathKind kind, int x, int y, int to_x, std::vector<Step>& steps, int from_x,
            std::vector<LatticePath>& out) {
  const int rest = to_x - x;
  if (rest == 0) {
    if (y == 0) out.emplace_back(from_x, steps);
    return;
  }
  if (y + 1 <= rest - 1) {
    steps.push_back(Step::Up);
    extend(kind, x + 1, y + 1, to_x, steps, from_x, out);
    steps.pop_back();
  }
  if (y >= 1) {
    steps.push_back(Step::Down);
    extend(kind, x + 1, y - 1, to_x, steps, from_x, out);
    steps.pop_back();
  }
  if (kind == PathKind::Schroder && y >= 1 && y <= rest - 2) {
    steps.push_back(Step::Flat);
    extend(kind, x + 2, y, to_x, steps, from_x, out);
    steps.pop_back();
  }
}

}  // namespace

std::vector<LatticePath> enumerate_paths(PathKind kind, int from_x, int to_x) {
  if (to_x < from_x || (to_x - from_x) % 2 != 0)
    throw Error(ErrorCode::BadEndpoints, "no path from x = " + std::to_string(from_x) + " to x = " + std::to_string(to_x));
  std::vector<LatticePath> out;
  std::vector<Step> steps;
  extend(kind, from_x, 0, to_x, steps, from_x, out);
  std::sort(out.begin(), out.end(), [](const LatticePath& a, const LatticePath& b) { return a.word() < b.word(); });
  return out;
}

namespace {

const std::vector<LatticePath>& cached_paths(PathKind kind, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<LatticePath>> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(static_cast<int>(kind), n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_paths(kind, -n, n)).first;
  return it->second;
}

}  // namespace

const std::vector<LatticePath>& dyck_paths(int n) { return cached_paths(PathKind::Dyck, n); }
const std::vector<LatticePath>& schroder_paths(int n) { return cached_paths(PathKind::Schroder, n); }

bool strictly_below(const LatticePath& a, const LatticePath& b) {
  if (!b.covers(a.start_x()) || !b.covers(a.end_x())) return false;
  for (int x = a.start_x(); x <= a.end_x(); ++x)
    if (a.height_at(x) >= b.height_at(x)) return false;
  return true;
}

bool weakly_below(const LatticePath& a, const LatticePath& b) {
  if (!b.covers(a.start_x()) || !b.covers(a.end_x())) return false;
  for (int x = a.start_x(); x <= a.end_x(); ++x) {
    if (a.height_at(x) > b.height_at(x)) return false;
    if (x < a.end_x() && a.height_at(x) == b.height_at(x) && a.height_at(x + 1) == b.height_at(x + 1)) return false;
  }
  return true;
}

std::vector<Point> shared_points(const LatticePath& a, const LatticePath& b) {
  std::vector<Point> out;
  std::set_intersection(a.points().begin(), a.points().end(), b.points().begin(), b.points().end(),
                        std::back_inserter(out));
  return out;
}

WeightScheme val_count_scheme() {
  return WeightScheme{
      "VAL_COUNT",
      [](int, int order) { return QSeries::one(order); },
      [](int, int order) { return QSeries::monomial(1, 1, order); },
      [](int order) { return QSeries::monomial(1, 1, order) - QSeries::one(order); },
      [](int, int order) { return QSeries::monomial(1, 1, order); },
  };
}

WeightScheme mpp_rpp_scheme() {
  return WeightScheme{
      "MPP_RPP",
      [](int y, int order) { return QSeries::geometric(2 * y + 1, order); },
      [](int y, int order) { return QSeries::monomial(1, 2 * y + 1, order); },
      [](int order) { return QSeries::constant(-1, order); },
      [](int j, int order) { return QSeries::monomial(1, 2 * j + 1, order); },
  };
}

void validate_scheme(const WeightScheme& s, int height_bound, int order) {
  const QSeries c = s.c(order);
  for (int y = 0; y <= height_bound; ++y) {
    const QSeries lhs = s.wt(y, order) * (s.wtext(y, order) - QSeries::one(order));
    if (!eq_mod(lhs, c))
      throw Error(ErrorCode::InvalidScheme,
                  s.name + ": wt*(wtext-1) differs from c at height " + std::to_string(y));
  }
}

WeightScheme custom_scheme(std::string name, std::function<QSeries(int, int)> wt,
                           std::function<QSeries(int, int)> wtext, std::function<QSeries(int)> c,
                           std::function<QSeries(int, int)> t, int height_bound, int order) {
  WeightScheme s{std::move(name), std::move(wt), std::move(wtext), std::move(c), std::move(t)};
  validate_scheme(s, height_bound, order);
  return s;
}

namespace {

QSeries point_product(const LatticePath& p, const WeightScheme& s, int order) {
  QSeries out = QSeries::one(order);
  for (const Point& pt : p.points()) out *= s.wt(pt.y, order);
  return out;
}

}  // namespace

QSeries weigh(const LatticePath& p, const WeightScheme& s, Flavor flavor, int order) {
  return weigh_with_shared(p, s, flavor, {}, order);
}

QSeries weigh_with_shared(const LatticePath& p, const WeightScheme& s, Flavor flavor,
                          const std::vector<Point>& shared, int order) {
  QSeries out = point_product(p, s, order);
  if (flavor == Flavor::Schroder) {
    if (!shared.empty()) throw Error(ErrorCode::FlavorMismatch, "shared points only apply to Dyck flavors");
    const QSeries c = s.c(order);
    for (int i = 0; i < p.flats(); ++i) out *= c;
    return out;
  }
  if (!p.is_dyck()) throw Error(ErrorCode::FlavorMismatch, "valley and high-peak weights need a Dyck path");
  const PathFeatures f = features(p);
  const std::vector<Point>& marked = flavor == Flavor::Valley ? f.valleys : f.high_peaks;
  for (const Point& pt : shared)
    if (!std::binary_search(marked.begin(), marked.end(), pt))
      throw Error(ErrorCode::HypothesisFailed, "shared point is not a " +
                                                   std::string(flavor == Flavor::Valley ? "valley" : "high peak"));
  for (const Point& pt : marked) {
    QSeries e = s.wtext(pt.y, order);
    if (std::binary_search(shared.begin(), shared.end(), pt)) e -= QSeries::one(order);
    out *= e;
  }
  return out;
}

LatticePath horizontal_map(const LatticePath& s, HorizontalMap dir) {
  std::vector<Step> steps;
  for (Step st : s.steps()) {
    if (st != Step::Flat) {
      steps.push_back(st);
    } else if (dir == HorizontalMap::PhiV) {
      steps.push_back(Step::Down);
      steps.push_back(Step::Up);
    } else {
      steps.push_back(Step::Up);
      steps.push_back(Step::Down);
    }
  }
  return LatticePath(s.start_x(), std::move(steps), s.points().front().y);
}

std::vector<LatticePath> preimages(const LatticePath& d, HorizontalMap dir) {
  if (!d.is_dyck()) throw Error(ErrorCode::FlavorMismatch, "preimages are taken of Dyck paths");
  const PathFeatures f = features(d);
  // positions i (vertex index) that may be collapsed into a flat step
  std::vector<std::size_t> spots;
  const auto& pts = d.points();
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const Point p = pts[i];
    if (dir == HorizontalMap::PhiV && std::binary_search(f.valleys.begin(), f.valleys.end(), p)) spots.push_back(i);
    if (dir == HorizontalMap::PhiHP && std::binary_search(f.peaks.begin(), f.peaks.end(), p) && p.y >= 2)
      spots.push_back(i);
  }
  std::vector<LatticePath> out;
  const std::size_t m = spots.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<bool> collapse(pts.size(), false);
    for (std::size_t b = 0; b < m; ++b)
      if ((mask >> b) & 1u) collapse[spots[b]] = true;
    std::vector<Step> steps;
    for (std::size_t i = 0; i < d.steps().size(); ++i) {
      // steps i and i+1 surround vertex i+1
      if (collapse[i + 1]) {
        steps.push_back(Step::Flat);
        ++i;
      } else {
        steps.push_back(d.steps()[i]);
      }
    }
    out.emplace_back(d.start_x(), std::move(steps), pts.front().y);
  }
  std::sort(out.begin(), out.end(), [](const LatticePath& a, const LatticePath& b) { return a.word() < b.word(); });
  return out;
}

namespace {

void require_size(int n, int k, int size_cap) {
  if (n < 0 || k < 1) throw Error(ErrorCode::IndexOutOfRange, "tuples need n >= 0 and k >= 1");
  if (n + 2 * k > size_cap)
    throw Error(ErrorCode::CapExceeded, "n + 2k = " + std::to_string(n + 2 * k) + " exceeds cap " + std::to_string(size_cap));
}

bool related(const LatticePath& a, const LatticePath& b, Relation r) {
  return r == Relation::Strict ? strictly_below(a, b) : weakly_below(a, b);
}

void tuples_rec(int n, int k, const std::vector<Relation>& rel, std::vector<LatticePath>& cur,
                std::vector<std::vector<LatticePath>>& out) {
  const int i = static_cast<int>(cur.size());
  if (i == k) {
    out.push_back(cur);
    return;
  }
  for (const auto& d : dyck_paths(n + 2 * i)) {
    if (i > 0 && !related(cur.back(), d, rel[i - 1])) continue;
    cur.push_back(d);
    tuples_rec(n, k, rel, cur, out);
    cur.pop_back();
  }
}

template <typename T, typename Init, typename Step>
std::vector<T> chain(int n, int k, Init init, Step step) {
  std::vector<T> cur;
  for (const auto& d : dyck_paths(n)) cur.push_back(init(d));
  for (int i = 1; i < k; ++i) {
    const auto& lower = dyck_paths(n + 2 * (i - 1));
    const auto& upper = dyck_paths(n + 2 * i);
    std::vector<T> next;
    next.reserve(upper.size());
    for (const auto& u : upper) next.push_back(step(i, lower, cur, u));
    cur.swap(next);
  }
  return cur;
}

BigInt marked_count(int n, int k, int size_cap, bool high_peaks) {
  require_size(n, k, size_cap);
  auto marks = [high_peaks](const LatticePath& d) {
    const PathFeatures f = features(d);
    const std::size_t avoided = high_peaks ? f.high_peaks.size() : f.valleys.size();
    BigInt w = 1;
    w <<= static_cast<unsigned long>(d.points().size() - avoided);
    return w;
  };
  auto last = chain<BigInt>(
      n, k, marks, [&](int, const std::vector<LatticePath>& lower, const std::vector<BigInt>& cur, const LatticePath& u) {
        BigInt acc = 0;
        for (std::size_t a = 0; a < lower.size(); ++a)
          if (cur[a] != 0 && strictly_below(lower[a], u)) acc += cur[a];
        return BigInt(acc * marks(u));
      });
  BigInt total = 0;
  for (const auto& v : last) total += v;
  return total;
}

}  // namespace

std::vector<std::vector<LatticePath>> enumerate_tuples(int n, int k, const std::vector<Relation>& relations,
                                                       int size_cap) {
  require_size(n, k, size_cap);
  if (static_cast<int>(relations.size()) != k - 1)
    throw Error(ErrorCode::IndexOutOfRange, "need k-1 neighbour relations");
  std::vector<std::vector<LatticePath>> out;
  std::vector<LatticePath> cur;
  tuples_rec(n, k, relations, cur, out);
  return out;
}

BigInt count_marked_tuples(int n, int k, int size_cap) { return marked_count(n, k, size_cap, false); }
BigInt count_marked_tuples_highpeak(int n, int k, int size_cap) { return marked_count(n, k, size_cap, true); }

QSeries tuple_sum(const WeightScheme& s, int n, int k, const std::vector<Relation>& relations, int order) {
  if (static_cast<int>(relations.size()) != k - 1)
    throw Error(ErrorCode::IndexOutOfRange, "need k-1 neighbour relations");
  auto last = chain<QSeries>(
      n, k, [&](const LatticePath& d) { return weigh(d, s, Flavor::Valley, order); },
      [&](int i, const std::vector<LatticePath>& lower, const std::vector<QSeries>& cur, const LatticePath& u) {
        QSeries acc = QSeries::zero(order);
        std::map<std::vector<Point>, QSeries> by_shared;
        for (std::size_t a = 0; a < lower.size(); ++a) {
          if (cur[a].is_zero() || !related(lower[a], u, relations[i - 1])) continue;
          const auto sh = shared_points(lower[a], u);
          auto it = by_shared.find(sh);
          if (it == by_shared.end()) it = by_shared.emplace(sh, weigh_with_shared(u, s, Flavor::Valley, sh, order)).first;
          acc += cur[a] * it->second;
        }
        return acc;
      });
  QSeries total = QSeries::zero(order);
  for (const auto& v : last) total += v;
  return total;
}

QSeries weak_tuple_sum(const WeightScheme& s, int n, int k, int order) {
  return tuple_sum(s, n, k, std::vector<Relation>(k - 1, Relation::Weak), order);
}

QSeries strict_tuple_sum(const WeightScheme& s, int n, int k, int order) {
  return tuple_sum(s, n, k, std::vector<Relation>(k - 1, Relation::Strict), order);
}

}  // namespace qeuler
