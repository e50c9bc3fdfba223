#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qeuler/qseries.hpp"

namespace qeuler {

enum class Step : char { Up = 'U', Down = 'D', Flat = 'H' };

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Nonnegative lattice path with steps (1,1), (1,-1) and (2,0). A flat step
/// has no vertex at its midpoint.
class LatticePath {
 public:
  LatticePath() = default;
  LatticePath(int start_x, std::vector<Step> steps, int start_y = 0);
  /// Steps written as a U/D/H word.
  static LatticePath parse(int start_x, std::string_view word, int start_y = 0);

  int start_x() const noexcept { return points_.front().x; }
  int end_x() const noexcept { return points_.back().x; }
  const std::vector<Step>& steps() const noexcept { return steps_; }
  const std::vector<Point>& points() const noexcept { return points_; }
  int flats() const;
  bool is_dyck() const { return flats() == 0; }

  /// S(x): the height at integer x, including midpoints of flat steps.
  int height_at(int x) const;
  bool covers(int x) const { return x >= start_x() && x <= end_x(); }
  bool contains(Point p) const;

  std::string word() const;

  friend bool operator==(const LatticePath& a, const LatticePath& b) {
    return a.points_.front() == b.points_.front() && a.steps_ == b.steps_;
  }
  friend auto operator<=>(const LatticePath& a, const LatticePath& b) {
    if (auto c = a.points_.front() <=> b.points_.front(); c != 0) return c;
    return a.word() <=> b.word();
  }

 private:
  std::vector<Step> steps_;
  std::vector<Point> points_;
  std::vector<int> heights_;  // S(x) for x = start..end
};

struct PathFeatures {
  std::vector<Point> valleys;
  std::vector<Point> peaks;
  std::vector<Point> high_peaks;
  int H = 0;  // sum of 2y+1 over high peaks
};

PathFeatures features(const LatticePath& p);

enum class PathKind { Dyck, Schroder };

/// All paths from (from_x, 0) to (to_x, 0), sorted by step word. Schroder
/// paths exclude flat steps on the x-axis.
std::vector<LatticePath> enumerate_paths(PathKind kind, int from_x, int to_x);
/// Dyck_{2n}: from (-n, 0) to (n, 0).
const std::vector<LatticePath>& dyck_paths(int n);
const std::vector<LatticePath>& schroder_paths(int n);

/// a < b: a(x) < b(x) on all of a's domain (which must lie inside b's).
bool strictly_below(const LatticePath& a, const LatticePath& b);
/// a <= b: a(x) <= b(x) on a's domain and no x with a(x) = b(x) and
/// a(x+1) = b(x+1).
bool weakly_below(const LatticePath& a, const LatticePath& b);
std::vector<Point> shared_points(const LatticePath& a, const LatticePath& b);

/// Point weights for the path sums. Both preset schemes depend on the height
/// only; the identity wt * (wtext - 1) = c is checked when a scheme is built.
struct WeightScheme {
  std::string name;
  std::function<QSeries(int y, int order)> wt;
  std::function<QSeries(int y, int order)> wtext;
  std::function<QSeries(int order)> c;
  /// Exchange factor t_j (weight ratio for all-high-peak paths of Dyck_{2j}).
  std::function<QSeries(int j, int order)> t;
};

/// wt = 1, wtext = q, c = q - 1, t_j = q.
WeightScheme val_count_scheme();
/// wt = 1/(1-q^{2y+1}), wtext = q^{2y+1}, c = -1, t_j = q^{2j+1}.
WeightScheme mpp_rpp_scheme();
/// Throws InvalidScheme when wt(y)(wtext(y)-1) != c for some y <= height_bound.
WeightScheme custom_scheme(std::string name, std::function<QSeries(int, int)> wt,
                           std::function<QSeries(int, int)> wtext, std::function<QSeries(int)> c,
                           std::function<QSeries(int, int)> t, int height_bound, int order);
void validate_scheme(const WeightScheme& s, int height_bound, int order);

enum class Flavor { Valley, HighPeak, Schroder };

/// wt_V, wt_HP (Dyck paths) or wt_Sch(c, .) (Schroder paths).
QSeries weigh(const LatticePath& p, const WeightScheme& s, Flavor flavor, int order);

/// Points of valleys (resp. high peaks) whose extra factor is replaced by
/// wtext - 1, i.e. wtext * (1 - 1/wtext) without leaving the power series.
QSeries weigh_with_shared(const LatticePath& p, const WeightScheme& s, Flavor flavor,
                          const std::vector<Point>& shared, int order);

enum class HorizontalMap { PhiV, PhiHP };
/// phi_V turns each flat into DU, phi_HP into UD.
LatticePath horizontal_map(const LatticePath& s, HorizontalMap dir);
/// Schroder paths S with horizontal_map(S, dir) == d; flats on the x-axis
/// are excluded.
std::vector<LatticePath> preimages(const LatticePath& d, HorizontalMap dir);

enum class Relation { Strict, Weak };

/// Tuples (D_1, ..., D_k) with D_i in Dyck_{2n+4i-4} and neighbours related
/// by relations[i-1]. Throws CapExceeded when n + 2k exceeds size_cap.
std::vector<std::vector<LatticePath>> enumerate_tuples(int n, int k, const std::vector<Relation>& relations,
                                                       int size_cap = 10);

/// Sum over strict tuples of prod 2^{|D_i| - v(D_i)}: marked tuples with
/// marks on non-valley points.
BigInt count_marked_tuples(int n, int k, int size_cap = 10);
/// Same count with marks on points that are not high peaks.
BigInt count_marked_tuples_highpeak(int n, int k, int size_cap = 10);

/// Sum over tuples with all neighbours weakly related of
/// prod wt_V(D_i) prod_{shared} (1 - 1/wtext).
QSeries weak_tuple_sum(const WeightScheme& s, int n, int k, int order);
/// Sum over strictly non-intersecting tuples of prod wt_V(D_i).
QSeries strict_tuple_sum(const WeightScheme& s, int n, int k, int order);
/// Mixed relations, for the exchange steps.
QSeries tuple_sum(const WeightScheme& s, int n, int k, const std::vector<Relation>& relations, int order);

}  // namespace qeuler
