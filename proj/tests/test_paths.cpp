#include <doctest.h>

#include <set>

#include "qeuler/error.hpp"
#include "qeuler/paths.hpp"
#include "test_util.hpp"

using namespace qeuler;
using qeuler::testing::poly;

TEST_CASE("Catalan and little Schroder counts") {
  // brute-force values from tools/oracle.py
  const std::vector<std::size_t> cat{1, 1, 2, 5, 14, 42, 132};
  const std::vector<std::size_t> sch{1, 1, 3, 11, 45, 197};
  for (int n = 0; n < 7; ++n) CHECK(dyck_paths(n).size() == cat[n]);
  for (int n = 0; n < 6; ++n) CHECK(schroder_paths(n).size() == sch[n]);
}

TEST_CASE("path geometry") {
  const LatticePath p = LatticePath::parse(-3, "UUDUDD");
  CHECK(p.end_x() == 3);
  CHECK(p.height_at(-1) == 2);
  CHECK(p.height_at(0) == 1);
  CHECK(p.contains({1, 2}));
  CHECK(p.is_dyck());
  const PathFeatures f = features(p);
  CHECK(f.valleys == std::vector<Point>{{0, 1}});
  CHECK(f.peaks == std::vector<Point>{{-1, 2}, {1, 2}});
  CHECK(f.high_peaks.size() == 2);
  CHECK(f.H == 10);

  const LatticePath s = LatticePath::parse(0, "UHD");
  CHECK(s.flats() == 1);
  CHECK(s.height_at(2) == 1);
  CHECK(s.points().size() == 4);
  CHECK(horizontal_map(s, HorizontalMap::PhiV).word() == "UDUD");
  CHECK(horizontal_map(s, HorizontalMap::PhiHP).word() == "UUDD");
  CHECK_THROWS_AS(LatticePath::parse(0, "DU"), Error);
}

TEST_CASE("below relations") {
  const LatticePath low = LatticePath::parse(-1, "UD");
  const LatticePath high = LatticePath::parse(-3, "UUUDDD");
  const LatticePath mid = LatticePath::parse(-3, "UUDUDD");
  CHECK(strictly_below(low, high));
  CHECK_FALSE(strictly_below(low, mid));  // they share (0,1)
  CHECK(weakly_below(low, mid));
  CHECK(shared_points(low, mid) == std::vector<Point>{{0, 1}});
  // sharing two consecutive points is not weakly below
  CHECK_FALSE(weakly_below(LatticePath::parse(-1, "UD"), LatticePath::parse(-3, "UDUDUD")));
}

TEST_CASE("valley weights give Narayana polynomials") {
  const WeightScheme s = val_count_scheme();
  const std::vector<std::vector<long long>> narayana{{1}, {1}, {1, 1}, {1, 3, 1}, {1, 6, 6, 1}, {1, 10, 20, 10, 1}};
  for (int n = 1; n <= 5; ++n) {
    QSeries sum = QSeries::zero(10);
    for (const auto& d : dyck_paths(n)) sum += weigh(d, s, Flavor::Valley, 10);
    CHECK(sum == poly(narayana[n], 10));
  }
}

TEST_CASE("horizontal maps: preimages partition the Schroder paths") {
  for (HorizontalMap dir : {HorizontalMap::PhiV, HorizontalMap::PhiHP})
    for (int n = 1; n <= 5; ++n) {
      std::set<LatticePath> seen;
      for (const auto& d : dyck_paths(n))
        for (const auto& s : preimages(d, dir)) {
          CHECK(horizontal_map(s, dir) == d);
          CHECK(seen.insert(s).second);
        }
      CHECK(seen.size() == schroder_paths(n).size());
    }
}

TEST_CASE("weight schemes satisfy their defining identity") {
  validate_scheme(val_count_scheme(), 8, 12);
  validate_scheme(mpp_rpp_scheme(), 8, 12);
  auto wt = [](int, int o) { return QSeries::one(o); };
  auto bad_ext = [](int, int o) { return QSeries::monomial(1, 2, o); };
  auto c = [](int o) { return poly({-1, 1}, o); };
  auto t = [](int, int o) { return QSeries::one(o); };
  try {
    (void)custom_scheme("bad", wt, bad_ext, c, t, 3, 8);
    FAIL("expected InvalidScheme");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidScheme);
  }
}

TEST_CASE("marked tuples count pleasant diagrams") {
  // pleasant counts by brute force, tools/oracle.py
  CHECK(count_marked_tuples(1, 1) == 8);
  CHECK(count_marked_tuples(2, 1) == 48);
  CHECK(count_marked_tuples(3, 1) == 352);
  CHECK(count_marked_tuples(1, 2) == 1024);
}

TEST_CASE("tuples respect their relations") {
  const auto strict = enumerate_tuples(1, 2, {Relation::Strict});
  const auto weak = enumerate_tuples(1, 2, {Relation::Weak});
  CHECK(strict.size() < weak.size());
  for (const auto& t : strict) CHECK(strictly_below(t[0], t[1]));
  for (const auto& t : weak) CHECK(weakly_below(t[0], t[1]));
  CHECK_THROWS_AS(enumerate_tuples(4, 4, {Relation::Strict, Relation::Strict, Relation::Strict}), Error);
}

TEST_CASE("with the unit scheme the weak and strict sums count tuples") {
  const WeightScheme s = val_count_scheme();
  const QSeries strict = strict_tuple_sum(s, 1, 2, 12);
  CHECK(strict.evaluate(1) == static_cast<long>(enumerate_tuples(1, 2, {Relation::Strict}).size()));
}
