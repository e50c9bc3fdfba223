#include <doctest.h>

#include <algorithm>

#include "qeuler/error.hpp"
#include "qeuler/excited.hpp"
#include "qeuler/tableaux.hpp"
#include "test_util.hpp"

using namespace qeuler;
using qeuler::testing::poly;

namespace {

QSeries gf(const char* shape, TableauKind kind, GfMode mode = GfMode::Oracle) {
  return tableau_gf(parse_shape(shape), kind, 10, mode);
}

}  // namespace

TEST_CASE("shape parsing") {
  CHECK(parse_shape("d6/d2") == SkewShape(staircase(6), staircase(2)));
  CHECK(parse_shape("(4,4,3,3)/(2,1)") == SkewShape({4, 4, 3, 3}, {2, 1}));
  CHECK(parse_shape("d5").lambda() == Partition{4, 3, 2, 1});
  CHECK(staircase_ab(6, 1, 0) == Partition{4, 4, 3, 2, 1});
  CHECK(staircase_ab(6, 1, 1) == Partition{4, 4, 3, 2});
  CHECK(thick_hook(1, 2, 2) == SkewShape({4, 4, 4}, {2}));
  CHECK_THROWS_AS(SkewShape({2, 3}), Error);
  CHECK_THROWS_AS(SkewShape({2, 1}, {3}), Error);
  CHECK_THROWS_AS(parse_shape("4,,3"), Error);
}

TEST_CASE("conjugate and hooks") {
  CHECK(conjugate({4, 4, 3, 3}) == Partition{4, 4, 4, 2});
  CHECK(hook({4, 3, 2, 1}, {1, 1}) == 7);
  CHECK(hook({4, 3, 2, 1}, {2, 3}) == 1);
  CHECK_THROWS_AS(hook({2, 1}, {2, 2}), Error);
}

TEST_CASE("size generating functions against brute force") {
  // brute-force values from tools/oracle.py, coefficients of q^0..q^10
  CHECK(gf("3,2,1/1", TableauKind::SSYT) == poly({0, 0, 1, 3, 7, 14, 24, 39, 60, 88, 125}, 10));
  CHECK(gf("3,2,1/1", TableauKind::RPP) == poly({1, 3, 6, 12, 21, 34, 53, 78, 111, 154, 208}, 10));
  CHECK(gf("3,2,1/1", TableauKind::ST) == poly({0, 0, 0, 1, 3, 6, 12, 21, 34, 53, 78}, 10));
  CHECK(gf("d5", TableauKind::RPP) == poly({1, 4, 10, 23, 47, 88, 158, 270, 443, 706, 1094}, 10));
  CHECK(gf("d5/d3", TableauKind::SSYT) == poly({0, 0, 0, 1, 4, 12, 29, 60, 114, 202, 338}, 10));
  CHECK(gf("d5/d3", TableauKind::RPP) == poly({1, 4, 10, 23, 47, 88, 156, 262, 421, 653, 983}, 10));
  CHECK(gf("d5/d3", TableauKind::ST) == poly({0, 0, 0, 0, 1, 4, 10, 23, 47, 88, 156}, 10));
  CHECK(gf("3,3/1", TableauKind::RPP) == poly({1, 1, 3, 5, 9, 13, 21, 29, 42, 56, 76}, 10));
  CHECK(gf("2,2,2/1,1", TableauKind::ST) == poly({0, 0, 0, 1, 2, 3, 6, 9, 13, 18, 25}, 10));
}

TEST_CASE("extension and oracle modes agree") {
  for (const char* s : {"3,2,1/1", "d5/d3", "3,3/1", "2,2,2/1,1", "4,4,3,3/2,1", "d6/d4", "d5"})
    for (TableauKind k : {TableauKind::SSYT, TableauKind::RPP, TableauKind::ST}) {
      INFO(s << " " << to_string(k));
      CHECK(eq_mod(gf(s, k, GfMode::Oracle), gf(s, k, GfMode::Extension)));
    }
}

TEST_CASE("standard tableaux counts and the hook formula for skew shapes") {
  // brute-force values from tools/oracle.py
  CHECK(count_linear_extensions(parse_shape("d5")) == 768);
  CHECK(count_linear_extensions(parse_shape("4,4,3,3/2,1")) == 4290);
  CHECK(count_linear_extensions(parse_shape("3,3,3/1,1")) == 21);
  for (const char* s : {"d5", "4,4,3,3/2,1", "3,3,3/1,1", "d6/d2", "d6/d4", "4,4,4/2,2"}) {
    const NaruseCheck c = syt_count_and_naruse(parse_shape(s));
    INFO(s);
    CHECK(Rational(c.count) == c.naruse_value);
  }
}

TEST_CASE("maj polynomial sums to the number of extensions") {
  for (const char* s : {"d5/d3", "3,3/1", "4,4,3,3/2,1"}) {
    const SkewShape sh = parse_shape(s);
    BigInt total = 0;
    for (const BigInt& c : linear_extension_maj_poly(sh, TableauKind::SSYT)) total += c;
    CHECK(total == count_linear_extensions(sh));
  }
}

TEST_CASE("labelings are bijective onto 1..n") {
  const SkewShape sh = parse_shape("4,4,3,3/2,1");
  for (TableauKind k : {TableauKind::SSYT, TableauKind::RPP, TableauKind::ST}) {
    std::vector<int> l = labeling(sh, k);
    std::sort(l.begin(), l.end());
    for (std::size_t i = 0; i < l.size(); ++i) CHECK(l[i] == static_cast<int>(i) + 1);
  }
}

TEST_CASE("extension cap") {
  CHECK_THROWS_AS(linear_extension_maj_poly(parse_shape("d7"), TableauKind::SSYT, 14), Error);
}
