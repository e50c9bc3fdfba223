#include <doctest.h>

#include <set>

#include "qeuler/error.hpp"
#include "qeuler/excited.hpp"
#include "qeuler/tableaux.hpp"

using namespace qeuler;

TEST_CASE("excited diagram counts") {
  // brute-force values from tools/oracle.py
  CHECK(excited_diagrams(SkewShape({4, 4, 3, 3}, {2, 1})).size() == 8);
  CHECK(excited_diagrams(parse_shape("d6/d2")).size() == 3);
  CHECK(excited_diagrams(parse_shape("d7/d3")).size() == 14);
  CHECK(excited_diagrams(parse_shape("d6/d4")).size() == 14);
  CHECK(excited_diagrams(SkewShape({4, 4, 4}, {2, 2})).size() == 6);
}

TEST_CASE("excited diagrams keep the size of mu and stay inside lambda") {
  for (const char* s : {"4,4,3,3/2,1", "d7/d3", "4,4,4/2,2", "5,5,4,2/3,1"}) {
    const SkewShape sh = parse_shape(s);
    std::set<Diagram> seen;
    for (const Diagram& d : excited_diagrams(sh)) {
      CHECK(static_cast<int>(d.size()) == static_cast<int>(SkewShape(sh.mu()).size()));
      for (const Cell& c : d) CHECK(sh.in_lambda(c));
      CHECK(seen.insert(d).second);
    }
  }
}

TEST_CASE("Catalan numbers, little Schroder numbers, frak s") {
  const std::vector<long> cat{1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n < 8; ++n) CHECK(catalan(n) == cat[n]);
  const std::vector<long> sch{1, 1, 3, 11, 45, 197, 903};
  for (int n = 0; n < 7; ++n) CHECK(little_schroder(n) == sch[n]);
  CHECK(frak_s(1) == 8);
  CHECK(frak_s(2) == 48);
}

TEST_CASE("three counts of excited diagrams of skew staircases agree") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; n + 2 * k <= 8; ++k) {
      const ExcitedCounts c = count_formulas(n, k);
      INFO("n=" << n << " k=" << k);
      CHECK(c.e_det == c.e_enum);
      CHECK(Rational(c.e_det) == c.e_prod);
    }
  CHECK_THROWS_AS(count_formulas(3, 4), Error);
}

TEST_CASE("pleasant counts by definition") {
  // brute-force values from tools/oracle.py
  CHECK(pleasant_count(parse_shape("d3/d1"), PleasantMethod::Definition) == 8);
  CHECK(pleasant_count(parse_shape("d4/d2"), PleasantMethod::Definition) == 48);
  CHECK(pleasant_count(parse_shape("d5/d3"), PleasantMethod::Definition) == 352);
  CHECK(pleasant_count(parse_shape("d5/d2"), PleasantMethod::Definition) == 768);
  CHECK(pleasant_count(parse_shape("d5"), PleasantMethod::Definition) == 1024);
  CHECK(pleasant_count(parse_shape("3,3/1"), PleasantMethod::Definition) == 48);
  CHECK(pleasant_count(parse_shape("2,2/1"), PleasantMethod::Definition) == 12);
}

TEST_CASE("pleasant counts: definition against marked paths") {
  for (const char* s : {"d4/d2", "d5/d1", "d6/d2", "d6/d4", "d7/d3", "d5/d2", "3,3/1", "4,4,4/2,2"}) {
    INFO(s);
    const SkewShape sh = parse_shape(s);
    CHECK(pleasant_count(sh, PleasantMethod::Definition) == pleasant_count(sh, PleasantMethod::RhoStar));
  }
}

TEST_CASE("lattice point correspondence") {
  for (int N = 3; N <= 7; ++N)
    for (const Cell& c : SkewShape(staircase(N)).cells()) CHECK(point_to_cell(cell_to_point(c, N), N) == c);
}

TEST_CASE("rho and rho* are bijections") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; n + 2 * k <= 7; ++k) {
      INFO("n=" << n << " k=" << k);
      CHECK(check_rho(n, k).ok());
      CHECK(check_rho_star(n, k).ok());
    }
}

TEST_CASE("hook-length series agree for excited and pleasant sums") {
  // both sides equal the RPP generating function
  for (const char* s : {"d4/d2", "d5/d3", "3,3/1", "4,4,3,3/2,1"}) {
    const SkewShape sh = parse_shape(s);
    const QSeries rpp = tableau_gf(sh, TableauKind::RPP, 12);
    INFO(s);
    CHECK(eq_mod(mpp2_rhs(sh, 12), rpp));
    CHECK(eq_mod(mpp1_rhs(sh, 12), tableau_gf(sh, TableauKind::SSYT, 12)));
  }
}

TEST_CASE("union cap") {
  CHECK_THROWS_AS(pleasant_count(parse_shape("d9/d3"), PleasantMethod::Definition, 10), Error);
}
