#include <doctest.h>

#include <set>
#include <string>

#include "qeuler/error.hpp"
#include "qeuler/excited.hpp"
#include "qeuler/lambda_paths.hpp"
#include "test_util.hpp"

using namespace qeuler;
using qeuler::testing::poly;

TEST_CASE("lambda-path predicates") {
  const LambdaPath p{{3, 1}, {2, 1}, {2, 2}, {1, 2}, {1, 3}};
  CHECK(is_lambda_path(p));
  CHECK(first_step_up(p));
  CHECK(last_step_down(p));
  CHECK(lambda_peaks(p) == std::vector<Cell>{{2, 1}, {1, 2}});
  CHECK(lambda_valleys(p) == std::vector<Cell>{{2, 2}});
  CHECK_FALSE(is_lambda_path({{1, 1}, {2, 2}}));
}

TEST_CASE("lambda-Dyck paths inside a staircase match ordinary Dyck paths") {
  // from the bottom of column 1 to the end of row 1 of delta_{2n+2}: 4n steps
  for (int n = 1; n <= 4; ++n) {
    const Partition lam = staircase(2 * n + 2);
    const auto paths = lambda_dyck_paths(lam, {2 * n + 1, 1}, {1, 2 * n + 1});
    CHECK(paths.size() == catalan(2 * n));
    CHECK(lowest_path(lam, {2 * n + 1, 1}, {1, 2 * n + 1}) == paths.front());
  }
}

TEST_CASE("decomposition of the worked example") {
  const SkewShape shape({9, 8, 8, 8, 5, 5, 4}, {4, 3, 1});
  const KreimanDecomp d = kreiman_decompose(shape);
  CHECK(d.paths.size() == 7);
  REQUIRE(d.ranks.has_value());
  CHECK(*d.ranks == std::vector<int>{3, 2, 1, 0, 0, 1, 0});
  std::set<Cell> covered;
  for (const auto& p : d.paths) {
    CHECK(is_lambda_path(p));
    for (const Cell& c : p) CHECK(covered.insert(c).second);
  }
  CHECK(static_cast<int>(covered.size()) == shape.size());
}

TEST_CASE("rank functions") {
  // chain a < b < c; minimal elements get rank 0
  const std::vector<std::vector<bool>> chain{{false, true, true}, {false, false, true}, {false, false, false}};
  CHECK(rank_function(chain) == std::vector<int>{0, 1, 2});
  // a < c, b < c, a < d
  const std::vector<std::vector<bool>> vee{
      {false, false, true, true}, {false, false, true, false}, {false, false, false, false}, {false, false, false, false}};
  CHECK(rank_function(vee) == std::vector<int>{0, 0, 1, 1});
  // pentagon: z < a < b < t and z < c < t
  std::vector<std::vector<bool>> pentagon(5, std::vector<bool>(5, false));
  for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}) pentagon[i][j] = true;
  CHECK_FALSE(rank_function(pentagon).has_value());
}

TEST_CASE("rectangle minus a rectangle is rejected with the clause named") {
  const SkewShape shape({6, 6, 6, 6}, {3, 3});
  const KreimanDecomp d = kreiman_decompose(shape);
  CHECK(d.paths.size() == 3);
  try {
    check_lp_hypotheses(shape, d);
    FAIL("expected HypothesisFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HypothesisFailed);
    CHECK(std::string(e.what()).find("L_2 does not start with an up step") != std::string::npos);
  }
}

TEST_CASE("skew staircases and thick hooks decompose uniquely") {
  for (int n = 0; n <= 4; ++n)
    for (int k = 1; n + 2 * k <= 6; ++k) {
      const SkewShape sh(staircase(n + 2 * k), staircase(n));
      const KreimanDecomp d = kreiman_decompose(sh);
      CHECK(static_cast<int>(d.paths.size()) == k);
      CHECK_NOTHROW(check_lp_hypotheses(sh, d));
    }
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int k = 1; k <= 2; ++k) CHECK_NOTHROW(check_lp_hypotheses(thick_hook(a, b, k), kreiman_decompose(thick_hook(a, b, k))));
}

TEST_CASE("ribbon counts") {
  // a single ribbon is its own decomposition
  const SkewShape r = ribbon_shape(staircase(4), {3, 1}, {1, 3});
  CHECK(r.size() == 5);
  CHECK(pleasant_count_families(r) == pleasant_count(r, PleasantMethod::Definition));
}

TEST_CASE("determinant sides for small shapes") {
  for (const char* s : {"d4", "d6", "d5/d2", "d6/d3", "d7/d2", "3,3,3/2,2", "4,4,4/2", "3,3,3/1"}) {
    INFO(s);
    const SkewShape sh = parse_shape(s);
    const LpSides rpp = lp_rpp_sides(sh, 10);
    CHECK(eq_mod(rpp.lhs, rpp.rhs));
    const LpSides val = lp_valley_sides(sh);
    CHECK(eq_mod(val.lhs, val.rhs));
    const LpCount cnt = lp_pleasant_sides(sh);
    CHECK(cnt.lhs == cnt.rhs);
  }
}

TEST_CASE("closed forms against brute force") {
  // tools/oracle.py
  CHECK(odd_staircase_pleasant_det(2, 1) == 768);
  CHECK(odd_staircase_pleasant_det(3, 1) == 11264);
  CHECK(odd_staircase_pleasant_matrix(2, 1) == std::vector<std::vector<BigInt>>{{2, 0, 8}, {8, 2, 48}, {48, 8, 352}});
  CHECK(eq_mod(odd_staircase_rpp_det(3, 1, 8), poly({1, 5, 15, 39, 90, 189, 375, 707, 1276}, 8)));
  CHECK(thick_hook_pleasant_det(2, 2, 2) == 24832);
  CHECK(reverse_hook_pleasant(2, 2) == 12);
  CHECK(reverse_hook_pleasant(3, 3) == 104);
  CHECK(reverse_hook_pleasant(2, 3) == 32);
}

TEST_CASE("decomposition cap") {
  CHECK_THROWS_AS(kreiman_decompose(parse_shape("d8"), 10), Error);
}
