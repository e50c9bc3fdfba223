#include <doctest.h>

#include <string>

#include "qeuler/detid.hpp"
#include "qeuler/error.hpp"
#include "qeuler/excited.hpp"
#include "qeuler/matrix.hpp"
#include "test_util.hpp"

using namespace qeuler;
using qeuler::testing::poly;

namespace {

const Part& part(const IdentityReport& r, const std::string& prefix) {
  for (const Part& p : r.parts)
    if (p.name.rfind(prefix, 0) == 0) return p;
  FAIL("no part starting with " << prefix);
  return r.parts.front();
}

}  // namespace

TEST_CASE("integer and rational determinants") {
  CHECK(det(Matrix<BigInt>{{2, 0, 8}, {8, 2, 48}, {48, 8, 352}}) == 384);
  CHECK(det(Matrix<Rational>{{Rational(1, 2), 1}, {1, 4}}) == 1);
  CHECK(det(Matrix<BigInt>{}) == 1);
  const Matrix<QSeries> m{{poly({0, 1}, 6), poly({1}, 6)}, {poly({1}, 6), poly({0, 1}, 6)}};
  CHECK(det(m) == poly({-1, 0, 1}, 6));
  CHECK(eq_mod(det_gauss(m), det(m)));  // row swap brings a unit pivot up
  const Matrix<QSeries> z{{poly({0, 1}, 6), poly({0, 1}, 6)}, {poly({0, 0, 1}, 6), poly({1}, 6)}};
  CHECK(det(z) == poly({0, 1, 0, -1}, 6));
  CHECK_THROWS_AS(det_gauss(z), Error);
  const Matrix<QSeries> u{{poly({1, 1}, 6), poly({0, 1}, 6)}, {poly({2}, 6), poly({1, 0, 3}, 6)}};
  CHECK(eq_mod(det_gauss(u), det(u)));
}

TEST_CASE("polynomial and integer forms for small skew staircases") {
  // frozen from the brute-force pleasant counts in tools/oracle.py
  const IdentityReport a = main_theorem_1(1, 2);
  CHECK(a.verdict);
  CHECK(value_to_string(a.lhs) == "q");
  CHECK(std::get<BigInt>(part(a, "p(shape)").lhs) == 1024);

  const IdentityReport b = main_theorem_1(2, 2);
  CHECK(b.verdict);
  CHECK(value_to_string(b.lhs) == "q + q^2 + q^3");
  CHECK(std::get<BigInt>(part(b, "p(shape)").lhs) == 28672);
}

TEST_CASE("RPP determinant for small skew staircases") {
  const IdentityReport r = main_theorem_2(1, 2, 10);
  CHECK(r.verdict);
  // brute-force RPP gf of delta_5 from tools/oracle.py
  CHECK(eq_mod(std::get<QSeries>(r.lhs), poly({1, 4, 10, 23, 47, 88, 158, 270, 443, 706, 1094}, 10)));
  CHECK(main_theorem_2(2, 2, 10).verdict);
}

TEST_CASE("SSYT determinant and excited counts") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; n + 2 * k <= 7; ++k) {
      INFO("n=" << n << " k=" << k);
      CHECK(ssyt_det_check(n, k, 12).verdict);
      CHECK(excited_count_check(n, k).verdict);
    }
}

TEST_CASE("weighted path lemmas under both schemes") {
  for (const WeightScheme& s : {val_count_scheme(), mpp_rpp_scheme()}) {
    INFO(s.name);
    CHECK(peak_lemma_check(s, 5, 14).verdict);
    CHECK(prop54_check(s, 4, 14).verdict);
    for (int n = 0; n <= 1; ++n) {
      CHECK(prop55_check(s, n, 14).verdict);
      for (int k = 1; k <= 2; ++k) {
        CHECK(lemma53_check(s, n, k, 14).verdict);
        CHECK(prop56_check(s, n, k, 14).verdict);
        CHECK(key_exchange_check(s, n, k, 14).verdict);
      }
    }
  }
  CHECK(classical_lgv_check(1, 2, 10).verdict);
  CHECK_THROWS_AS(lgv_matrix(val_count_scheme(), 4, 3, 8), Error);
}

TEST_CASE("matrix entries are single Dyck-path sums") {
  // k = 1: the only entry is the valley polynomial of Dyck_{2n}
  const auto m = lgv_matrix(val_count_scheme(), 3, 1, 8);
  REQUIRE(m.size() == 1);
  CHECK(m[0][0] == poly({1, 3, 1}, 8));
}

TEST_CASE("odd staircase and thick hook corollaries") {
  CHECK(cor64_check(1, 1, 12).verdict);
  CHECK(cor64_check(2, 1, 12).verdict);
  CHECK(cor65_check(2, 1).verdict);
  const IdentityReport h = cor67_check(2, 2, 2);
  CHECK(h.verdict);
  // brute force: p((4,4,4,4)/(2,2)) = 24832, p((2,2)/(1)) = 12
  CHECK(std::get<BigInt>(h.lhs) == 24832);
  CHECK(std::get<BigInt>(part(h, "reverse hook").lhs) == 12);
  CHECK(cor66_check(1, 2, 1, 12).verdict);
}

TEST_CASE("best pleasant method reports what it used") {
  std::string method;
  CHECK(pleasant_count_best(parse_shape("d5/d2"), &method) == 768);
  CHECK_FALSE(method.empty());
}
