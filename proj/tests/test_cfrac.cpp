#include <doctest.h>

#include <random>

#include "qeuler/cfrac.hpp"
#include "qeuler/error.hpp"
#include "qeuler/excited.hpp"
#include "test_util.hpp"

using namespace qeuler;
using qeuler::testing::poly;
using qeuler::testing::random_series;

TEST_CASE("all-ones fraction gives Catalan numbers") {
  const XQSeries f = cf_convergent(cf_constant_spec(QSeries::one(4)), 5, 10, 4);
  const std::vector<long> cat{1, 1, 2, 5, 14, 42};
  for (int n = 0; n <= 5; ++n) CHECK(f[2 * n][0] == cat[n]);
  for (int n = 0; n < 5; ++n) CHECK(f[2 * n + 1].is_zero());
}

TEST_CASE("convergents are stable once deep enough") {
  for (const CFSpec& s : {cf_tangent_spec(), cf_tangent_star_spec()}) {
    const XQSeries a = cf_convergent(s, 4, 8, 10);
    const XQSeries b = cf_convergent(s, 7, 8, 10);
    INFO(s.name);
    CHECK(eq_mod(a, b));
  }
  CHECK_THROWS_AS(cf_convergent(cf_tangent_spec(), 2, 8, 10), Error);
}

TEST_CASE("path sums match the convergent coefficients") {
  for (const CFSpec& s : {cf_tangent_spec(), cf_tangent_star_spec()}) {
    const XQSeries f = cf_convergent(s, 6, 12, 12);
    for (int n = 0; n <= 6; ++n) CHECK(eq_mod(flajolet_path_sum(s, n, 12), f[2 * n]));
  }
}

TEST_CASE("moving the weight from up steps to down steps changes nothing") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<QSeries> w;
    for (int i = 0; i < 6; ++i) w.push_back(random_series(rng, 6));
    auto up = [&](int j, int) { return w[j]; };
    auto one = [](int, int o) { return QSeries::one(o); };
    auto down = [&](int j, int) { return w[j - 1]; };
    for (int n = 1; n <= 5; ++n) CHECK(eq_mod(flajolet_path_sum(up, one, n, 6), flajolet_path_sum(one, down, n, 6)));
  }
}

TEST_CASE("the tangent fraction gives E_{2n+1}/(q;q)") {
  for (int n = 0; n <= 3; ++n) {
    INFO("n=" << n);
    CHECK(tangent_cf_check(n, 14).ok());
    CHECK(tangent_star_cf_check(n, 14).ok());
    CHECK(schroder_cf_check(n, 14).ok());
    CHECK(secant_delta_check(n, 12).ok());
  }
}

TEST_CASE("Delta specializations") {
  CHECK(delta_specialization(-1, 8) == QSeries::one(8));
  CHECK(delta_specialization(-2, 8) == QSeries::one(8));
  CHECK_FALSE(delta_specialization(2, 8).is_zero());
}

TEST_CASE("combined level weight") {
  for (int i = 0; i <= 5; ++i) CHECK(combined_weight_check(i, 20).ok());
}

TEST_CASE("secant quotient gives E_{2n}/(q;q)_{2n}") {
  // 1/cos_q: the x^2 and x^4 coefficients times (q;q) are E_2 = 1 and E_4 = q + 2q^2 + q^3 + q^4
  const XQSeries f = quotient_gf({0, 0, 0, 0, QuotientParity::Secant}, 4, 12);
  CHECK(eq_mod(f[2] * pochhammer(1, 2, 12), QSeries::one(12)));
  CHECK(eq_mod(f[4] * pochhammer(1, 4, 12), poly({0, 1, 2, 1, 1}, 12)));
}

TEST_CASE("every table row agrees for small n") {
  CHECK(table1_rows().size() == 8);
  for (const Table1Row& row : table1_rows())
    for (int n = 0; n <= 2; ++n) {
      INFO(row.id << " n=" << n);
      CHECK(table1_row_check(row, n, 12).ok);
    }
  CHECK_THROWS_AS(table1_row("zz"), Error);
}
