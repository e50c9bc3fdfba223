#include <doctest.h>

#include <random>

#include "qeuler/error.hpp"
#include "qeuler/json_io.hpp"
#include "qeuler/qseries.hpp"
#include "test_util.hpp"

using namespace qeuler;
using qeuler::testing::poly;
using qeuler::testing::random_series;

TEST_CASE("truncation follows the smaller order") {
  const QSeries a = poly({1, 1, 1, 1, 1, 1}, 5);
  const QSeries b = poly({1, -1}, 2);
  const QSeries p = a * b;
  CHECK(p.order() == 2);
  CHECK(p == poly({1, 0, 0}, 2));
  CHECK((a + b).order() == 2);
}

TEST_CASE("geometric series and its inverse") {
  const QSeries g = QSeries::geometric(3, 10);
  CHECK(g[0] == 1);
  CHECK(g[3] == 1);
  CHECK(g[4] == 0);
  CHECK(g.inverse() == poly({1, 0, 0, -1}, 10));
  CHECK(QSeries::one(10).div_one_minus_q_pow(3) == g);
  CHECK(g.mul_one_minus_q_pow(3) == QSeries::one(10));
}

TEST_CASE("valuation, shift and cancelling division") {
  const QSeries a = poly({0, 0, 2, 1}, 6);
  CHECK(a.valuation() == 2);
  CHECK(QSeries::zero(4).valuation() == 5);
  CHECK(a.shifted(-2) == poly({2, 1}, 4));
  CHECK(a.shifted(1) == poly({0, 0, 0, 2, 1}, 6));
  CHECK(a.shifted(5) == poly({0, 0, 0, 0, 0, 0, 0}, 6));
  const QSeries b = poly({0, 1}, 6);
  const QSeries c = div_cancel_q(a, b);
  CHECK(c.order() == 5);
  CHECK(c == poly({0, 2, 1}, 5));
  CHECK_THROWS_AS(div_cancel_q(b, a), Error);
}

TEST_CASE("non-unit inverse is rejected") {
  try {
    (void)poly({0, 1}, 4).inverse();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByNonUnit);
  }
}

TEST_CASE("pentagonal numbers in (q;q)_n") {
  // (q;q)_inf = 1 - q - q^2 + q^5 + q^7 - q^12 - q^15 + ...
  const QSeries p = pochhammer(1, 16, 16);
  std::vector<long long> want(17, 0);
  want[0] = 1;
  want[1] = want[2] = -1;
  want[5] = want[7] = 1;
  want[12] = want[15] = -1;
  CHECK(p == poly(want, 16));
}

TEST_CASE("gaussian binomials") {
  CHECK(qbinom(4, 2, 10) == poly({1, 1, 2, 1, 1}, 10));
  CHECK(qbinom(5, 0, 10) == QSeries::one(10));
  CHECK_THROWS_AS(qbinom(3, 5, 10), Error);
  // q-Pascal: [n,m] = [n-1,m-1] + q^m [n-1,m]
  for (int n = 1; n <= 7; ++n)
    for (int m = 1; m < n; ++m)
      CHECK(qbinom(n, m, 30) == qbinom(n - 1, m - 1, 30) + qbinom(n - 1, m, 30).shifted(m).truncated(30));
}

TEST_CASE("evaluate at a rational point") {
  CHECK(poly({1, 2, 3}, 5).evaluate(Rational(1, 2)) == Rational(11, 4));
}

TEST_CASE("to_string shows the error term") {
  CHECK(poly({1, -1}, 3).to_string().find("O(q^4)") != std::string::npos);
}

TEST_CASE("ring laws on random series") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const int order = 1 + trial % 9;
    const QSeries a = random_series(rng, order), b = random_series(rng, order), c = random_series(rng, order);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QSeries::zero(order));
    const QSeries u = random_series(rng, order, true);
    CHECK(eq_mod(u * u.inverse(), QSeries::one(order)));
    CHECK(eq_mod((a * u) / u, a));
  }
}

TEST_CASE("json round trip keeps exact coefficients") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const QSeries a = random_series(rng, 6, true);
    const QSeries b = a.inverse() * Rational(3, 7);
    CHECK(series_from_json(series_to_json(b)) == b);
  }
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(R"({"order": 2, "coeffs": ["1"]})")), Error);
}

TEST_CASE("bivariate product and quotient") {
  const int qo = 6;
  // (1 + x) / (1 - q x) = 1 + (1+q) x + q(1+q) x^2 + ...
  const XQSeries one_plus_x({QSeries::one(qo), QSeries::one(qo), QSeries::zero(qo)});
  const XQSeries one_minus_qx({QSeries::one(qo), -poly({0, 1}, qo), QSeries::zero(qo)});
  const XQSeries r = one_plus_x / one_minus_qx;
  CHECK(eq_mod(r[1], poly({1, 1}, qo)));
  CHECK(eq_mod(r[2], poly({0, 1, 1}, qo)));
  CHECK(eq_mod(r * one_minus_qx, one_plus_x));
}
