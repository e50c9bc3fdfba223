#include <doctest.h>

#include <random>

#include "qeuler/error.hpp"
#include "qeuler/perm.hpp"
#include "test_util.hpp"

using namespace qeuler;
using qeuler::testing::poly;
using qeuler::testing::random_perm;

namespace {

// straight from the definitions, for comparison
int maj_ref(const Word& w) {
  int s = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) s += static_cast<int>(i) + 1;
  return s;
}
int inv_ref(const Word& w) {
  int s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) s += w[i] > w[j];
  return s;
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(Permutation::parse("317295486").to_string() == "317295486");
  CHECK(Permutation::parse("10,3,1,2,4,5,6,7,8,9").at(1) == 10);
  CHECK_THROWS_AS(Permutation::parse("112"), Error);
  CHECK(Permutation::from_cycles(4, {{1, 2, 3}}).to_string() == "2314");
}

TEST_CASE("statistics of a fixed word") {
  const Word w{3, 1, 7, 2, 9, 5, 4, 8, 6};
  CHECK(des_set(w) == std::vector<int>{1, 3, 5, 6, 8});
  CHECK(asc_set(w) == std::vector<int>{2, 4, 7});
  CHECK(ndes_set(w) == std::vector<int>{2, 4, 7, 9});
  CHECK(nasc_set(w) == std::vector<int>{1, 3, 5, 6, 8, 9});
  CHECK(maj(w) == 23);
  CHECK(odd_subword(w) == Word{3, 7, 9, 4, 6});
  CHECK(even_subword(w) == Word{1, 2, 5, 8});
}

TEST_CASE("kappa and eta") {
  CHECK(kappa(5).to_string() == "13254");
  CHECK(eta(5).to_string() == "21435");
  CHECK(eta(4).to_string() == "2143");
}

TEST_CASE("tangent and secant numbers count the alternating classes") {
  const std::vector<std::size_t> euler{1, 1, 1, 2, 5, 16, 61, 272, 1385};
  for (int n = 1; n <= 8; ++n) {
    CHECK(enumerate_class(ClassKind::Alt, n).size() == euler[n]);
    CHECK(enumerate_class(ClassKind::Ralt, n).size() == euler[n]);
    CHECK(enumerate_class(ClassKind::AltInv, n).size() == euler[n]);
  }
  CHECK_THROWS_AS(enumerate_class(ClassKind::Alt, 12), Error);
}

TEST_CASE("maj of inverses over alternating permutations") {
  // brute-force values from tools/oracle.py
  CHECK(stat_sum(ClassKind::Alt, 3, StatExpr::MajInv, 20) == poly({0, 1, 1}, 20));
  CHECK(stat_sum(ClassKind::Alt, 4, StatExpr::MajInv, 20) == poly({0, 1, 2, 1, 1}, 20));
  CHECK(stat_sum(ClassKind::Alt, 5, StatExpr::MajInv, 20) == poly({0, 0, 1, 2, 3, 4, 3, 2, 1}, 20));
  CHECK(stat_sum(ClassKind::Alt, 6, StatExpr::MajInv, 20) ==
        poly({0, 0, 1, 3, 5, 8, 10, 10, 9, 7, 5, 2, 1}, 20));
  CHECK(stat_sum(ClassKind::Alt, 7, StatExpr::MajInv, 20) ==
        poly({0, 0, 0, 1, 3, 7, 13, 19, 26, 32, 35, 35, 32, 26, 19, 13, 7, 3, 1}, 20));
}

TEST_CASE("stat expression names round trip") {
  for (StatExpr e : all_stat_exprs()) CHECK(parse_stat_expr(to_string(e)) == e);
  CHECK_THROWS_AS(parse_stat_expr("nope"), Error);
}

TEST_CASE("negative exponents are rejected") {
  CHECK_THROWS_AS(series_from_exponents({1, -1}, 5), Error);
}

TEST_CASE("random permutations: statistics, inverse, reverse complement") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 10;
    const Permutation p(random_perm(rng, n));
    const Permutation s(random_perm(rng, n));
    CHECK(maj(p.word()) == maj_ref(p.word()));
    CHECK(inv(p.word()) == inv_ref(p.word()));
    CHECK(inv(p.inverse().word()) == inv(p.word()));
    CHECK(p * p.inverse() == Permutation::identity(n));
    CHECK((p * s).inverse() == s.inverse() * p.inverse());
    CHECK(des(p.word()) + asc(p.word()) == n - 1);
    CHECK(ndes(p.word()) == n - des(p.word()));
    CHECK(reverse_complement(reverse_complement(p)) == p);
    CHECK(inv(reverse_complement(p).word()) == inv(p.word()));
    CHECK(is_alternating(p.word()) == in_class(p, ClassKind::Alt));
  }
}

TEST_CASE("reverse complement reverses the up-down pattern") {
  // even length: Alt to Alt; odd length: Alt to Ralt
  for (int n = 1; n <= 9; ++n) {
    const ClassKind target = n % 2 == 0 ? ClassKind::Alt : ClassKind::Ralt;
    for_each_in_class(ClassKind::Alt, n, [&](const Permutation& p) { CHECK(in_class(reverse_complement(p), target)); });
  }
}
