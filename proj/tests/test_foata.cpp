#include <doctest.h>

#include <random>
#include <set>

#include "qeuler/error.hpp"
#include "qeuler/foata.hpp"
#include "test_util.hpp"

using namespace qeuler;
using qeuler::testing::random_perm;

TEST_CASE("block map golden value") {
  const Word w{4, 9, 6, 3, 1, 8, 7, 2, 5};
  CHECK(word_to_string(block_step(w, OrderSpec::natural())) == "439612875");
  CHECK(word_to_string(block_step_inverse(Word{4, 3, 9, 6, 1, 2, 8, 7, 5}, OrderSpec::natural())) == "496318725");
}

TEST_CASE("classic Foata map golden values") {
  // brute-force values from tools/oracle.py
  CHECK(foata(Permutation::parse("496318725")).to_string() == "493861725");
  CHECK(foata(Permutation::parse("31524")).to_string() == "31524");
}

TEST_CASE("FA golden value") {
  const Permutation p = Permutation::parse("317295486");
  CHECK(FA(p).to_string() == "739812546");
  CHECK(FA_inverse(Permutation::parse("739812546")) == p);
}

TEST_CASE("swapped orders") {
  const OrderSpec o = OrderSpec::swap(3);
  CHECK(o.less(4, 3));
  CHECK(o.less(2, 4));
  CHECK(o.less(3, 5));
  CHECK_FALSE(o.less(3, 4));
}

TEST_CASE("Foata map sends maj to inv on random permutations") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const Permutation p(random_perm(rng, 1 + trial % 12));
    const Permutation s = foata(p);
    CHECK(inv(s.word()) == maj(p.word()));
    CHECK(foata_inverse(s) == p);
    CHECK(s.word().back() == p.word().back());
  }
}

TEST_CASE("block map is invertible under every swapped order") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 9;
    const Word w = random_perm(rng, n);
    const OrderSpec o = OrderSpec::swap(trial % n);
    CHECK(block_step_inverse(block_step(w, o), o) == w);
  }
}

TEST_CASE("the modified table has twelve distinct rows") {
  std::set<std::string> ids;
  for (const FoataConfig& cfg : foata_table()) ids.insert(cfg.id);
  CHECK(ids.size() == 12);
  CHECK(fa_row().twist == Twist::Kappa);
  CHECK_THROWS_AS(foata_row("no-such-row"), Error);
}

TEST_CASE("every modified map is a statistic-preserving bijection on small lengths") {
  for (const FoataConfig& cfg : foata_table())
    for (int N = cfg.odd ? 1 : 2; N <= (cfg.odd ? 7 : 6); N += 2) {
      const FoataRowCheck c = check_foata_row(cfg, N);
      INFO(cfg.id << " N=" << N);
      CHECK(c.closed);
      CHECK(c.injective);
      CHECK(c.inverse_ok);
      CHECK(c.ok());
    }
}

TEST_CASE("wrong parity is rejected") {
  CHECK_THROWS_AS(check_foata_row(fa_row(), 4), Error);
}
