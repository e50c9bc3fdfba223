#include <doctest.h>

#include <json.hpp>
#include <set>

#include "qeuler/error.hpp"
#include "qeuler/json_io.hpp"
#include "qeuler/registry.hpp"

using namespace qeuler;

TEST_CASE("registry ids are sorted and unique") {
  const auto& reg = registry();
  CHECK(reg.size() >= 80);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CHECK(ids.insert(reg[i].id).second);
    if (i > 0) CHECK(reg[i - 1].id < reg[i].id);
    CHECK_FALSE(reg[i].anchor.empty());
  }
  for (const char* id : {"thm1.1", "thm1.2", "eq:MPP_Euler", "kreiman", "table4:altinv-odd-kappa"}) CHECK(ids.count(id));
}

TEST_CASE("the two headline entries carry their anchors") {
  CHECK(find_entry("thm1.1").anchor == "Conjecture 9.3");
  CHECK(find_entry("thm1.2").anchor == "Conjecture 9.6");
}

TEST_CASE("row aliases and unknown ids") {
  CHECK(find_entry("table2:row3").id == "table2:gt-lt");
  try {
    (void)find_entry("thm99");
    FAIL("expected UnknownIdentity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownIdentity);
  }
  CHECK_THROWS_AS(find_entry("table2:row99"), Error);
  CHECK_THROWS_AS(parse_profile("medium"), Error);
}

TEST_CASE("single point runs") {
  RunParams p;
  p.n = 1;
  p.k = 2;
  const auto rs = run_entry(find_entry("thm1.1"), p, Profile::Quick);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].verdict);
  CHECK(std::get<long long>(rs[0].params.at("n")) == 1);
  CHECK(all_pass(rs));
}

TEST_CASE("a failing point is reported, not thrown") {
  RunParams p;
  p.n = 0;
  const auto rs = run_entry(find_entry("eq:RPP=ST"), p, Profile::Quick);
  REQUIRE(rs.size() == 1);
  CHECK_FALSE(rs[0].verdict);
  CHECK_FALSE(all_pass(rs));
}

TEST_CASE("bad scheme flag") {
  RunParams p;
  p.scheme = "NOPE";
  CHECK_THROWS_AS(run_entry(find_entry("lemma5.3"), p, Profile::Quick), Error);
}

TEST_CASE("json rendering without timing is reproducible") {
  RunParams p;
  p.n = 1;
  p.k = 1;
  const auto a = render_reports(run_entry(find_entry("thm1.2"), p, Profile::Quick), ReportFormat::Json, false);
  const auto b = render_reports(run_entry(find_entry("thm1.2"), p, Profile::Quick), ReportFormat::Json, false);
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  REQUIRE(j.is_array());
  CHECK(j[0]["id"] == "thm1.2");
  CHECK(j[0]["runtime_ms"] == 0);
  CHECK(j[0]["verdict"] == true);
  CHECK_THROWS_AS(parse_report_format("xml"), Error);
}

TEST_CASE("report verdict is the conjunction of its parts") {
  IdentityReport r("x", {}, 0);
  CHECK_FALSE(r.verdict);
  r.add_int("a", 1, 1);
  CHECK(r.verdict);
  r.add_flag("b", false);
  CHECK_FALSE(r.verdict);
  CHECK(value_to_string(r.lhs) == "1");
}
