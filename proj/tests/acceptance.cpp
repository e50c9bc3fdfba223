// Acceptance run: one PASS/FAIL line per criterion, each with its time budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qeuler/cfrac.hpp"
#include "qeuler/detid.hpp"
#include "qeuler/error.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/excited.hpp"
#include "qeuler/foata.hpp"
#include "qeuler/lambda_paths.hpp"
#include "qeuler/registry.hpp"

using namespace qeuler;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream notes;  // printed only on failure

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << "    failed: " << what << '\n';
    }
  }
  void expect(const IdentityReport& r) {
    std::string params;
    for (const auto& [k, v] : r.params)
      if (const auto* i = std::get_if<long long>(&v)) params += " " + k + "=" + std::to_string(*i);
    expect(r.verdict, r.id + params);
  }
  void expect_all(const std::vector<IdentityReport>& rs) {
    expect(!rs.empty(), "no reports produced");
    for (const auto& r : rs) expect(r);
  }
};

int failures = 0;

void criterion(int number, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.notes << "    threw: " << e.what() << '\n';
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > budget_s) {
    o.ok = false;
    o.notes << "    over budget: " << s << " s > " << budget_s << " s\n";
  }
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", s, budget_s);
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << timing << ")\n"
            << std::flush;
  if (!o.ok) {
    std::cout << o.notes.str();
    ++failures;
  }
}

RunParams sized(int cap, int order) {
  RunParams p;
  p.cap = cap;
  p.order = order;
  return p;
}

}  // namespace

int main() {
  criterion(1, "golden values (block map, FA, excited diagrams, p(delta_5/delta_2))", 1, [](Outcome& o) {
    const Word w{4, 9, 6, 3, 1, 8, 7, 2, 5};
    o.expect(word_to_string(block_step(w, OrderSpec::natural())) == "439612875", "f(496318725,<) = 439612875");
    o.expect(FA(Permutation::parse("317295486")).to_string() == "739812546", "FA(317295486) = 739812546");
    o.expect(excited_diagrams(SkewShape({4, 4, 3, 3}, {2, 1})).size() == 8, "8 excited diagrams of (4,4,3,3)/(2,1)");
    const std::vector<std::vector<BigInt>> m{{2, 0, 8}, {8, 2, 48}, {48, 8, 352}};
    o.expect(odd_staircase_pleasant_matrix(2, 1) == m, "matrix [[2,0,8],[8,2,48],[48,8,352]]");
    o.expect(odd_staircase_pleasant_det(2, 1) == 768, "2 det = 768");
    o.expect(pleasant_count(SkewShape(staircase(5), staircase(2)), PleasantMethod::Definition) == 768,
             "p(delta_5/delta_2) = 768");
  });

  criterion(2, "four forms of E_n and E*_n agree for odd n <= 9", 30, [](Outcome& o) {
    for (int n = 1; n <= 9; n += 2)
      for (bool star : {false, true}) {
        const EulerForms f = euler_forms(n, star, n * (n - 1) / 2);
        o.expect(f.ok(), std::string(star ? "E*_" : "E_") + std::to_string(n));
      }
  });

  criterion(3, "integer and polynomial forms for (1,2),(2,2),(3,2),(1,3)", 120, [](Outcome& o) {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {3, 2}, {1, 3}}) {
      const IdentityReport r = main_theorem_1(n, k);
      o.expect(r);
      const auto it = r.params.find("p_method");
      o.expect(it != r.params.end(), "pleasant count method recorded");
    }
  });

  criterion(4, "RPP gf determinant to order 20 for (1,2),(2,2),(1,3)", 300, [](Outcome& o) {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {1, 3}}) o.expect(main_theorem_2(n, k, 20));
  });

  criterion(5, "tangent and secant tables to order 15, 2n+1 <= 9 and 2n <= 8, both readings", 300, [](Outcome& o) {
    o.expect_all(run_entry(find_entry("thm4.2"), sized(4, 15), Profile::Quick));
    o.expect_all(run_entry(find_entry("thm4.5"), sized(4, 15), Profile::Quick));
    // secant rows with an inv-type I column carry both the pi_o and pi_e reading
    for (const QEulerRow& row : secant_rows())
      if (row.i_exprs.front() != StatExpr::Inv)
        o.expect(row.i_exprs.size() == 2, "both readings listed for secant row " + row.id);
  });

  criterion(6, "twelve modified Foata maps, N <= 9 odd and N <= 8 even", 120, [](Outcome& o) {
    o.expect(foata_table().size() == 12, "twelve rows");
    for (const FoataConfig& cfg : foata_table())
      for (int N = cfg.odd ? 1 : 2; N <= (cfg.odd ? 9 : 8); N += 2) {
        const FoataRowCheck c = check_foata_row(cfg, N);
        o.expect(c.ok(), cfg.id + " N=" + std::to_string(N));
      }
  });

  criterion(7, "modified LGV lemmas and propositions, n <= 2, k <= 3, length <= 12, order 20", 120, [](Outcome& o) {
    for (const WeightScheme& s : {val_count_scheme(), mpp_rpp_scheme()}) {
      for (int n = 0; n <= 2; ++n) {
        for (int k = 1; k <= 3; ++k) {
          o.expect(lemma53_check(s, n, k, 20));
          o.expect(prop56_check(s, n, k, 20));
        }
        o.expect(prop55_check(s, n, 20));
      }
      o.expect(prop54_check(s, 6, 20));
      o.expect(peak_lemma_check(s, 6, 20));
    }
  });

  criterion(8, "Kreiman uniqueness, (6,6,6,6)/(3,3) rejection, odd staircase and thick hook corollaries", 300,
            [](Outcome& o) {
              for (int n = 0; n <= 7; ++n)
                for (int k = 1; n + 2 * k <= 7; ++k) o.expect(kreiman_check(SkewShape(staircase(n + 2 * k + 1), staircase(n))));
              for (int a = 1; a <= 3; ++a)
                for (int b = 1; b <= 3; ++b)
                  for (int k = 1; k <= 3; ++k) o.expect(kreiman_check(thick_hook(a, b, k)));
              o.expect_all(run_entry(find_entry("rmk:rect"), {}, Profile::Quick));
              for (int n = 1; n <= 5; ++n)
                for (int k = 1; n + 2 * k <= 7; ++k) {
                  o.expect(cor64_check(n, k, 15));
                  o.expect(cor65_check(n, k));
                }
              for (int a = 1; a <= 3; ++a)
                for (int b = 1; b <= 3; ++b)
                  for (int k = 1; k <= 3; ++k) {
                    o.expect(cor66_check(a, b, k, 15));
                    o.expect(cor67_check(a, b, k));
                  }
            });

  criterion(9, "convergent depth stability, Catalan 1,1,2,5,14, Delta weights to order 12 for 2n <= 6", 60,
            [](Outcome& o) {
              RunParams p;
              p.cap = 6;
              p.xorder = 12;
              o.expect_all(run_entry(find_entry("eq:flajolet"), p, Profile::Quick));
              for (int n = 0; n <= 3; ++n) o.expect(secant_delta_check(n, 12).ok(), "Delta weights n=" + std::to_string(n));
            });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
