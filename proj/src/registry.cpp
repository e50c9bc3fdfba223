#include "qeuler/registry.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <set>
#include <tuple>

#include "qeuler/cfrac.hpp"
#include "qeuler/detid.hpp"
#include "qeuler/error.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/excited.hpp"
#include "qeuler/foata.hpp"
#include "qeuler/lambda_paths.hpp"
#include "qeuler/paths.hpp"
#include "qeuler/perm.hpp"
#include "qeuler/tableaux.hpp"

namespace qeuler {

Profile parse_profile(std::string_view text) {
  if (text == "quick") return Profile::Quick;
  if (text == "full") return Profile::Full;
  throw Error(ErrorCode::BadFlag, "--profile must be quick or full, not '" + std::string(text) + "'");
}

bool all_pass(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.verdict; });
}

namespace {

using Reports = std::vector<IdentityReport>;

// Collects reports, timing each one.
class Sweep {
 public:
  template <class F>
  void add(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    IdentityReport r = f();
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out_.push_back(std::move(r));
  }
  Reports take() { return std::move(out_); }

 private:
  Reports out_;
};

int pick(const std::optional<int>& v, int def) { return v ? *v : def; }
int bound(const RunParams& p, Profile pr, int quick, int full) { return p.cap ? *p.cap : pr == Profile::Quick ? quick : full; }

struct NK {
  int n, k;
};

// Explicit (n, k) when given, otherwise the sweep.
std::vector<NK> nk_points(const RunParams& p, std::vector<NK> sweep, int def_n = 1, int def_k = 2) {
  if (p.n || p.k) return {{pick(p.n, def_n), pick(p.k, def_k)}};
  return sweep;
}

std::vector<int> n_points(const RunParams& p, int from, int to) {
  if (p.n) return {*p.n};
  std::vector<int> out;
  for (int n = from; n <= to; ++n) out.push_back(n);
  return out;
}

std::vector<WeightScheme> schemes(const RunParams& p) {
  if (!p.scheme) return {val_count_scheme(), mpp_rpp_scheme()};
  if (*p.scheme == "VAL_COUNT") return {val_count_scheme()};
  if (*p.scheme == "MPP_RPP") return {mpp_rpp_scheme()};
  throw Error(ErrorCode::BadFlag, "--scheme must be VAL_COUNT or MPP_RPP, not '" + *p.scheme + "'");
}

int choose2(int k) { return k * (k - 1) / 2; }

// ---- shapes ---------------------------------------------------------------

std::vector<SkewShape> small_shapes(const RunParams& p, Profile pr) {
  if (p.shape) return {parse_shape(*p.shape)};
  std::vector<SkewShape> out{SkewShape({4, 4, 3, 3}, {2, 1}), skew_staircase(1, 1), skew_staircase(2, 1),
                             skew_staircase(1, 2), thick_hook(1, 1, 2), SkewShape({3, 3, 2}, {1}),
                             SkewShape({4, 2, 2}, {2})};
  if (pr == Profile::Full) {
    out.push_back(skew_staircase(3, 1));
    out.push_back(skew_staircase(2, 2));
    out.push_back(thick_hook(2, 1, 2));
  }
  return out;
}

// Shapes on which the lambda-path determinant theorems apply.
std::vector<SkewShape> lp_shapes(const RunParams& p, Profile pr) {
  if (p.shape) return {parse_shape(*p.shape)};
  std::vector<SkewShape> out;
  const int lim = bound(p, pr, 7, 8);
  for (int n = 1; n + 2 <= lim; ++n)
    for (int k = 1; n + 2 * k <= lim; ++k) out.emplace_back(staircase(n + 2 * k + 1), staircase(n));
  const int hook_lim = 3;
  for (int a = 1; a <= hook_lim; ++a)
    for (int b = 1; b <= hook_lim; ++b)
      for (int k = 1; k <= hook_lim; ++k) out.push_back(thick_hook(a, b, k));
  return out;
}

// ---- small checks that live only here -------------------------------------

// Euler zigzag numbers by the boustrophedon triangle.
BigInt zigzag(int n) {
  std::vector<BigInt> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1);
    next[0] = 0;
    for (int j = 1; j <= i; ++j) next[j] = next[j - 1] + row[i - j];
    row = std::move(next);
  }
  return row.back();
}

BigInt value_at_one(const QSeries& s) {
  Rational total = 0;
  for (const Rational& c : s.coeffs()) total += c;
  return total.get_num();
}

IdentityReport euler_definition_check(int n) {
  const int deg = n * (n - 1) / 2;
  IdentityReport r("eq:En_maj", {{"n", n}}, deg);
  r.add_int("E_n(1) = Euler number", value_at_one(stat_sum(ClassKind::Alt, n, StatExpr::MajInv, deg)), zigzag(n));
  r.add_int("E*_n(1) = Euler number", value_at_one(stat_sum(ClassKind::Alt, n, StatExpr::MajKappaInv, deg)),
            zigzag(n));
  const Permutation k = kappa(n);
  r.add_flag("kappa_n is an involution", k * k == Permutation::identity(n), k.to_string());
  return r;
}

IdentityReport euler_form_check(const std::string& id, int n, bool star, bool path_side) {
  const int deg = n * (n - 1) / 2;
  IdentityReport r(id, {{"n", n}}, deg);
  const EulerForms f = euler_forms(n, star, deg);
  const std::string e = star ? "E*" : "E";
  if (path_side) {
    r.add_poly(e + " by maj = path sum * (q;q)_n", f.maj, f.path);
  } else {
    r.add_poly(e + " by maj = " + (star ? "inv - ndes(pi_e)" : "inv") + " sum", f.maj, f.inv);
  }
  return r;
}

IdentityReport inv_maj_check(int n) {
  const int deg = n * (n - 1) / 2;
  IdentityReport r("eq:inv_maj", {{"n", n}}, deg);
  r.add_poly("sum maj(pi^-1) = sum inv(pi) over Alt_n", stat_sum(ClassKind::Alt, n, StatExpr::MajInv, deg),
             stat_sum(ClassKind::Alt, n, StatExpr::Inv, deg));
  bool pointwise = true;
  for_each_in_class(ClassKind::All, n, [&](const Permutation& p) {
    pointwise = pointwise && maj(p.word()) == inv(foata(p).word()) && foata_inverse(foata(p)) == p;
  });
  r.add_flag("Foata: maj(pi) = inv(F(pi)) on S_n, F invertible", pointwise);
  return r;
}

IdentityReport huber_check(const std::string& id, int n, bool with_bijection) {
  const int deg = n * (n - 1) / 2;
  IdentityReport r(id, {{"n", n}}, deg);
  r.add_poly("sum maj(kappa pi^-1) = sum inv(pi) - ndes(pi_e)", stat_sum(ClassKind::Alt, n, StatExpr::MajKappaInv, deg),
             stat_sum(ClassKind::Alt, n, StatExpr::InvMinusNdesE, deg));
  if (with_bijection) {
    const FoataRowCheck c = check_foata_row(fa_row(), n);
    r.add_flag("FA is a bijection of Alt^-1 transporting the statistic", c.ok(),
               std::to_string(c.domain) + " permutations");
  }
  return r;
}

// The tangent-table row check viewed as one of the five displayed
// identities of the Foata section.
IdentityReport tangent_form_check(int which, int n, int order) {
  const bool kappa_row = which == 2 || which == 4 || which == 5;
  const QEulerRow& row = qeuler_row(true, kappa_row ? "ge-le" : "ge-lt");
  const QEulerRowCheck c = qeuler_row_check(row, n, order);
  IdentityReport r("eq:" + std::to_string(which), {{"n", n}}, order);
  const std::string tab = kappa_row ? "RPP gf" : "SSYT gf";
  switch (which) {
    case 1:
    case 2:
      r.add_series(tab + " = M/(q;q)", c.tab, c.m);
      break;
    case 3:
    case 4:
      for (const auto& [name, s] : c.i_forms) r.add_series(tab + " = " + name, c.tab, s);
      break;
    default:
      for (const auto& [name, s] : c.i_forms) r.add_series("M/(q;q) = " + name, c.m, s);
      break;
  }
  return r;
}

IdentityReport reverse_complement_check(int n) {
  IdentityReport r("lemma4.1", {{"n", n}}, 0);
  auto stats = [](const Permutation& p) {
    const StatBundle b = statistics(p);
    return std::array<int, 3>{b.inv, des(b.pi_o), des(b.pi_e)};
  };
  for (int N : {2 * n + 1, 2 * n}) {
    if (N == 0) continue;
    const bool odd = N % 2 == 1;
    const ClassKind target = odd ? ClassKind::Ralt : ClassKind::Alt;
    std::set<Permutation> images;
    bool into = true, preserved = true;
    long long count = 0;
    for_each_in_class(ClassKind::Alt, N, [&](const Permutation& p) {
      const Permutation s = reverse_complement(p);
      ++count;
      into = into && in_class(s, target);
      images.insert(s);
      const auto a = stats(p), b = stats(s);
      preserved = preserved && (odd ? a == b : (a[0] == b[0] && b[1] == a[2]));
    });
    long long target_size = 0;
    for_each_in_class(target, N, [&](const Permutation&) { ++target_size; });
    const std::string dom = odd ? "Alt_" + std::to_string(N) + " -> Ralt" : "Alt_" + std::to_string(N) + " -> Alt";
    r.add_flag(dom + " is a bijection",
               into && static_cast<long long>(images.size()) == count && count == target_size,
               std::to_string(count) + " permutations");
    r.add_flag(odd ? "(inv, des(pi_o), des(pi_e)) preserved" : "(inv, des(pi_o)) -> (inv, des(pi_e))", preserved);
  }
  return r;
}

IdentityReport qeuler_table_report(const QEulerRow& row, int n, int order) {
  const std::string table = row.tangent ? "table2:" : "table3:";
  IdentityReport r(table + row.id, {{"n", n}}, order);
  const QEulerRowCheck c = qeuler_row_check(row, n, order);
  r.add_series("TAB gf = M/(q;q)", c.tab, c.m);
  r.add_series("TAB gf = quotient coefficient", c.tab, c.quotient);
  for (const auto& [name, s] : c.i_forms) r.add_series("TAB gf = " + name, c.tab, s);
  return r;
}

IdentityReport table1_report(const Table1Row& row, int n, int order) {
  IdentityReport r("table1:" + row.id, {{"n", n}}, order);
  const Table1Check c = table1_row_check(row, n, order);
  if (c.normalized_tau) r.add_series("M/(q;q) = quotient coefficient", *c.normalized_tau, c.quotient);
  if (c.cf) r.add_series("continued fraction = quotient coefficient", *c.cf, c.quotient);
  if (!c.normalized_tau || !c.cf)
    r.params["sides"] = std::string(c.normalized_tau ? "tau,quotient" : "cf,quotient");
  return r;
}

IdentityReport table4_report(const FoataConfig& cfg, int N) {
  IdentityReport r("table4:" + cfg.id, {{"N", N}}, 0);
  const FoataRowCheck c = check_foata_row(cfg, N);
  r.add_flag("images stay in the class", c.closed);
  r.add_flag("injective on " + std::to_string(c.domain) + " permutations", c.injective);
  r.add_flag("inverse map undoes the map", c.inverse_ok);
  bool any = false;
  std::string readings;
  for (const auto& [expr, ok] : c.transport) {
    any = any || ok;
    if (!readings.empty()) readings += ",";
    readings += std::string(to_string(expr)) + (ok ? ":yes" : ":no");
  }
  r.add_flag("A(pi) = B(F(pi)) pointwise", any, readings);
  return r;
}

IdentityReport foata_example_check() {
  IdentityReport r("thm4.3", {{"example", "golden"}}, 0);
  const Word w{4, 9, 6, 3, 1, 8, 7, 2, 5};
  r.add("f(496318725, <)", word_to_string(block_step(w, OrderSpec::natural())), std::string("439612875"),
        word_to_string(block_step(w, OrderSpec::natural())) == "439612875");
  const std::string fa = FA(Permutation::parse("317295486")).to_string();
  r.add("FA(317295486)", fa, std::string("739812546"), fa == "739812546");
  return r;
}

IdentityReport flajolet_report(const CFSpec& spec, int n, int order) {
  IdentityReport r("eq:flajolet", {{"n", n}, {"weights", spec.name}}, order);
  const XQSeries cf = cf_convergent(spec, n, 2 * n, order);
  r.add_series("[x^2n] convergent = weighted Dyck sum", cf[2 * n], flajolet_path_sum(spec, n, order));
  return r;
}

IdentityReport depth_stability_report(const CFSpec& spec, int xorder, int order) {
  IdentityReport r("eq:flajolet", {{"xorder", xorder}, {"weights", spec.name}, {"check", "depth"}}, order);
  const int depth = (xorder + 1) / 2;
  const XQSeries a = cf_convergent(spec, depth, xorder, order);
  bool stable = true;
  for (int extra = 1; extra <= 3; ++extra) stable = stable && eq_mod(a, cf_convergent(spec, depth + extra, xorder, order));
  r.add_flag("deeper convergents agree up to x^xorder", stable);
  return r;
}

IdentityReport catalan_report() {
  IdentityReport r("eq:flajolet", {{"weights", "1"}, {"check", "catalan"}}, 0);
  const XQSeries cf = cf_convergent(cf_constant_spec(QSeries::one(0)), 4, 8, 0);
  std::string got;
  for (int m = 0; m <= 4; ++m) got += (m ? "," : "") + cf[2 * m][0].get_str();
  r.add("coefficients of x^0..x^8", got, std::string("1,1,2,5,14"), got == "1,1,2,5,14");
  return r;
}

IdentityReport pair_report(const std::string& id, std::map<std::string, ParamValue> params, int order,
                           const std::string& name, const SeriesPair& sp) {
  IdentityReport r(id, std::move(params), order);
  r.add_series(name, sp.lhs, sp.rhs);
  return r;
}

IdentityReport rho_report(const std::string& id, int n, int k, bool star) {
  IdentityReport r(id, {{"n", n}, {"k", k}}, 0);
  const BijectionCheck c = star ? check_rho_star(n, k) : check_rho(n, k);
  r.add_flag("injective", c.injective);
  r.add_flag("onto", c.onto);
  r.add_int("|domain| = |codomain|", c.domain, c.codomain);
  return r;
}

IdentityReport path_form_report(const std::string& id, const WeightScheme& s, int n, int k, int order, int e) {
  IdentityReport r(id, {{"n", n}, {"k", k}, {"scheme", s.name}}, order);
  const int inner = order + e;
  const QSeries weak = weak_tuple_sum(s, n, k, inner);
  const QSeries strict = strict_tuple_sum(s, n, k, inner);
  r.add_series("weak sum with shared factors = q^e strict sum", weak.truncated(order),
               strict.shifted(e).truncated(order));
  r.params["e"] = static_cast<long long>(e);
  return r;
}

IdentityReport mpp_report(const SkewShape& shape, int order, bool rpp) {
  IdentityReport r(rpp ? "eq:MPP2" : "eq:MPP1", {{"shape", shape.to_string()}}, order);
  if (rpp)
    r.add_series("RPP gf = pleasant diagram sum", tableau_gf(shape, TableauKind::RPP, order), mpp2_rhs(shape, order));
  else
    r.add_series("SSYT gf = excited diagram sum", tableau_gf(shape, TableauKind::SSYT, order), mpp1_rhs(shape, order));
  return r;
}

IdentityReport naruse_report(const SkewShape& shape) {
  IdentityReport r("eq:naruse", {{"shape", shape.to_string()}}, 0);
  const NaruseCheck c = syt_count_and_naruse(shape);
  r.add("f = |lambda/mu|! sum prod 1/h", Rational(c.count), c.naruse_value, Rational(c.count) == c.naruse_value);
  return r;
}

IdentityReport lin_ext_report(const SkewShape& shape, int order) {
  IdentityReport r("eq:lin_ext", {{"shape", shape.to_string()}}, order);
  for (TableauKind kind : {TableauKind::SSYT, TableauKind::RPP, TableauKind::ST})
    r.add_series(std::string(to_string(kind)) + ": filling oracle = sum q^maj / (q;q)_n",
                 tableau_gf(shape, kind, order, GfMode::Oracle), tableau_gf(shape, kind, order, GfMode::Extension));
  return r;
}

IdentityReport staircase_euler_report(const std::string& id, int n, int order) {
  IdentityReport r(id, {{"n", n}}, order);
  const SkewShape shape(staircase(n + 2), staircase(n));
  if (id == "eq:RPP=ST") {
    const QSeries rpp = tableau_gf(shape, TableauKind::RPP, order);
    r.add_series("ST gf = q^(n+1) RPP gf", tableau_gf(shape, TableauKind::ST, order),
                 rpp.shifted(n + 1).truncated(order));
    return r;
  }
  const bool star = id == "eq:RPP->E";
  const QSeries m =
      stat_sum(ClassKind::Alt, 2 * n + 1, star ? StatExpr::MajKappaInv : StatExpr::MajInv, order) *
      (QSeries::one(order) / pochhammer(1, 2 * n + 1, order));
  r.add_series(star ? "RPP gf = E*/(q;q)" : "SSYT gf = E/(q;q)",
               tableau_gf(shape, star ? TableauKind::RPP : TableauKind::SSYT, order), m);
  return r;
}

IdentityReport kreiman_example_report() {
  const SkewShape shape({9, 8, 8, 8, 5, 5, 4}, {4, 3, 1});
  IdentityReport r("kreiman:example", {{"shape", shape.to_string()}}, 0);
  const KreimanDecomp d = kreiman_decompose(shape);
  std::string ranks = "unranked";
  if (d.ranks) {
    ranks.clear();
    for (int x : *d.ranks) ranks += (ranks.empty() ? "" : ",") + std::to_string(x);
  }
  r.add("ranks of L_1..L_7", ranks, std::string("3,2,1,0,0,1,0"), ranks == "3,2,1,0,0,1,0");
  // drop the last path and ask again
  const std::size_t m = d.less.size() - 1;
  std::vector<std::vector<bool>> sub(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) sub[i][j] = d.less[i][j];
  r.add_flag("without L_7 the poset is not ranked", !rank_function(sub).has_value());
  return r;
}

IdentityReport rect_rejection_report() {
  const SkewShape shape({6, 6, 6, 6}, {3, 3});
  IdentityReport r("rmk:rect", {{"shape", shape.to_string()}}, 0);
  const KreimanDecomp d = kreiman_decompose(shape);
  r.add_int("number of paths", BigInt(static_cast<unsigned long>(d.paths.size())), BigInt(3));
  std::string clause = "hypotheses hold";
  try {
    check_lp_hypotheses(shape, d);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::HypothesisFailed) throw;
    clause = e.what();
  }
  const std::string want = "L_2 does not start with an up step";
  r.add("rejected with clause", clause, want, clause.find(want) != std::string::npos);
  return r;
}

IdentityReport lp_report(const std::string& id, const SkewShape& shape, int order) {
  IdentityReport r(id, {{"shape", shape.to_string()}}, id == "cor6.3" ? 0 : order);
  if (id == "thm6.1") {
    const LpSides s = lp_rpp_sides(shape, order);
    r.add_series("RPP gf = q^-sum r|L| det E_lambda", s.lhs, s.rhs);
    r.params["exponent"] = static_cast<long long>(s.exponent);
  } else if (id == "thm6.2") {
    const LpSides s = lp_valley_sides(shape);
    r.add_poly("disjoint-family valley sum = q^-sum r det F_lambda", s.lhs, s.rhs);
    r.params["exponent"] = static_cast<long long>(s.exponent);
  } else {
    const LpCount c = lp_pleasant_sides(shape);
    r.add_int("p(shape) = 2^sum r det p(ribbons)", c.lhs, c.rhs);
  }
  return r;
}

IdentityReport worked_example_report() {
  IdentityReport r("cor6.5", {{"n", 2}, {"k", 1}, {"example", "matrix"}}, 0);
  const auto m = odd_staircase_pleasant_matrix(2, 1);
  const std::vector<std::vector<BigInt>> want{{2, 0, 8}, {8, 2, 48}, {48, 8, 352}};
  auto text = [](const std::vector<std::vector<BigInt>>& a) {
    std::string s;
    for (const auto& row : a) {
      s += s.empty() ? "[" : " [";
      for (std::size_t j = 0; j < row.size(); ++j) s += (j ? "," : "") + row[j].get_str();
      s += "]";
    }
    return s;
  };
  r.add("matrix (frak_s_{i+jbar})", text(m), text(want), m == want);
  r.add_int("p(delta_5/delta_2)", pleasant_count_best(SkewShape(staircase(5), staircase(2))), BigInt(768));
  r.add_int("2^C(k+1,2) det", odd_staircase_pleasant_det(2, 1), BigInt(768));
  return r;
}

// ---- the table of entries ---------------------------------------------------

std::vector<RegistryEntry> build() {
  std::vector<RegistryEntry> e;
  auto add = [&](std::string id, std::string anchor, std::string summary,
                 std::function<Reports(const RunParams&, Profile)> run) {
    e.push_back({std::move(id), std::move(anchor), std::move(summary), std::move(run)});
  };

  // q-Euler numbers and their forms
  add("eq:En_maj", "q-Euler numbers, definition by maj over Alt_n", "E_n(1) = E*_n(1) = Euler number",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        for (int n : n_points(p, 1, bound(p, pr, 10, 11))) s.add([&] { return euler_definition_check(n); });
        return s.take();
      });
  for (const auto& [id, star, path] : std::vector<std::tuple<std::string, bool, bool>>{
           {"eq:MPP_Euler", false, true}, {"eq:MPP_Euler*", true, true}}) {
    add(id, star ? "E*_{2n+1}/(q;q) as a sum over Dyck paths with high-peak weights"
                 : "E_{2n+1}/(q;q) as a sum over Dyck paths",
        star ? "maj form of E* = Dyck path form" : "maj form of E = Dyck path form",
        [id, star, path](const RunParams& p, Profile pr) {
          Sweep s;
          for (int n : n_points(p, 0, (bound(p, pr, 9, 11) - 1) / 2))
            s.add([&] { return euler_form_check(id, 2 * n + 1, star, path); });
          return s.take();
        });
  }
  add("eq:En_inv", "q-Euler numbers by inversions", "E_n by maj(pi^-1) = E_n by inv, odd n",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        for (int n : n_points(p, 0, (bound(p, pr, 9, 11) - 1) / 2))
          s.add([&] { return euler_form_check("eq:En_inv", 2 * n + 1, false, false); });
        return s.take();
      });
  add("eq:inv_maj", "maj(pi^-1) and inv are equidistributed on Alt_n", "sum identity and Foata's bijection",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        for (int n : n_points(p, 1, bound(p, pr, 8, 9))) s.add([&] { return inv_maj_check(n); });
        return s.take();
      });
  add("eq:Huber", "E*_{2n+1} as a sum of q^{inv - ndes(pi_e)}", "E* by maj(kappa pi^-1) = inv - ndes(pi_e)",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        for (int n : n_points(p, 0, (bound(p, pr, 9, 11) - 1) / 2))
          s.add([&] { return huber_check("eq:Huber", 2 * n + 1, false); });
        return s.take();
      });
  add("eq:inv_maj*", "maj(kappa pi^-1) and inv - ndes(pi_e) are equidistributed on Alt_{2n+1}",
      "sum identity and the FA bijection", [](const RunParams& p, Profile pr) {
        Sweep s;
        for (int n : n_points(p, 0, (bound(p, pr, 9, 11) - 1) / 2))
          s.add([&] { return huber_check("eq:inv_maj*", 2 * n + 1, true); });
        return s.take();
      });

  // hook length formulas
  add("eq:naruse", "skew hook length formula over excited diagrams", "f^{lambda/mu} = Naruse sum",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        for (const auto& sh : small_shapes(p, pr)) s.add([&] { return naruse_report(sh); });
        return s.take();
      });
  add("eq:MPP1", "SSYT gf as a sum over excited diagrams", "SSYT gf = excited diagram sum",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        for (const auto& sh : small_shapes(p, pr)) s.add([&] { return mpp_report(sh, pick(p.order, 20), false); });
        return s.take();
      });
  add("eq:MPP2", "RPP gf as a sum over pleasant diagrams", "RPP gf = pleasant diagram sum",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        for (const auto& sh : small_shapes(p, pr)) s.add([&] { return mpp_report(sh, pick(p.order, 20), true); });
        return s.take();
      });
  add("eq:excited", "number of excited diagrams of delta_{n+2k}/delta_n", "enumeration = Catalan det = product",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        const int lim = bound(p, pr, 8, 10);
        std::vector<NK> sweep;
        for (int n = 1; n + 2 <= lim; ++n)
          for (int k = 1; n + 2 * k <= lim; ++k) sweep.push_back({n, k});
        for (auto [n, k] : nk_points(p, sweep)) s.add([&] { return excited_count_check(n, k); });
        return s.take();
      });
  add("eq:ssyt", "SSYT gf of delta_{n+2k}/delta_n as a determinant of q-Euler numbers",
      "SSYT gf = det(E_{2n+2i+2j-3}/(q;q))", [](const RunParams& p, Profile pr) {
        Sweep s;
        std::vector<NK> sweep{{1, 1}, {2, 1}, {1, 2}, {2, 2}};
        if (pr == Profile::Full) sweep.push_back({1, 3});
        for (auto [n, k] : nk_points(p, sweep)) s.add([&] { return ssyt_det_check(n, k, pick(p.order, 15)); });
        return s.take();
      });
  add("thm1.1", "Conjecture 9.3", "p(delta_{n+2k}/delta_n) = 2^C(k,2) det(frak_s), with its q-analog",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        std::vector<NK> sweep{{1, 2}, {2, 2}, {3, 2}, {1, 3}};
        if (pr == Profile::Full) sweep.push_back({2, 3});
        for (auto [n, k] : nk_points(p, sweep)) s.add([&] { return main_theorem_1(n, k); });
        return s.take();
      });
  add("thm1.2", "Conjecture 9.6", "RPP gf of delta_{n+2k}/delta_n = shifted det(E*/(q;q))",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        std::vector<NK> sweep{{1, 2}, {2, 2}, {1, 3}};
        if (pr == Profile::Full) sweep.push_back({3, 2});
        for (auto [n, k] : nk_points(p, sweep)) s.add([&] { return main_theorem_2(n, k, pick(p.order, 20)); });
        return s.take();
      });

  // (P, omega)-partitions
  add("eq:lin_ext", "(P,omega)-partition gf through linear extensions", "filling oracle = maj polynomial / (q;q)_n",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        for (const auto& sh : small_shapes(p, pr)) s.add([&] { return lin_ext_report(sh, pick(p.order, 20)); });
        return s.take();
      });
  for (const std::string id : {"eq:SSYT->E", "eq:RPP->E", "eq:RPP=ST"}) {
    const std::string anchor = id == "eq:SSYT->E"  ? "SSYT gf of delta_{n+2}/delta_n is E_{2n+1}/(q;q)"
                               : id == "eq:RPP->E" ? "RPP gf of delta_{n+2}/delta_n is E*_{2n+1}/(q;q)"
                                                   : "ST and RPP gfs of delta_{n+2}/delta_n differ by q^{n+1}";
    add(id, anchor, anchor, [id](const RunParams& p, Profile pr) {
      Sweep s;
      // the ST shift needs a neighbour for every outer corner, so n >= 1
      for (int n : n_points(p, id == "eq:RPP=ST" ? 1 : 0, bound(p, pr, 4, 5)))
        s.add([&] { return staircase_euler_report(id, n, pick(p.order, 20)); });
      return s.take();
    });
  }

  // continued fractions
  add("eq:flajolet", "weighted Dyck path gf as a continued fraction",
      "convergent coefficients = path sums; depth stability; Catalan numbers", [](const RunParams& p, Profile pr) {
        Sweep s;
        const int order = pick(p.order, 20);
        const std::vector<CFSpec> specs{cf_constant_spec(QSeries::one(order)),
                                        cf_constant_spec(QSeries::monomial(1, 1, order)), cf_tangent_spec(),
                                        cf_tangent_star_spec()};
        for (const auto& spec : specs) {
          for (int n : n_points(p, 0, bound(p, pr, 6, 8))) s.add([&] { return flajolet_report(spec, n, order); });
          s.add([&] { return depth_stability_report(spec, pick(p.xorder, 8), order); });
        }
        s.add([] { return catalan_report(); });
        return s.take();
      });
  add("prop3.1", "E_{2n+1}/(q;q) from the tangent continued fraction", "permutation sum = (1/(1-q)) cf path sum",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        for (int n : n_points(p, 0, bound(p, pr, 4, 5)))
          s.add([&] {
            return pair_report("prop3.1", {{"n", n}}, pick(p.order, 20), "E/(q;q) = path sum / (1-q)",
                               tangent_cf_check(n, pick(p.order, 20)));
          });
        return s.take();
      });
  add("prop3.2", "E_{2n}/(q;q) from Delta weights of principal specializations",
      "permutation sum = Dyck sum with Delta weights", [](const RunParams& p, Profile pr) {
        Sweep s;
        for (int n : n_points(p, 0, bound(p, pr, 3, 3)))
          s.add([&] {
            return pair_report("prop3.2", {{"n", n}}, pick(p.order, 12), "E_2n/(q;q) = Delta-weighted Dyck sum",
                               secant_delta_check(n, pick(p.order, 12)));
          });
        return s.take();
      });
  add("eqn:cf_E*", "little Schroder weights for the E* continued fraction, and the weight combination",
      "Schroder sum = Dyck sum; combined weight identity", [](const RunParams& p, Profile pr) {
        Sweep s;
        const int order = pick(p.order, 20);
        for (int n : n_points(p, 0, bound(p, pr, 4, 5)))
          s.add([&] { return pair_report("eqn:cf_E*", {{"n", n}}, order, "Schroder sum = Dyck sum", schroder_cf_check(n, order)); });
        for (int i = 0; i <= 4; ++i)
          s.add([&] {
            return pair_report("eqn:cf_E*", {{"i", i}, {"check", "combine"}}, order,
                               "-1/(1-q^{2i+1}) + 1/((1-q^{2i+1})(1-q^{2i+3})) = q^{2i+3}/(...)",
                               combined_weight_check(i, order));
          });
        return s.take();
      });
  add("eqn:w_i", "E*_{2n+1}/(q;q) from the w_i continued fraction", "permutation sum = (1/(1-q)) cf path sum",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        for (int n : n_points(p, 0, bound(p, pr, 4, 5)))
          s.add([&] {
            return pair_report("eqn:w_i", {{"n", n}}, pick(p.order, 20), "E*/(q;q) = path sum / (1-q)",
                               tangent_star_cf_check(n, pick(p.order, 20)));
          });
        return s.take();
      });
  for (const Table1Row& row : table1_rows()) {
    const std::string id = row.id;
    add("table1:" + id, "continued fraction table, row " + id,
        "(A,B)/(C,D) quotient against M/(q;q) and the cf where printed", [id](const RunParams& p, Profile pr) {
          Sweep s;
          for (int n : n_points(p, 0, bound(p, pr, 4, 5)))
            s.add([&] { return table1_report(table1_row(id), n, pick(p.order, 15)); });
          return s.take();
        });
  }

  // Prodinger's numbers and Foata-type maps
  for (int which = 1; which <= 5; ++which) {
    const char* anchors[] = {"",
                             "SSYT gf = maj(pi^-1) sum / (q;q)",
                             "RPP gf = maj(kappa pi^-1) sum / (q;q)",
                             "SSYT gf = inv sum / (q;q)",
                             "RPP gf = inv - ndes(pi_e) sum / (q;q)",
                             "maj(kappa pi^-1) sum = inv - ndes(pi_e) sum"};
    add("eq:" + std::to_string(which), anchors[which], anchors[which], [which](const RunParams& p, Profile pr) {
      Sweep s;
      for (int n : n_points(p, 0, bound(p, pr, 4, 5)))
        s.add([&] { return tangent_form_check(which, n, pick(p.order, 15)); });
      return s.take();
    });
  }
  add("lemma4.1", "reverse complement on alternating permutations", "bijections and statistic transport",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        for (int n : n_points(p, 0, bound(p, pr, 4, 5))) s.add([&] { return reverse_complement_check(n); });
        return s.take();
      });
  for (bool tangent : {true, false}) {
    const std::string thm = tangent ? "thm4.2" : "thm4.5";
    const std::string table = tangent ? "table2:" : "table3:";
    const std::string what = tangent ? "q-tangent" : "q-secant";
    add(thm, "Prodinger's " + what + " numbers, all six rows", "every row of the " + what + " table",
        [tangent](const RunParams& p, Profile pr) {
          Sweep s;
          const int max_n = bound(p, pr, 4, 5);
          for (const QEulerRow& row : tangent ? tangent_rows() : secant_rows())
            for (int n : n_points(p, tangent ? 0 : 1, max_n))
              s.add([&] { return qeuler_table_report(row, n, pick(p.order, 15)); });
          return s.take();
        });
    for (const QEulerRow& row : tangent ? tangent_rows() : secant_rows()) {
      const std::string id = row.id;
      add(table + id, what + " table, row " + id, "TAB gf = M/(q;q) = I/(q;q) = quotient coefficient",
          [tangent, id](const RunParams& p, Profile pr) {
            Sweep s;
            for (int n : n_points(p, tangent ? 0 : 1, bound(p, pr, 4, 5)))
              s.add([&] { return qeuler_table_report(qeuler_row(tangent, id), n, pick(p.order, 15)); });
            return s.take();
          });
    }
  }
  add("thm4.3", "the FA bijection on Alt^-1_{2n+1}", "golden values and exhaustive bijection check",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        s.add([] { return foata_example_check(); });
        for (int n : n_points(p, 0, (bound(p, pr, 9, 11) - 1) / 2))
          s.add([&] {
            IdentityReport r = table4_report(fa_row(), 2 * n + 1);
            r.id = "thm4.3";
            return r;
          });
        return s.take();
      });
  add("thm4.4", "modified Foata maps, all twelve rows", "every row of the modified Foata table",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        for (const FoataConfig& cfg : foata_table()) {
          const int lim = cfg.odd ? bound(p, pr, 9, 11) : bound(p, pr, 8, 10);
          for (int N = cfg.odd ? 1 : 2; N <= lim; N += 2)
            if (!p.n || N == *p.n) s.add([&] { return table4_report(cfg, N); });
        }
        return s.take();
      });
  for (const FoataConfig& cfg : foata_table()) {
    const std::string id = cfg.id;
    add("table4:" + id, "modified Foata table, row " + id, "bijection with pointwise statistic transport",
        [id](const RunParams& p, Profile pr) {
          Sweep s;
          const FoataConfig& c = foata_row(id);
          const int lim = c.odd ? bound(p, pr, 9, 11) : bound(p, pr, 8, 10);
          for (int N = c.odd ? 1 : 2; N <= lim; N += 2)
            if (!p.n || N == *p.n) s.add([&] { return table4_report(c, N); });
          return s.take();
        });
  }
  for (int which : {1, 2}) {
    add("rmk:q-sec:" + std::to_string(which),
        which == 1 ? "open identity between the second and fifth secant rows"
                   : "open identity between the third and sixth secant rows",
        "all pi_o / pi_e readings give the same sum", [which](const RunParams& p, Profile pr) {
          Sweep s;
          for (int n : n_points(p, 1, bound(p, pr, 4, 5)))
            s.add([&] {
              const int order = pick(p.order, 15);
              IdentityReport r("rmk:q-sec:" + std::to_string(which), {{"n", n}}, order);
              const RemarkCheck c = remark_identity(which, n, order);
              for (std::size_t i = 1; i < c.sums.size(); ++i)
                r.add_series(c.sums[0].first + " = " + c.sums[i].first, c.sums[0].second, c.sums[i].second);
              return r;
            });
          return s.take();
        });
  }

  // modified LGV
  for (bool star : {false, true}) {
    const std::string id = star ? "prop5.2" : "prop5.1";
    add(id,
        star ? "marked non-intersecting paths and pleasant diagrams" : "non-intersecting paths and excited diagrams",
        star ? "rho* is a bijection" : "rho is a bijection", [id, star](const RunParams& p, Profile pr) {
          Sweep s;
          std::vector<NK> sweep{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {1, 3}};
          if (pr == Profile::Full) sweep.push_back({2, 3});
          for (auto [n, k] : nk_points(p, sweep)) s.add([&] { return rho_report(id, n, k, star); });
          return s.take();
        });
  }
  add("lemma5.3", "determinant of d_n^{i,j} as a weakly non-crossing path sum", "det = weak tuple sum, both schemes",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        std::vector<NK> sweep;
        for (int n = 0; n <= (pr == Profile::Full ? 3 : 2); ++n)
          for (int k = 1; k <= 3 && n + 2 * k <= 8; ++k) sweep.push_back({n, k});
        for (const auto& sc : schemes(p))
          for (auto [n, k] : nk_points(p, sweep))
            s.add([&] { return lemma53_check(sc, n, k, pick(p.order, 20)); });
        return s.take();
      });
  add("rmk:lgv", "wtext = 1 recovers the classical LGV lemma", "det = strict tuple sum",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        std::vector<NK> sweep{{1, 1}, {1, 2}, {2, 2}, {1, 3}};
        if (pr == Profile::Full) sweep.push_back({2, 3});
        for (auto [n, k] : nk_points(p, sweep)) s.add([&] { return classical_lgv_check(n, k, pick(p.order, 20)); });
        return s.take();
      });
  add("prop5.4", "wt_V and wt_HP as sums over horizontal-map preimages", "weights = preimage sums",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        for (const auto& sc : schemes(p))
          s.add([&] { return prop54_check(sc, pick(p.n, bound(p, pr, 6, 7)), pick(p.order, 20)); });
        return s.take();
      });
  add("prop5.5", "valley, high-peak and Schroder sums between two paths agree", "three sums agree for every pair",
      [](const RunParams& p, Profile) {
        Sweep s;
        for (const auto& sc : schemes(p))
          for (int n : n_points(p, 0, 2)) s.add([&] { return prop55_check(sc, n, pick(p.order, 20)); });
        return s.take();
      });
  add("prop5.6", "weak tuple sum = prod t_{n+2i}^i * strict tuple sum", "exchange of weak and strict tuples",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        std::vector<NK> sweep;
        for (int n = 0; n <= (pr == Profile::Full ? 3 : 2); ++n)
          for (int k = 1; k <= 3 && n + 2 * k <= 8; ++k) sweep.push_back({n, k});
        for (const auto& sc : schemes(p))
          for (auto [n, k] : nk_points(p, sweep)) s.add([&] { return prop56_check(sc, n, k, pick(p.order, 20)); });
        return s.take();
      });
  add("lemma5.8", "valley-count weights: wt(wtext-1) constant, wt_HP = q wt_V", "VAL_COUNT peak lemma",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        s.add([&] { return peak_lemma_check(val_count_scheme(), pick(p.n, bound(p, pr, 6, 7)), pick(p.order, 20)); });
        return s.take();
      });
  add("lemma5.10", "RPP weights: wt(wtext-1) = -1, wt_HP = q^{2n+1} wt_V", "MPP_RPP peak lemma",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        s.add([&] { return peak_lemma_check(mpp_rpp_scheme(), pick(p.n, bound(p, pr, 6, 7)), pick(p.order, 20)); });
        return s.take();
      });
  add("thm5.7", "det(d_{n+i+j-2}) = q^C(k,2) d_{n,k}", "valley-count path form",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        std::vector<NK> sweep{{1, 2}, {2, 2}, {3, 2}, {1, 3}};
        if (pr == Profile::Full) sweep.push_back({2, 3});
        for (auto [n, k] : nk_points(p, sweep))
          s.add([&] {
            const int order = choose2(k) + k * (n + 2 * k) + 2;
            IdentityReport r = path_form_report("thm5.7", val_count_scheme(), n, k, order, choose2(k));
            const IdentityReport d = main_theorem_1(n, k);
            r.add(d.parts[0].name, d.parts[0].lhs, d.parts[0].rhs, d.parts[0].verdict);
            return r;
          });
        return s.take();
      });
  add("thm5.9", "RPP-weight path form with exponent k(k-1)(6n+8k-1)/6", "weak sum = q^e strict sum",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        std::vector<NK> sweep{{1, 2}, {2, 2}, {1, 3}};
        if (pr == Profile::Full) sweep.push_back({3, 2});
        for (auto [n, k] : nk_points(p, sweep))
          s.add([&] {
            return path_form_report("thm5.9", mpp_rpp_scheme(), n, k, pick(p.order, 20),
                                    k * (k - 1) * (6 * n + 8 * k - 1) / 6);
          });
        return s.take();
      });

  // lambda-Dyck paths
  add("kreiman", "Kreiman outer decomposition", "decomposition exists, is unique and tiles the shape",
      [](const RunParams& p, Profile pr) {
        Sweep s;
        std::vector<SkewShape> shapes = lp_shapes(p, pr);
        if (!p.shape) {
          shapes.push_back(SkewShape({9, 8, 8, 8, 5, 5, 4}, {4, 3, 1}));
          shapes.push_back(SkewShape({6, 6, 6, 6}, {3, 3}));
        }
        for (const auto& sh : shapes) s.add([&] { return kreiman_check(sh); });
        return s.take();
      });
  add("kreiman:example", "ranked poset of the example decomposition", "ranks 3,2,1,0,0,1,0; unranked without L_7",
      [](const RunParams&, Profile) {
        Sweep s;
        s.add([] { return kreiman_example_report(); });
        return s.take();
      });
  add("rmk:rect", "(6,6,6,6)/(3,3) falls outside the determinant theorems", "rejected: L_2 does not start with an up step",
      [](const RunParams&, Profile) {
        Sweep s;
        s.add([] { return rect_rejection_report(); });
        return s.take();
      });
  for (const std::string id : {"thm6.1", "thm6.2", "cor6.3"}) {
    const std::string anchor = id == "thm6.1"   ? "RPP gf as a determinant of E_lambda(s_i,t_j)"
                               : id == "thm6.2" ? "disjoint lambda-Dyck families as a determinant of F_lambda"
                                                : "pleasant diagrams as a determinant of ribbon counts";
    add(id, anchor, anchor, [id](const RunParams& p, Profile pr) {
      Sweep s;
      std::vector<SkewShape> shapes = lp_shapes(p, pr);
      for (const auto& sh : shapes) s.add([&] { return lp_report(id, sh, pick(p.order, 12)); });
      return s.take();
    });
  }
  auto odd_sweep = [](const RunParams& p, Profile pr) {
    std::vector<NK> sweep;
    const int lim = bound(p, pr, 7, 8);
    for (int n = 1; n + 2 <= lim; ++n)
      for (int k = 1; n + 2 * k <= lim; ++k) sweep.push_back({n, k});
    return nk_points(p, sweep, 2, 1);
  };
  struct ABK {
    int a, b, k;
  };
  auto hook_sweep = [](const RunParams& p, Profile pr) {
    if (p.a || p.b || p.k) return std::vector<ABK>{{pick(p.a, 2), pick(p.b, 2), pick(p.k, 2)}};
    std::vector<ABK> out;
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b)
        for (int k = 1; k <= 3; ++k) out.push_back({a, b, k});
    if (pr == Profile::Full)
      for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) out.push_back({a, b, 4});
    return out;
  };
  add("cor6.4", "odd staircase RPP gf as a shifted E* determinant", "RPP gf of delta_{n+2k+1}/delta_n",
      [odd_sweep](const RunParams& p, Profile pr) {
        Sweep s;
        for (auto [n, k] : odd_sweep(p, pr)) s.add([&] { return cor64_check(n, k, pick(p.order, 15)); });
        return s.take();
      });
  add("cor6.5", "odd staircase pleasant count as 2^C(k+1,2) det(frak_s)", "p(delta_{n+2k+1}/delta_n), worked example",
      [odd_sweep](const RunParams& p, Profile pr) {
        Sweep s;
        if (!p.single_point()) s.add([] { return worked_example_report(); });
        for (auto [n, k] : odd_sweep(p, pr)) s.add([&] { return cor65_check(n, k); });
        return s.take();
      });
  add("cor6.6", "thick reverse hook RPP gf as a q-binomial determinant", "RPP gf of ((b+k)^{a+k})/(b^a)",
      [hook_sweep](const RunParams& p, Profile pr) {
        Sweep s;
        for (auto [a, b, k] : hook_sweep(p, pr)) s.add([&] { return cor66_check(a, b, k, pick(p.order, 15)); });
        return s.take();
      });
  add("cor6.7", "thick reverse hook pleasant count as 2^C(k,2) det", "p(((b+k)^{a+k})/(b^a))",
      [hook_sweep](const RunParams& p, Profile pr) {
        Sweep s;
        for (auto [a, b, k] : hook_sweep(p, pr)) s.add([&] { return cor67_check(a, b, k); });
        return s.take();
      });

  std::sort(e.begin(), e.end(), [](const RegistryEntry& x, const RegistryEntry& y) { return x.id < y.id; });
  return e;
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = build();
  return entries;
}

const RegistryEntry& find_entry(std::string_view id) {
  const auto& reg = registry();
  for (const auto& e : reg)
    if (e.id == id) return e;
  // tableN:rowK aliases, K counted in table order
  const auto colon = id.find(':');
  if (colon != std::string_view::npos && id.substr(colon + 1, 3) == "row") {
    const std::string table(id.substr(0, colon));
    int k = 0;
    try {
      k = std::stoi(std::string(id.substr(colon + 4)));
    } catch (const std::exception&) {
      k = 0;
    }
    std::vector<std::string> rows;
    if (table == "table1")
      for (const auto& r : table1_rows()) rows.push_back(r.id);
    if (table == "table2")
      for (const auto& r : tangent_rows()) rows.push_back(r.id);
    if (table == "table3")
      for (const auto& r : secant_rows()) rows.push_back(r.id);
    if (table == "table4")
      for (const auto& r : foata_table()) rows.push_back(r.id);
    if (k >= 1 && k <= static_cast<int>(rows.size())) return find_entry(table + ":" + rows[k - 1]);
  }
  throw Error(ErrorCode::UnknownIdentity, "no identity '" + std::string(id) + "' (see `qeuler list`)");
}

std::vector<IdentityReport> run_entry(const RegistryEntry& e, const RunParams& p, Profile profile) {
  return e.run(p, profile);
}

std::vector<IdentityReport> run_all(const RunParams& p, Profile profile) {
  std::vector<IdentityReport> out;
  for (const auto& e : registry()) {
    auto part = run_entry(e, p, profile);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace qeuler
