// qeuler: verify identities, list the registry, and poke at the objects.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qeuler/cfrac.hpp"
#include "qeuler/error.hpp"
#include "qeuler/excited.hpp"
#include "qeuler/foata.hpp"
#include "qeuler/json_io.hpp"
#include "qeuler/lambda_paths.hpp"
#include "qeuler/registry.hpp"
#include "qeuler/tableaux.hpp"

using namespace qeuler;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct VerifyOpts {
  std::vector<std::string> ids;
  bool all = false;
  std::string profile = "quick";
  std::optional<int> n, k, a, b, order, xorder, cap;
  std::optional<std::string> shape, scheme;
  std::string format = "human";
  bool no_timing = false;
};

int run_verify(const VerifyOpts& o) {
  if (o.ids.empty() && !o.all) throw Error(ErrorCode::BadFlag, "verify needs --id or --all");
  if (!o.ids.empty() && o.all) throw Error(ErrorCode::BadFlag, "--id and --all are exclusive");
  const ReportFormat fmt = parse_report_format(o.format);
  const Profile profile = parse_profile(o.profile);
  RunParams p;
  p.n = o.n;
  p.k = o.k;
  p.a = o.a;
  p.b = o.b;
  p.order = o.order;
  p.xorder = o.xorder;
  p.cap = o.cap;
  p.shape = o.shape;
  p.scheme = o.scheme;

  // resolve every id before running anything
  std::vector<const RegistryEntry*> entries;
  for (const auto& id : o.ids) entries.push_back(&find_entry(id));

  std::vector<IdentityReport> reports;
  if (o.all) {
    reports = run_all(p, profile);
  } else {
    for (const auto* e : entries) {
      auto part = run_entry(*e, p, profile);
      reports.insert(reports.end(), part.begin(), part.end());
    }
  }
  std::cout << render_reports(reports, fmt, !o.no_timing);
  if (fmt == ReportFormat::Human && reports.size() > 1) {
    long long pass = 0;
    for (const auto& r : reports) pass += r.verdict ? 1 : 0;
    std::cout << pass << "/" << reports.size() << " passed\n";
  }
  return all_pass(reports) ? 0 : kExitFail;
}

int run_list(const std::string& format) {
  const ReportFormat fmt = parse_report_format(format);
  if (fmt == ReportFormat::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : registry()) arr.push_back({{"id", e.id}, {"anchor", e.anchor}, {"summary", e.summary}});
    std::cout << arr.dump(2) << '\n';
    return 0;
  }
  std::size_t width = 0;
  for (const auto& e : registry()) width = std::max(width, e.id.size());
  for (const auto& e : registry()) {
    if (fmt == ReportFormat::Tsv)
      std::cout << e.id << '\t' << e.anchor << '\t' << e.summary << '\n';
    else
      std::cout << e.id << std::string(width + 2 - e.id.size(), ' ') << e.anchor << '\n';
  }
  return 0;
}

int run_foata(const std::string& map, const std::string& input, bool inverse) {
  if (map == "f") {
    // the block map with the natural order; the last letter is the pivot
    const Permutation p = Permutation::parse(input);
    const Word w = inverse ? block_step_inverse(p.word(), OrderSpec::natural()) : block_step(p.word(), OrderSpec::natural());
    std::cout << word_to_string(w) << '\n';
    return 0;
  }
  const Permutation p = Permutation::parse(input);
  Permutation out;
  if (map == "FA") {
    out = inverse ? FA_inverse(p) : FA(p);
  } else if (map == "foata") {
    out = inverse ? foata_inverse(p) : foata(p);
  } else {
    const FoataConfig& cfg = foata_row(map);
    out = inverse ? F_mod_inverse(p, cfg) : F_mod(p, cfg);
  }
  std::cout << out.to_string() << '\n';
  return 0;
}

int run_tableaux_gf(const std::string& shape_text, const std::string& kind_text, int order, const std::string& mode) {
  const SkewShape shape = parse_shape(shape_text);
  const TableauKind kind = parse_tableau_kind(kind_text);
  if (mode != "oracle" && mode != "extension" && mode != "both")
    throw Error(ErrorCode::BadFlag, "--mode must be oracle, extension or both");
  std::optional<QSeries> oracle, ext;
  if (mode != "extension") oracle = tableau_gf(shape, kind, order, GfMode::Oracle);
  if (mode != "oracle") ext = tableau_gf(shape, kind, order, GfMode::Extension);
  std::cout << "shape " << shape.to_string() << "  kind " << to_string(kind) << "  cells " << shape.size() << '\n';
  if (oracle) std::cout << "oracle:    " << oracle->to_string() << '\n';
  if (ext) std::cout << "extension: " << ext->to_string() << '\n';
  if (oracle && ext) {
    const bool same = eq_mod(*oracle, *ext);
    std::cout << (same ? "agree" : "DISAGREE") << '\n';
    return same ? 0 : kExitFail;
  }
  return 0;
}

int run_pleasant(const std::string& shape_text) {
  const SkewShape shape = parse_shape(shape_text);
  std::cout << "shape " << shape.to_string() << "  cells " << shape.size() << '\n';
  std::vector<std::pair<std::string, BigInt>> counts;
  try {
    counts.emplace_back("definition", pleasant_count(shape, PleasantMethod::Definition));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
    std::cout << "definition: skipped (" << e.what() << ")\n";
  }
  try {
    counts.emplace_back("lambda-paths", pleasant_count_families(shape));
  } catch (const Error& e) {
    std::cout << "lambda-paths: skipped (" << e.what() << ")\n";
  }
  for (const auto& [name, c] : counts) std::cout << name << ": " << c.get_str() << '\n';
  bool agree = true;
  for (const auto& [name, c] : counts) agree = agree && c == counts.front().second;
  if (counts.size() > 1) std::cout << (agree ? "agree" : "DISAGREE") << '\n';
  return agree ? 0 : kExitFail;
}

int run_cfrac(const std::string& row_id, int n, int qorder) {
  const Table1Row& row = table1_row(row_id);
  const Table1Check c = table1_row_check(row, n, qorder);
  std::cout << "row " << row.id << "  quotient (" << row.quotient.A << "," << row.quotient.B << ")/(" << row.quotient.C
            << "," << row.quotient.D << ")  n=" << n << '\n';
  std::cout << "quotient: " << c.quotient.to_string() << '\n';
  if (c.normalized_tau) std::cout << "M/(q;q):  " << c.normalized_tau->to_string() << '\n';
  if (c.cf) std::cout << "cf:       " << c.cf->to_string() << '\n';
  std::cout << (c.ok ? "agree" : "DISAGREE") << '\n';
  return c.ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of q-Euler, tableau and lattice path identities"};
  app.require_subcommand(1);

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "run identity checks and print reports");
  verify->add_option("--id", vo.ids, "identity id (repeatable); see `list`");
  verify->add_flag("--all", vo.all, "every registered identity");
  verify->add_option("--profile", vo.profile, "sweep size: quick or full")->capture_default_str();
  verify->add_option("--n", vo.n, "n parameter");
  verify->add_option("--k", vo.k, "k parameter");
  verify->add_option("--a", vo.a, "a parameter (thick hooks)");
  verify->add_option("--b", vo.b, "b parameter (thick hooks)");
  verify->add_option("--order", vo.order, "q-order (default 20; tables default to 15)");
  verify->add_option("--xorder", vo.xorder, "x-order of continued fractions");
  verify->add_option("--cap", vo.cap, "largest size visited by a sweep");
  verify->add_option("--shape", vo.shape, "skew shape, e.g. d6/d2 or 4,4,3,3/2,1");
  verify->add_option("--scheme", vo.scheme, "weight scheme: VAL_COUNT or MPP_RPP");
  verify->add_option("--format", vo.format, "human, json or tsv")->capture_default_str();
  verify->add_flag("--no-timing", vo.no_timing, "write runtime_ms as 0 for reproducible output");

  std::string list_format = "human";
  auto* list = app.add_subcommand("list", "print the identity registry");
  list->add_option("--format", list_format, "human, json or tsv");

  std::string map = "FA", input;
  bool inverse = false;
  auto* foata_cmd = app.add_subcommand("foata", "apply a Foata-type map to a permutation");
  foata_cmd->add_option("--map", map, "FA, foata, f (block map) or a table4 row id")->capture_default_str();
  foata_cmd->add_option("--input", input, "one-line word, e.g. 317295486")->required();
  foata_cmd->add_flag("--inverse", inverse, "apply the inverse map");

  std::string shape_text, kind_text = "ssyt", mode = "oracle";
  int gf_order = 20;
  auto* tab = app.add_subcommand("tableaux", "tableau generating functions");
  tab->require_subcommand(1);
  auto* gf = tab->add_subcommand("gf", "size generating function of SSYT / RPP / ST");
  gf->add_option("--shape", shape_text, "skew shape")->required();
  gf->add_option("--kind", kind_text, "ssyt, rpp or st")->capture_default_str();
  gf->add_option("--order", gf_order, "q-order")->capture_default_str();
  gf->add_option("--mode", mode, "oracle, extension or both")->capture_default_str();

  std::string pleasant_shape;
  auto* pleasant = app.add_subcommand("pleasant", "count pleasant diagrams by two methods");
  pleasant->add_option("--shape", pleasant_shape, "skew shape")->required();

  std::string row = "ge-lt";
  int cf_n = 2, qorder = 20;
  auto* cfrac = app.add_subcommand("cfrac", "continued fraction table row at one n");
  cfrac->add_option("--row", row, "row id (see `list`, table1:*)")->capture_default_str();
  cfrac->add_option("--n", cf_n, "coefficient of x^{2n+1}")->capture_default_str();
  cfrac->add_option("--qorder", qorder, "q-order")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*verify) return run_verify(vo);
    if (*list) return run_list(list_format);
    if (*foata_cmd) return run_foata(map, input, inverse);
    if (*gf) return run_tableaux_gf(shape_text, kind_text, gf_order, mode);
    if (*pleasant) return run_pleasant(pleasant_shape);
    if (*cfrac) return run_cfrac(row, cf_n, qorder);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
