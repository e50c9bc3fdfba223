#include "qeuler/foata.hpp"

#include <set>

#include "qeuler/error.hpp"

namespace qeuler {

Word block_step(const Word& w, OrderSpec order) {
  const std::size_t k = w.size();
  if (k <= 1) return w;
  const int last = w[k - 1];
  const bool side = order.less(w[k - 2], last);
  Word out;
  out.reserve(k);
  std::size_t start = 0;
  for (std::size_t j = 0; j + 1 < k; ++j) {
    if (order.less(w[j], last) != side) continue;
    out.push_back(w[j]);
    out.insert(out.end(), w.begin() + start, w.begin() + j);
    start = j + 1;
  }
  out.push_back(last);
  return out;
}

Word block_step_inverse(const Word& v, OrderSpec order) {
  const std::size_t k = v.size();
  if (k <= 1) return v;
  const int last = v[k - 1];
  const bool side = order.less(v[0], last);
  Word out;
  out.reserve(k);
  std::size_t j = 0;
  while (j + 1 < k) {
    const int head = v[j];
    std::size_t e = j + 1;
    while (e + 1 < k && order.less(v[e], last) != side) ++e;
    out.insert(out.end(), v.begin() + j + 1, v.begin() + e);
    out.push_back(head);
    j = e;
  }
  out.push_back(last);
  return out;
}

namespace {

// Order used when appending v, given which letters came earlier.
OrderSpec step_order(const FoataConfig& cfg, int v, const std::vector<bool>& seen, int n) {
  if (cfg.uses_plain_foata() || v % 2 != cfg.trigger_parity) return OrderSpec::natural();
  const int d = v + cfg.absent_offset;
  if (d >= 1 && d <= n && seen[d]) return OrderSpec::natural();
  const int s = v + cfg.swap_offset;
  return s >= 1 ? OrderSpec::swap(s) : OrderSpec::natural();
}

void require_member(const Permutation& p, const FoataConfig& cfg) {
  if (cfg.cls != ClassKind::All && (p.size() % 2 == 1) != cfg.odd)
    throw Error(ErrorCode::NotInClass, p.to_string() + " has the wrong length parity for row " + cfg.id);
  if (!in_class(p, cfg.cls))
    throw Error(ErrorCode::NotInClass, p.to_string() + " is not in " + std::string(to_string(cfg.cls)));
}

Permutation run_forward(const Permutation& p, const FoataConfig& cfg) {
  const int n = p.size();
  if (n == 0) return p;
  std::vector<bool> seen(n + 1, false);
  Word w{p.at(1)};
  seen[p.at(1)] = true;
  for (int k = 2; k <= n; ++k) {
    const int v = p.at(k);
    const OrderSpec order = step_order(cfg, v, seen, n);
    w.push_back(v);
    w = block_step(w, order);
    seen[v] = true;
  }
  return Permutation(std::move(w));
}

Permutation run_backward(const Permutation& s, const FoataConfig& cfg) {
  const int n = s.size();
  if (n == 0) return s;
  Word w = s.word();
  Word pi(n);
  std::vector<bool> seen(n + 1, false);
  for (int x : w) seen[x] = true;
  for (int k = n; k >= 2; --k) {
    const int v = w.back();
    seen[v] = false;
    w = block_step_inverse(w, step_order(cfg, v, seen, n));
    pi[k - 1] = v;
    w.pop_back();
  }
  pi[0] = w.front();
  return Permutation(std::move(pi));
}

const FoataConfig kPlain{"all-plain", ClassKind::All, true, Twist::None, 0, 0, 0, StatExpr::MajInv, {StatExpr::Inv}};

std::vector<FoataConfig> build_table() {
  using S = StatExpr;
  std::vector<FoataConfig> rows;
  for (ClassKind cls : {ClassKind::AltInv, ClassKind::RaltInv}) {
    const bool alt = cls == ClassKind::AltInv;
    const std::string prefix = alt ? "altinv" : "raltinv";
    for (bool odd : {true, false}) {
      const std::string par = odd ? "odd" : "even";
      rows.push_back({prefix + "-" + par + "-plain", cls, odd, Twist::None, 0, 0, 0, S::MajInv, {S::Inv}});
      if (alt) {
        // C = 2i, D = 2i+2, order <_{2i}
        rows.push_back({prefix + "-" + par + "-kappa", cls, odd, Twist::Kappa, 0, +2, 0, S::MajKappaInv,
                        odd ? std::vector<S>{S::InvMinusNdesE} : std::vector<S>{S::InvMinusAscO, S::InvMinusAscE}});
        // C = 2i, D = 2i-2, order <_{2i-1}
        rows.push_back({prefix + "-" + par + "-eta", cls, odd, Twist::Eta, 0, -2, -1, S::MajEtaInv,
                        odd ? std::vector<S>{S::InvPlusNascE} : std::vector<S>{S::InvPlusNascO, S::InvPlusNascE}});
      } else {
        // C = 2i+1, D = 2i-1, order <_{2i}
        rows.push_back({prefix + "-" + par + "-kappa", cls, odd, Twist::Kappa, 1, -2, -1, S::MajKappaInv,
                        odd ? std::vector<S>{S::InvPlusDesO} : std::vector<S>{S::InvPlusDesO, S::InvPlusDesE}});
        // C = 2i-1, D = 2i+1, order <_{2i-1}
        rows.push_back({prefix + "-" + par + "-eta", cls, odd, Twist::Eta, 1, +2, 0, S::MajEtaInv,
                        odd ? std::vector<S>{S::InvMinusAscO} : std::vector<S>{S::InvMinusNdesO, S::InvMinusNdesE}});
      }
    }
  }
  return rows;
}

}  // namespace

Permutation foata(const Permutation& p) { return run_forward(p, kPlain); }
Permutation foata_inverse(const Permutation& s) { return run_backward(s, kPlain); }

const std::vector<FoataConfig>& foata_table() {
  static const std::vector<FoataConfig> rows = build_table();
  return rows;
}

const FoataConfig& foata_row(std::string_view id) {
  for (const auto& row : foata_table())
    if (row.id == id) return row;
  throw Error(ErrorCode::UnknownRow, "no modified Foata row '" + std::string(id) + "'");
}

const FoataConfig& fa_row() { return foata_row("altinv-odd-kappa"); }

Permutation F_mod(const Permutation& p, const FoataConfig& cfg) {
  require_member(p, cfg);
  return run_forward(p, cfg);
}

Permutation F_mod_inverse(const Permutation& s, const FoataConfig& cfg) {
  require_member(s, cfg);
  return run_backward(s, cfg);
}

int foata_a_stat(const Permutation& p, const FoataConfig& cfg) { return eval_stat_expr(p.inverse(), cfg.m_expr); }

int foata_b_stat(const Permutation& s, StatExpr which) {
  return eval_stat_expr(s.inverse(), which);
}

bool FoataRowCheck::ok() const {
  bool any = false;
  for (const auto& [e, t] : transport) any = any || t;
  return closed && injective && inverse_ok && any;
}

FoataRowCheck check_foata_row(const FoataConfig& cfg, int N) {
  if ((N % 2 == 1) != cfg.odd)
    throw Error(ErrorCode::NotInClass, "row " + cfg.id + " does not apply at length " + std::to_string(N));
  FoataRowCheck out;
  for (StatExpr e : cfg.i_exprs) out.transport.emplace_back(e, true);
  std::set<Word> images;
  for_each_in_class(cfg.cls, N, [&](const Permutation& p) {
    ++out.domain;
    const Permutation s = F_mod(p, cfg);
    if (!in_class(s, cfg.cls)) out.closed = false;
    if (!images.insert(s.word()).second) out.injective = false;
    if (F_mod_inverse(s, cfg) != p) out.inverse_ok = false;
    const int a = foata_a_stat(p, cfg);
    for (auto& [e, t] : out.transport) t = t && a == foata_b_stat(s, e);
  });
  return out;
}

}  // namespace qeuler
