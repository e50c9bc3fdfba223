#include "qeuler/perm.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>

#include "qeuler/error.hpp"

namespace qeuler {

Permutation::Permutation(Word word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int x : word_) {
    if (x < 1 || x > n || seen[x]) throw Error(ErrorCode::NotInClass, "not a permutation: " + word_to_string(word_));
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  Word w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Word w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) w[c[i] - 1] = c[(i + 1) % c.size()];
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  Word w;
  const bool separated = text.find_first_of(", ") != std::string_view::npos;
  if (!separated) {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw Error(ErrorCode::ParseError, "bad permutation letter in '" + std::string(text) + "'");
      w.push_back(ch - '0');
    }
  } else {
    std::string cleaned(text);
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream in(cleaned);
    int x;
    while (in >> x) w.push_back(x);
    if (!in.eof()) throw Error(ErrorCode::ParseError, "bad permutation '" + std::string(text) + "'");
  }
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  Word w(word_.size());
  for (int i = 0; i < size(); ++i) w[word_[i] - 1] = i + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::operator*(const Permutation& s) const {
  if (s.size() != size()) throw Error(ErrorCode::IndexOutOfRange, "composing permutations of different sizes");
  Word w(word_.size());
  for (int i = 0; i < size(); ++i) w[i] = word_[s.word_[i] - 1];
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const { return word_to_string(word_); }

std::string word_to_string(const Word& w) {
  const bool small = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x <= 9; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!small && i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

std::vector<int> des_set(const Word& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> asc_set(const Word& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> ndes_set(const Word& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i + 1 == w.size() || w[i] <= w[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> nasc_set(const Word& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i + 1 == w.size() || w[i] >= w[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

int maj(const Word& w) {
  int s = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) s += static_cast<int>(i) + 1;
  return s;
}

int inv(const Word& w) {
  int s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++s;
  return s;
}

Word odd_subword(const Word& w) {
  Word out;
  for (std::size_t i = 0; i < w.size(); i += 2) out.push_back(w[i]);
  return out;
}

Word even_subword(const Word& w) {
  Word out;
  for (std::size_t i = 1; i < w.size(); i += 2) out.push_back(w[i]);
  return out;
}

StatBundle statistics(const Permutation& p) {
  const Word& w = p.word();
  return StatBundle{maj(w), inv(w), des_set(w), asc_set(w), ndes_set(w), nasc_set(w), odd_subword(w), even_subword(w)};
}

Permutation special_perm(SpecialKind kind, int n) {
  if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "special permutations need n >= 1");
  Word w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  const int first = kind == SpecialKind::Kappa ? 2 : 1;
  for (int a = first; a + 1 <= n; a += 2) std::swap(w[a - 1], w[a]);
  return Permutation(std::move(w));
}

std::string_view to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::Alt: return "Alt";
    case ClassKind::Ralt: return "Ralt";
    case ClassKind::AltInv: return "AltInv";
    case ClassKind::RaltInv: return "RaltInv";
    case ClassKind::All: return "All";
  }
  return "?";
}

bool is_alternating(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if ((i % 2 == 0) != (w[i] < w[i + 1])) return false;
  return true;
}

bool is_reverse_alternating(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if ((i % 2 == 0) != (w[i] > w[i + 1])) return false;
  return true;
}

bool in_class(const Permutation& p, ClassKind kind) {
  switch (kind) {
    case ClassKind::Alt: return is_alternating(p.word());
    case ClassKind::Ralt: return is_reverse_alternating(p.word());
    case ClassKind::AltInv: return is_alternating(p.inverse().word());
    case ClassKind::RaltInv: return is_reverse_alternating(p.inverse().word());
    case ClassKind::All: return true;
  }
  return false;
}

namespace {

// Backtracking over words with a prescribed up/down pattern; letters are
// tried in increasing order so output is lexicographic.
void zigzag(int n, bool first_up, Word& w, std::vector<bool>& used,
            const std::function<void(const Permutation&)>& fn) {
  const int k = static_cast<int>(w.size());
  if (k == n) {
    fn(Permutation(w));
    return;
  }
  for (int x = 1; x <= n; ++x) {
    if (used[x]) continue;
    if (k > 0) {
      const bool up = ((k - 1) % 2 == 0) == first_up;
      if (up != (w.back() < x)) continue;
    }
    used[x] = true;
    w.push_back(x);
    zigzag(n, first_up, w, used, fn);
    w.pop_back();
    used[x] = false;
  }
}

}  // namespace

void for_each_in_class(ClassKind kind, int n, const std::function<void(const Permutation&)>& fn, int cap) {
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "negative permutation size");
  if (n > cap)
    throw Error(ErrorCode::CapExceeded, "n = " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));
  switch (kind) {
    case ClassKind::Alt:
    case ClassKind::Ralt: {
      Word w;
      std::vector<bool> used(n + 1, false);
      zigzag(n, kind == ClassKind::Alt, w, used, fn);
      return;
    }
    case ClassKind::AltInv:
    case ClassKind::RaltInv: {
      std::vector<Permutation> out;
      for_each_in_class(kind == ClassKind::AltInv ? ClassKind::Alt : ClassKind::Ralt, n,
                        [&](const Permutation& p) { out.push_back(p.inverse()); }, cap);
      std::sort(out.begin(), out.end());
      for (const auto& p : out) fn(p);
      return;
    }
    case ClassKind::All: {
      Word w = Permutation::identity(n).word();
      do fn(Permutation(w));
      while (std::next_permutation(w.begin(), w.end()));
      return;
    }
  }
}

std::vector<Permutation> enumerate_class(ClassKind kind, int n, int cap) {
  std::vector<Permutation> out;
  for_each_in_class(kind, n, [&](const Permutation& p) { out.push_back(p); }, cap);
  return out;
}

Permutation reverse_complement(const Permutation& p) {
  const int n = p.size();
  Word w(n);
  for (int i = 0; i < n; ++i) w[i] = n + 1 - p.word()[n - 1 - i];
  return Permutation(std::move(w));
}

namespace {

constexpr std::array<std::pair<StatExpr, std::string_view>, 12> kExprNames{{
    {StatExpr::MajInv, "MAJ_INV"},
    {StatExpr::MajKappaInv, "MAJ_KAPPA_INV"},
    {StatExpr::MajEtaInv, "MAJ_ETA_INV"},
    {StatExpr::Inv, "INV"},
    {StatExpr::InvMinusNdesO, "INV_MINUS_NDES_O"},
    {StatExpr::InvMinusNdesE, "INV_MINUS_NDES_E"},
    {StatExpr::InvPlusNascO, "INV_PLUS_NASC_O"},
    {StatExpr::InvPlusNascE, "INV_PLUS_NASC_E"},
    {StatExpr::InvMinusAscO, "INV_MINUS_ASC_O"},
    {StatExpr::InvMinusAscE, "INV_MINUS_ASC_E"},
    {StatExpr::InvPlusDesO, "INV_PLUS_DES_O"},
    {StatExpr::InvPlusDesE, "INV_PLUS_DES_E"},
}};

}  // namespace

std::string_view to_string(StatExpr expr) {
  for (const auto& [e, name] : kExprNames)
    if (e == expr) return name;
  return "?";
}

StatExpr parse_stat_expr(std::string_view name) {
  for (const auto& [e, n] : kExprNames)
    if (n == name) return e;
  throw Error(ErrorCode::UnknownExpr, std::string(name));
}

std::vector<StatExpr> all_stat_exprs() {
  std::vector<StatExpr> out;
  for (const auto& [e, name] : kExprNames) out.push_back(e);
  return out;
}

int eval_stat_expr(const Permutation& p, StatExpr expr) {
  const Word& w = p.word();
  const int n = p.size();
  switch (expr) {
    case StatExpr::MajInv: return maj(p.inverse().word());
    case StatExpr::MajKappaInv: return n == 0 ? 0 : maj((kappa(n) * p.inverse()).word());
    case StatExpr::MajEtaInv: return n == 0 ? 0 : maj((eta(n) * p.inverse()).word());
    case StatExpr::Inv: return inv(w);
    case StatExpr::InvMinusNdesO: return inv(w) - ndes(odd_subword(w));
    case StatExpr::InvMinusNdesE: return inv(w) - ndes(even_subword(w));
    case StatExpr::InvPlusNascO: return inv(w) + nasc(odd_subword(w));
    case StatExpr::InvPlusNascE: return inv(w) + nasc(even_subword(w));
    case StatExpr::InvMinusAscO: return inv(w) - asc(odd_subword(w));
    case StatExpr::InvMinusAscE: return inv(w) - asc(even_subword(w));
    case StatExpr::InvPlusDesO: return inv(w) + des(odd_subword(w));
    case StatExpr::InvPlusDesE: return inv(w) + des(even_subword(w));
  }
  throw Error(ErrorCode::UnknownExpr, "unhandled expression");
}

QSeries series_from_exponents(const std::vector<int>& exponents, int order) {
  std::map<int, long> counts;
  for (int e : exponents) ++counts[e];
  if (!counts.empty() && counts.begin()->first < 0)
    throw Error(ErrorCode::NegativeExponent, "statistic took value " + std::to_string(counts.begin()->first));
  std::vector<Rational> c(order + 1, Rational(0));
  for (const auto& [e, m] : counts)
    if (e <= order) c[e] = m;
  return QSeries(std::move(c), order);
}

QSeries stat_sum(ClassKind kind, int n, StatExpr expr, int order, int cap) {
  std::vector<int> exps;
  for_each_in_class(kind, n, [&](const Permutation& p) { exps.push_back(eval_stat_expr(p, expr)); }, cap);
  return series_from_exponents(exps, order);
}

}  // namespace qeuler
