#include "qeuler/report.hpp"

#include <string_view>

namespace qeuler {

void IdentityReport::add(std::string name, Value l, Value r, bool ok) {
  if (parts.empty()) {
    lhs = l;
    rhs = r;
    verdict = ok;
  } else {
    verdict = verdict && ok;
  }
  parts.push_back({std::move(name), std::move(l), std::move(r), ok});
}

void IdentityReport::add_series(std::string name, const QSeries& l, const QSeries& r) {
  const bool ok = eq_mod(l, r);
  add(std::move(name), l, r, ok);
}

void IdentityReport::add_poly(std::string name, const QSeries& l, const QSeries& r) {
  const bool ok = eq_mod(l, r);
  add(std::move(name), Poly{l}, Poly{r}, ok);
}

void IdentityReport::add_int(std::string name, const BigInt& l, const BigInt& r) {
  add(std::move(name), l, r, l == r);
}

void IdentityReport::add_flag(std::string name, bool ok, std::string detail) {
  Value d = detail.empty() ? Value{} : Value{std::move(detail)};
  add(std::move(name), d, Value{}, ok);
}

std::string value_to_string(const Value& v) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "-"; }
    std::string operator()(const QSeries& s) const { return s.to_string(); }
    std::string operator()(const Poly& p) const {
      std::string s = p.s.to_string();
      const auto cut = s.rfind(" + O(q^");
      return cut == std::string::npos ? s : s.substr(0, cut);
    }
    std::string operator()(const BigInt& z) const { return z.get_str(); }
    std::string operator()(const Rational& r) const { return r.get_str(); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace qeuler
