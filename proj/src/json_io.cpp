#include "qeuler/json_io.hpp"

#include <cstdio>
#include <sstream>

#include "qeuler/error.hpp"

namespace qeuler {

using nlohmann::json;

json series_to_json(const QSeries& s) {
  json coeffs = json::array();
  for (const Rational& c : s.coeffs()) coeffs.push_back(c.get_str());
  return json{{"order", s.order()}, {"coeffs", coeffs}};
}

QSeries series_from_json(const json& j) {
  try {
    const int order = j.at("order").get<int>();
    const auto& cs = j.at("coeffs");
    if (order < 0 || !cs.is_array() || static_cast<int>(cs.size()) != order + 1)
      throw Error(ErrorCode::ParseError, "series needs order+1 coefficients");
    std::vector<Rational> coeffs;
    for (const auto& c : cs) {
      Rational r;
      if (r.set_str(c.get<std::string>(), 10) != 0) throw Error(ErrorCode::ParseError, "bad coefficient");
      r.canonicalize();
      coeffs.push_back(r);
    }
    return QSeries(std::move(coeffs), order);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

json value_to_json(const Value& v) {
  struct Visitor {
    json operator()(std::monostate) const { return nullptr; }
    json operator()(const QSeries& s) const { return series_to_json(s); }
    json operator()(const Poly& p) const {
      json j = series_to_json(p.s);
      j["exact"] = true;
      return j;
    }
    json operator()(const BigInt& z) const { return z.get_str(); }
    json operator()(const Rational& r) const { return r.get_str(); }
    json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

namespace {

json params_json(const IdentityReport& r) {
  json p = json::object();
  for (const auto& [k, v] : r.params) {
    if (const auto* i = std::get_if<long long>(&v))
      p[k] = *i;
    else
      p[k] = std::get<std::string>(v);
  }
  return p;
}

std::string params_text(const IdentityReport& r) {
  std::string out;
  for (const auto& [k, v] : r.params) {
    if (!out.empty()) out += ' ';
    out += k + "=";
    if (const auto* i = std::get_if<long long>(&v))
      out += std::to_string(*i);
    else
      out += std::get<std::string>(v);
  }
  return out;
}

std::string ms_text(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

}  // namespace

json report_to_json(const IdentityReport& r, bool with_timing) {
  json parts = json::array();
  for (const auto& p : r.parts)
    parts.push_back({{"name", p.name}, {"verdict", p.verdict}, {"lhs", value_to_json(p.lhs)}, {"rhs", value_to_json(p.rhs)}});
  return json{{"id", r.id},
              {"params", params_json(r)},
              {"order", r.order},
              {"verdict", r.verdict},
              {"lhs", value_to_json(r.lhs)},
              {"rhs", value_to_json(r.rhs)},
              {"parts", parts},
              {"runtime_ms", with_timing ? r.runtime_ms : 0.0}};
}

ReportFormat parse_report_format(const std::string& text) {
  if (text == "human") return ReportFormat::Human;
  if (text == "json") return ReportFormat::Json;
  if (text == "tsv") return ReportFormat::Tsv;
  throw Error(ErrorCode::BadFlag, "--format must be human, json or tsv, not '" + text + "'");
}

std::string render_reports(const std::vector<IdentityReport>& reports, ReportFormat fmt, bool with_timing) {
  std::ostringstream out;
  switch (fmt) {
    case ReportFormat::Json: {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(report_to_json(r, with_timing));
      out << arr.dump(2) << '\n';
      break;
    }
    case ReportFormat::Tsv:
      out << "id\tparams\torder\tverdict\tlhs\trhs\truntime_ms\n";
      for (const auto& r : reports)
        out << r.id << '\t' << params_text(r) << '\t' << r.order << '\t' << (r.verdict ? "true" : "false") << '\t'
            << value_to_string(r.lhs) << '\t' << value_to_string(r.rhs) << '\t'
            << (with_timing ? ms_text(r.runtime_ms) : "0") << '\n';
      break;
    case ReportFormat::Human:
      for (const auto& r : reports) {
        out << (r.verdict ? "PASS " : "FAIL ") << r.id;
        if (!r.params.empty()) out << "  " << params_text(r);
        out << "  order=" << r.order;
        if (with_timing) out << "  (" << ms_text(r.runtime_ms) << " ms)";
        out << '\n';
        for (const auto& p : r.parts) {
          out << "    " << (p.verdict ? "ok   " : "FAIL ") << p.name;
          if (!std::holds_alternative<std::monostate>(p.lhs) || !std::holds_alternative<std::monostate>(p.rhs))
            out << ": lhs = " << value_to_string(p.lhs) << " ; rhs = " << value_to_string(p.rhs);
          out << '\n';
        }
      }
      break;
  }
  return out.str();
}

}  // namespace qeuler
