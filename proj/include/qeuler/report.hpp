#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qeuler/qseries.hpp"

namespace qeuler {

/// A series known to be a polynomial of degree <= order (printed without
/// the O() tail).
struct Poly {
  QSeries s;
};

/// One side of a checked identity.
using Value = std::variant<std::monostate, QSeries, Poly, BigInt, Rational, std::string>;

/// A named comparison inside a report.
struct Part {
  std::string name;
  Value lhs;
  Value rhs;
  bool verdict = false;
};

using ParamValue = std::variant<long long, std::string>;

/// Verdict of an identity check. lhs/rhs mirror the first part; the verdict
/// is the conjunction over all parts (false when there are none).
struct IdentityReport {
  std::string id;
  std::map<std::string, ParamValue> params;
  int order = 0;
  bool verdict = false;
  Value lhs;
  Value rhs;
  std::vector<Part> parts;
  double runtime_ms = 0;

  IdentityReport() = default;
  IdentityReport(std::string id_, std::map<std::string, ParamValue> params_, int order_)
      : id(std::move(id_)), params(std::move(params_)), order(order_) {}

  /// Appends a comparison and updates verdict, lhs and rhs.
  void add(std::string name, Value l, Value r, bool ok);
  /// Series parts compare with eq_mod; integer and rational parts exactly.
  void add_series(std::string name, const QSeries& l, const QSeries& r);
  void add_poly(std::string name, const QSeries& l, const QSeries& r);
  void add_int(std::string name, const BigInt& l, const BigInt& r);
  void add_flag(std::string name, bool ok, std::string detail = {});
};

std::string value_to_string(const Value& v);

}  // namespace qeuler
