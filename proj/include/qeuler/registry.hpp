#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qeuler/report.hpp"

namespace qeuler {

/// Flags forwarded to an identity check. Unset fields fall back to the
/// entry's sweep; setting any of n, k, a, b, shape runs a single point.
struct RunParams {
  std::optional<int> n, k, a, b;
  std::optional<int> order;   // q-order
  std::optional<int> xorder;  // x-order of continued fractions
  std::optional<int> cap;     // largest size visited by a sweep
  std::optional<std::string> shape;
  std::optional<std::string> scheme;  // VAL_COUNT | MPP_RPP

  bool single_point() const { return n || k || a || b || shape; }
};

enum class Profile { Quick, Full };
Profile parse_profile(std::string_view text);

struct RegistryEntry {
  std::string id;
  std::string anchor;   // where the identity lives in the source text
  std::string summary;  // one line
  std::function<std::vector<IdentityReport>(const RunParams&, Profile)> run;
};

/// All entries, sorted by id.
const std::vector<RegistryEntry>& registry();
/// Exact id, or a "table2:rowN" style alias; throws UnknownIdentity.
const RegistryEntry& find_entry(std::string_view id);

/// Runs one entry; runtime_ms is filled per report.
std::vector<IdentityReport> run_entry(const RegistryEntry& e, const RunParams& p, Profile profile);
/// Every entry in id order.
std::vector<IdentityReport> run_all(const RunParams& p, Profile profile);

bool all_pass(const std::vector<IdentityReport>& reports);

}  // namespace qeuler
