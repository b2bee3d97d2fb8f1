#pragma once

// The fixed list of theorem checks run against one instance, with the
// report they produce.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lgl/config.hpp"

namespace lgl {

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus status);

struct CheckRecord {
  int number = 0;
  std::string name;
  std::string anchor;
  CheckStatus status = CheckStatus::Skipped;
  // What was compared, or why the check was skipped or failed.
  std::string detail;
  // Items examined (elements, pairs, subgroups, ...).
  std::uint64_t count = 0;
  double runtime_ms = 0.0;
};

struct VerifyReport {
  std::string instance;
  std::uint64_t predicted_order = 0;
  std::optional<std::uint64_t> order;
  std::vector<CheckRecord> checks;

  bool ok() const;
  std::size_t tally(CheckStatus status) const;
  // Timing fields are omitted when with_timing is false, so two runs of the
  // same config compare equal.
  std::string text(bool with_timing = true) const;
  nlohmann::json to_json(bool with_timing = true) const;
};

struct CheckInfo {
  const char* name;
  const char* anchor;
};

// Name and anchor of every check, in report order.
const std::vector<CheckInfo>& check_catalogue();

// Runs every check. Enumeration past the cap skips the checks that need the
// multiplication table; any lgl::Error other than CapacityError inside a
// check fails that check only.
VerifyReport cmd_verify(const InstanceConfig& cfg);

}  // namespace lgl
