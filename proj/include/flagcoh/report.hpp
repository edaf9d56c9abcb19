#pragma once

// Structured outcome of a check. The payload is deterministic given the
// inputs and seed; wall time is kept apart so payloads can be compared
// byte for byte.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace flagcoh {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportFormat = "flagcoh-report/1";

/// Schwartz-Zippel bound for one random evaluation of a nonzero polynomial
/// of the given degree over Z/p.
struct FailureBound {
  std::uint64_t degree = 0;
  std::uint64_t prime = 0;
  std::uint64_t trials = 1;

  /// floor(log2(degree / prime)) + 1, an upper bound on log2 of the ratio.
  int per_trial_log2() const;
  Json to_json() const;
};

struct VerificationReport {
  std::string check;
  Json parameters = Json::object();
  Json results = Json::array();
  bool passed = true;
  std::optional<FailureBound> bound;
  double wall_seconds = 0;

  /// Marks the report failed when ok is false; returns ok.
  bool require(bool ok) {
    if (!ok) passed = false;
    return ok;
  }
  Json payload() const;
  std::string to_text() const;
};

/// Report document for a run: the payloads of all checks plus, separately,
/// their wall times.
struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<VerificationReport> checks;

  bool passed() const;
  Json payload() const;
  Json to_json() const;
  std::string to_text() const;
};

}  // namespace flagcoh
