#pragma once

// Command-line orchestration: a parsed RunConfig drives one of the pipelines
// and yields a report plus an exit code (0 all checks passed, 1 a check
// failed, 2 usage or feasibility error).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flagcoh/report.hpp"

namespace flagcoh {

struct RunConfig {
  /// roots, invariants, presentation, poincare, groebner, schubert, verify.
  std::string command;
  /// verify only: e8c, e8t-betti, toda, schubert-props, small-groups.
  std::string target;
  std::string type = "E8";
  std::string space = "E8C";
  /// groebner: presentation file used instead of --space.
  std::string input;
  /// presentation --emit.
  std::string emit;
  /// schubert --emit-basis: include classes and tables in the report.
  bool emit_basis = false;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> prime;
  std::string format = "text";
  std::string out;
  unsigned jobs = 1;
  /// Q or p.
  std::string coeff = "Q";
  std::optional<std::uint32_t> degree_cap;
  /// invariants --degree, verify toda --j.
  std::vector<std::uint32_t> degrees;
  std::optional<std::uint32_t> cutoff;
  /// schubert --cap.
  std::uint32_t cap = 4;
  /// schubert --basis-seed: top, staircase or dual.
  std::string basis_seed;
  /// Random trials per property in verify schubert-props.
  std::size_t trials = 100;
};

struct RunResult {
  int exit_code = 0;
  RunReport report;
  /// The report in the requested format.
  std::string rendered;
};

/// Runs the command. Never throws for library errors: they become exit 2
/// with an "error" entry in the report.
RunResult run(const RunConfig& config);

/// Writes a built-in presentation as JSON and re-reads it; throws Error if
/// the space is unknown or the re-read copy differs.
void emit_presentation(const std::string& space, const std::string& path);

struct ParsedArgs {
  std::optional<RunConfig> config;
  /// Set when parsing ended the run (help or a usage error).
  int exit_code = 0;
  std::string message;
};

/// Parses argv; env_seed is the FLAGCOH_SEED value, if any.
ParsedArgs parse_arguments(const std::vector<std::string>& args, const char* env_seed);

/// Full entry point: parse, run, write the report to --out or to out.
int main_entry(const std::vector<std::string>& args, const char* env_seed, std::ostream& out, std::ostream& err);

}  // namespace flagcoh
