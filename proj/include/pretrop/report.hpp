#ifndef PRETROP_REPORT_HPP
#define PRETROP_REPORT_HPP

#include <string>

#include "pretrop/engine.hpp"
#include "pretrop/systems.hpp"

namespace pretrop {

// Exit codes of the command line tool; stable, documented in the README.
enum ExitCode {
  kExitOk = 0,
  kExitFailure = 1,
  kExitParseError = 2,
  kExitDimensionError = 3,
  kExitCheckMismatch = 4,
};

struct RunReport {
  std::string algorithm;  // "pruning" | "definitional"
  Provenance input;
  Options options;
  PretropismResult result;
  bool has_cost_bound = false;
  Int cost_bound_value;
  Int degree_sum_value;
  double wall_ms = 0.0;  // informational; excluded from determinism
};

/// Rays one per line, space-separated integers, lexicographic order.
std::string rays_to_text(const std::vector<IntVec>& rays);

/// Human-readable stats block (per level and totals).
std::string stats_to_text(const RunReport& report);

/// Machine-readable report; deterministic for fixed input and options
/// apart from the wall_ms field.
std::string report_to_json(const RunReport& report);

RunReport make_report(std::string algorithm, const Provenance& input,
                      const Options& options, PretropismResult result);

}  // namespace pretrop

#endif
