// Serialization of verification reports: one stable schema shared by every
// command-line suite, rendered as deterministic JSON or plain text.
//
// JSON field order is fixed:
//
//   {"suite": .., "version": .., "seed": ..,          <- envelope
//    "m": .., "n": .., ["m0": ..,] ["n_max": ..,] ["m0_ge_n": ..,]
//    "mode": "exact" | "modp", ["point": {"p": .., "c": ..},]
//    "checks": [{"name": .., "status": .., "expected": .., "actual": ..}, ..],
//    ["degeneracy_exhausted": ..,] "runtime_ms": ..}
//
// Optional fields appear iff the producing command sets them, so identical
// command + seed gives byte-identical output except for the honest wall
// time in runtime_ms.  Check rows are sorted by name.

#pragma once

#include "qsw/centralizer/centralizer.hpp"
#include "qsw/check.hpp"
#include "qsw/truncation/truncation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qsw {

inline constexpr const char* kReportVersion = "1.0.0";

/// One serializable verification report.
struct ReportDoc {
  std::string suite;
  std::uint64_t seed = 1;
  std::optional<int> m;
  std::optional<int> n;
  std::optional<int> m0;
  std::optional<int> n_max;
  std::optional<bool> m0_ge_n;
  Mode mode = Mode::kExact;
  std::optional<EvalPoint> point;
  std::optional<bool> degeneracy_exhausted;
  std::vector<DualityCheck> checks;
  long runtime_ms = 0;

  bool all_passed() const;  // no "fail" rows ("skipped" does not fail)
};

/// Convert plain CheckResult rows to report rows (expected = "pass",
/// actual = the detail/witness string), sorted by name.
std::vector<DualityCheck> to_rows(const std::vector<CheckResult>& results);

ReportDoc from_duality(const DualityReport& rep);
ReportDoc from_truncation(const TruncationReport& rep);

/// Deterministic two-space-indented JSON with the documented field order,
/// ending in a newline.
std::string to_json(const ReportDoc& doc);

/// Human-readable rendering: a header line, one "[status] name: actual"
/// line per check, and a summary line.
std::string to_text(const ReportDoc& doc);

}  // namespace qsw
