// Minimal pass/fail record shared by all verification routines: a named
// check with a human-readable witness for the first failure found.

#pragma once

#include <string>

namespace qsw {

struct CheckResult {
  bool pass = true;
  std::string name;
  std::string detail;  // first offending entry / counterexample, if any
};

}  // namespace qsw
