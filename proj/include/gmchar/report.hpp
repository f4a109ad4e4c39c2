// report.hpp: the consistency-check suite.
#pragma once

#include <string>
#include <vector>

namespace gmchar {

struct CheckResult {
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
  bool warn = false;  // known discrepancy, reported but not a failure
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_pass = false;  // ignores warn entries

  long failures() const;
  long warnings() const;
};

// Runs every cross-check: dual-route characters, table reproduction
// against the independent closed forms, character-intersection
// crosschecks, GIT index identities and semigroup closed forms.  The two
// known discrepancies (the A_{5/6} prediction and the n-ribbon slope
// identification) come back as WARN entries.
Report run_crosscheck_suite();

}  // namespace gmchar
