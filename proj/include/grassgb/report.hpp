#ifndef GRASSGB_REPORT_HPP
#define GRASSGB_REPORT_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace grassgb {

enum class CheckStatus { Pass, Fail, Skip };

const char* to_string(CheckStatus status) noexcept;

struct CheckResult {
  std::string id;     // "<suite>.<check>", e.g. "gb.buchberger"
  unsigned t = 0;     // tower parameter (the index i for the lemma suite)
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // empty unless the check failed or was skipped
  double seconds = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
  void append(std::vector<CheckResult> more);
  // Stable sort by (suite, t, check id).
  void sort();
};

// Runs one check and times it. The body returns std::nullopt on success or a
// witness string on failure; a VerificationFailure thrown from the body is
// also recorded as a failure. Other exceptions propagate.
CheckResult run_check(std::string id, unsigned t,
                      const std::function<std::optional<std::string>()>& body);

CheckResult skipped_check(std::string id, unsigned t, std::string reason);

}  // namespace grassgb

#endif  // GRASSGB_REPORT_HPP
