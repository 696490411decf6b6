#include "grassgb/report.hpp"

#include <algorithm>
#include <chrono>

#include "grassgb/errors.hpp"

namespace grassgb {

namespace {

// Suites in reporting order.
int suite_rank(const std::string& id) {
  static const char* const kSuites[] = {"gb", "spoly", "bounds", "lemma", "a2"};
  const std::string prefix = id.substr(0, id.find('.'));
  for (int i = 0; i < 5; ++i) {
    if (prefix == kSuites[i]) return i;
  }
  return 5;
}

}  // namespace

const char* to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "fail";
}

bool VerificationReport::passed() const noexcept {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

void VerificationReport::append(std::vector<CheckResult> more) {
  checks.insert(checks.end(), std::make_move_iterator(more.begin()),
                std::make_move_iterator(more.end()));
}

void VerificationReport::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckResult& x, const CheckResult& y) {
    const int sx = suite_rank(x.id);
    const int sy = suite_rank(y.id);
    if (sx != sy) return sx < sy;
    if (x.t != y.t) return x.t < y.t;
    return x.id < y.id;
  });
}

CheckResult run_check(std::string id, unsigned t,
                      const std::function<std::optional<std::string>()>& body) {
  CheckResult result{std::move(id), t, CheckStatus::Pass, {}, 0.0};
  const auto start = std::chrono::steady_clock::now();
  try {
    if (auto witness = body()) {
      result.status = CheckStatus::Fail;
      result.witness = std::move(*witness);
    }
  } catch (const VerificationFailure& e) {
    result.status = CheckStatus::Fail;
    result.witness = e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

CheckResult skipped_check(std::string id, unsigned t, std::string reason) {
  return {std::move(id), t, CheckStatus::Skip, std::move(reason), 0.0};
}

}  // namespace grassgb
