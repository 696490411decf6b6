#include "grassgb/verify.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "grassgb/grassmann.hpp"
#include "grassgb/steenrod.hpp"

namespace grassgb {

namespace {

constexpr std::uint64_t kLemmaSMax = 64;
constexpr unsigned kLemmaMaxIndex = 12;

struct SuiteSpec {
  std::string_view name;
  unsigned default_t_max;
};

constexpr std::array<SuiteSpec, 5> kSuites{{
    {"gb", 8},
    {"spoly", 12},
    {"bounds", 12},
    {"lemma", 10},
    {"a2", 10},
}};

void run_one(std::string_view suite, unsigned t_max, std::uint64_t budget,
             VerificationReport& report) {
  unsigned top = t_max == 0 ? suite_default_t_max(suite) : t_max;
  if (suite == "lemma") {
    top = std::min(top, kLemmaMaxIndex);
    for (unsigned i = 0; i <= top; ++i) {
      report.checks.push_back(run_check("lemma.lower_bound", i, [i]() -> std::optional<std::string> {
        const LemmaScan scan = check_lower_bound_lemma(i, kLemmaSMax);
        if (!scan.counterexample) return std::nullopt;
        const auto& ce = *scan.counterexample;
        return "b=" + std::to_string(ce.b) + " c=" + std::to_string(ce.c) + " s=" + std::to_string(ce.s);
      }));
    }
    return;
  }
  for (unsigned t = 2; t <= top; ++t) {
    const TowerConfig cfg(t);
    if (suite == "gb") {
      report.append(verify_reduced_gb(cfg, budget));
      report.append(verify_leading_monomials(cfg));
    } else if (suite == "spoly") {
      report.append(verify_spoly_identities(cfg));
    } else if (suite == "bounds") {
      report.append(verify_bounds(cfg));
      report.append(verify_additive_basis(cfg));
    } else if (t == 2) {
      report.checks.push_back(skipped_check("a2.kernel", t, "no candidate monomials at t=2"));
    } else {
      report.append(verify_a2_zero(cfg));
    }
  }
}

}  // namespace

unsigned suite_default_t_max(std::string_view suite) {
  for (const SuiteSpec& s : kSuites) {
    if (s.name == suite) return s.default_t_max;
  }
  throw UsageError("unknown suite '" + std::string(suite) +
                   "'; expected all, gb, spoly, bounds, lemma or a2");
}

VerificationReport run_suite(std::string_view suite, unsigned t_max, std::uint64_t budget) {
  VerificationReport report;
  report.suite = std::string(suite);
  if (t_max > kDefaultTowerCap) {
    throw UsageError("t-max must be at most " + std::to_string(kDefaultTowerCap) + ", got " +
                     std::to_string(t_max));
  }
  if (suite == "all") {
    for (const SuiteSpec& s : kSuites) run_one(s.name, t_max, budget, report);
  } else {
    suite_default_t_max(suite);  // validates the name
    run_one(suite, t_max, budget, report);
  }
  report.sort();
  return report;
}

}  // namespace grassgb
