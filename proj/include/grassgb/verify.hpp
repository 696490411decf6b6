#ifndef GRASSGB_VERIFY_HPP
#define GRASSGB_VERIFY_HPP

#include <cstdint>
#include <string_view>

#include "grassgb/groebner.hpp"
#include "grassgb/report.hpp"

namespace grassgb {

// Range each suite runs when no t_max is given. For the lemma suite the
// range is over the index i instead of t.
unsigned suite_default_t_max(std::string_view suite);

// Runs one suite ("gb", "spoly", "bounds", "lemma", "a2") or "all" for
// t = 2..t_max, or each suite's default range when t_max is 0. The lemma
// index stops at 12. Throws UsageError on an unknown suite name or when t_max
// exceeds the tower cap.
VerificationReport run_suite(std::string_view suite, unsigned t_max,
                             std::uint64_t budget = kDefaultReductionBudget);

}  // namespace grassgb

#endif  // GRASSGB_VERIFY_HPP
