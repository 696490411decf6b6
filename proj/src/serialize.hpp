#ifndef GRASSGB_SRC_SERIALIZE_HPP
#define GRASSGB_SRC_SERIALIZE_HPP

// Text and JSON renderings used by the C interface.

#include <cstdint>
#include <optional>
#include <string>

#include "grassgb/grassmann.hpp"
#include "grassgb/report.hpp"

namespace grassgb::serialize {

enum class Format { Text, Json };

// Text: one polynomial per line. JSON: {"t", "basis": [...]}.
std::string groebner_basis(const TowerConfig& cfg, Format format);

// Text: monomials joined by ", " in degree order (decreasing lex within a
// degree). JSON: {"t", "degrees": {"<j>": [...]}}; a single degree outside
// [0, dim] gives an empty list.
std::string additive_basis(const TowerConfig& cfg, std::optional<std::uint64_t> degree,
                           Format format);

// Text: a header, one "degree dim" line per degree, and a symmetry line.
// JSON: {"t", "n", "dimManifold", "totalDim", "betti": [...]}.
std::string betti(const TowerConfig& cfg, Format format);

// Text: one line per check and a final status line. JSON:
// {"suite", "checks": [{"id", "t", "status", "witness"?, "seconds"?}], "status"}.
std::string report(const VerificationReport& report, Format format, bool with_timing);

}  // namespace grassgb::serialize

#endif  // GRASSGB_SRC_SERIALIZE_HPP
