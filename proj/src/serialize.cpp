#include "serialize.hpp"

#include <cstdio>
#include <json.hpp>

namespace grassgb::serialize {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string seconds_text(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", seconds);
  return buf;
}

}  // namespace

std::string groebner_basis(const TowerConfig& cfg, Format format) {
  const BasisSet<Polynomial> basis = claimed_gb(cfg);
  if (format == Format::Json) {
    Json list = Json::array();
    for (const Polynomial& p : basis.polys()) list.push_back(to_string(p));
    return dump(Json{{"t", cfg.t()}, {"basis", list}});
  }
  std::string out;
  for (const Polynomial& p : basis.polys()) out += to_string(p) + "\n";
  return out;
}

std::string additive_basis(const TowerConfig& cfg, std::optional<std::uint64_t> degree,
                           Format format) {
  std::vector<std::pair<std::uint64_t, std::vector<ExtMonomial>>> slices;
  if (degree) {
    slices.emplace_back(*degree, basis_in_degree(cfg, *degree));
  } else {
    AdditiveBasis basis = grassgb::additive_basis(cfg);
    for (std::uint64_t d = 0; d < basis.by_degree.size(); ++d) {
      slices.emplace_back(d, std::move(basis.by_degree[d]));
    }
  }
  if (format == Format::Json) {
    Json degrees = Json::object();
    for (const auto& [d, slice] : slices) {
      Json list = Json::array();
      for (const ExtMonomial& m : slice) list.push_back(to_string(m));
      degrees[std::to_string(d)] = list;
    }
    return dump(Json{{"t", cfg.t()}, {"degrees", degrees}});
  }
  std::string out;
  for (const auto& [d, slice] : slices) {
    for (const ExtMonomial& m : slice) {
      if (!out.empty()) out += ", ";
      out += to_string(m);
    }
  }
  return out + "\n";
}

std::string betti(const TowerConfig& cfg, Format format) {
  const BettiTable table = betti_table(cfg);
  if (format == Format::Json) {
    return dump(Json{{"t", cfg.t()},
                     {"n", cfg.n()},
                     {"dimManifold", cfg.dim()},
                     {"totalDim", table.total()},
                     {"betti", table.dims}});
  }
  std::string out = "t=" + std::to_string(cfg.t()) + " n=" + std::to_string(cfg.n()) +
                    " dim=" + std::to_string(cfg.dim()) + " total=" + std::to_string(table.total()) +
                    "\n";
  out += "degree betti\n";
  for (std::size_t d = 0; d < table.dims.size(); ++d) {
    out += std::to_string(d) + " " + std::to_string(table.dims[d]) + "\n";
  }
  out += std::string("symmetry: ") + (table.is_symmetric() ? "pass" : "fail") + "\n";
  return out;
}

std::string report(const VerificationReport& report, Format format, bool with_timing) {
  const char* overall = report.passed() ? "pass" : "fail";
  if (format == Format::Json) {
    Json checks = Json::array();
    for (const CheckResult& c : report.checks) {
      Json entry{{"id", c.id}, {"t", c.t}, {"status", to_string(c.status)}};
      if (!c.witness.empty()) entry["witness"] = c.witness;
      if (with_timing) entry["seconds"] = c.seconds;
      checks.push_back(std::move(entry));
    }
    return dump(Json{{"suite", report.suite}, {"checks", checks}, {"status", overall}});
  }
  std::string out = "suite: " + report.suite + "\n";
  for (const CheckResult& c : report.checks) {
    out += std::string(to_string(c.status)) + " " + c.id + " t=" + std::to_string(c.t);
    if (with_timing) out += " " + seconds_text(c.seconds) + "s";
    if (!c.witness.empty()) out += ": " + c.witness;
    out += "\n";
  }
  out += std::string("status: ") + overall + "\n";
  return out;
}

}  // namespace grassgb::serialize
