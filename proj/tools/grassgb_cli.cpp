// Command-line front end. Links only against the C interface.

#include <CLI11.hpp>
#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <string>

#include "grassgb/grassgb.h"

namespace {

constexpr int kExitUsage = GGB_ERR_USAGE;

// Failure carrying the exit status to return from main.
struct Exit {
  int code;
};

struct StringDeleter {
  void operator()(char* s) const { ggb_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct PolyDeleter {
  void operator()(ggb_poly* p) const { ggb_poly_free(p); }
};
using OwnedPoly = std::unique_ptr<ggb_poly, PolyDeleter>;

struct TowerDeleter {
  void operator()(ggb_tower* t) const { ggb_tower_free(t); }
};
using OwnedTower = std::unique_ptr<ggb_tower, TowerDeleter>;

struct ReportDeleter {
  void operator()(ggb_report* r) const { ggb_report_free(r); }
};
using OwnedReport = std::unique_ptr<ggb_report, ReportDeleter>;

void check(ggb_status status) {
  if (status == GGB_OK) return;
  std::cerr << "error: " << ggb_last_error() << "\n";
  throw Exit{static_cast<int>(status)};
}

std::string take(char* s) { return OwnedString(s).get(); }

std::string format_poly(const ggb_poly* p) {
  char* text = nullptr;
  check(ggb_poly_format(p, &text));
  return take(text);
}

ggb_format format_of(bool json) { return json ? GGB_FORMAT_JSON : GGB_FORMAT_TEXT; }

// GROEBNER_BUDGET overrides the reduction-step cap; 0 means the default.
std::uint64_t budget_from_env() {
  const char* raw = std::getenv("GROEBNER_BUDGET");
  if (!raw || !*raw) return 0;
  errno = 0;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (errno != 0 || *end != '\0' || value == 0 || raw[0] == '-') {
    std::cerr << "error: GROEBNER_BUDGET must be a positive integer, got '" << raw << "'\n";
    throw Exit{kExitUsage};
  }
  return value;
}

OwnedTower make_tower(unsigned t) {
  ggb_tower* tower = nullptr;
  check(ggb_tower_create(t, budget_from_env(), &tower));
  return OwnedTower(tower);
}

struct PolyArgs {
  std::optional<std::uint64_t> g;
  std::vector<unsigned> f;
  std::vector<unsigned> wbar;
};

int run_poly(const PolyArgs& args) {
  if (args.g) {
    ggb_poly* p = nullptr;
    check(ggb_poly_g(*args.g, &p));
    std::cout << format_poly(OwnedPoly(p).get()) << "\n";
  } else if (!args.f.empty()) {
    const OwnedTower tower = make_tower(args.f[0]);
    ggb_poly* p = nullptr;
    check(ggb_tower_f(tower.get(), args.f[1], &p));
    std::cout << format_poly(OwnedPoly(p).get()) << "\n";
  } else {
    char* text = nullptr;
    check(ggb_wbar(args.wbar[0], args.wbar[1], &text));
    std::cout << take(text) << "\n";
  }
  return 0;
}

int run_gb(unsigned t, bool verify, bool json) {
  const OwnedTower tower = make_tower(t);
  char* text = nullptr;
  check(ggb_tower_gb(tower.get(), format_of(json), &text));
  const std::string basis = take(text);
  if (!verify) {
    std::cout << basis;
    return 0;
  }
  ggb_report* raw = nullptr;
  check(ggb_verify_gb(tower.get(), &raw));
  const OwnedReport report(raw);
  check(ggb_report_render(report.get(), format_of(json), 0, &text));
  const std::string rendered = take(text);
  if (json) {
    auto out = nlohmann::ordered_json::parse(basis);
    out["verification"] = nlohmann::ordered_json::parse(rendered);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << basis << rendered;
  }
  return ggb_report_passed(report.get()) ? 0 : GGB_ERR_VERIFICATION;
}

int run_basis(unsigned t, std::optional<std::int64_t> degree, bool json) {
  const OwnedTower tower = make_tower(t);
  if (degree && (*degree < 0 || static_cast<std::uint64_t>(*degree) > ggb_tower_dim(tower.get()))) {
    std::cerr << "warning: degree " << *degree << " is outside [0, " << ggb_tower_dim(tower.get())
              << "]; the basis there is empty\n";
    if (*degree < 0) {
      // Negative degrees have no slice to render; print the empty result directly.
      if (json) {
        nlohmann::ordered_json out{{"t", t}, {"degrees", {{std::to_string(*degree), nlohmann::ordered_json::array()}}}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "\n";
      }
      return 0;
    }
  }
  char* text = nullptr;
  check(ggb_tower_basis(tower.get(), degree ? *degree : -1, format_of(json), &text));
  std::cout << take(text);
  return 0;
}

int run_betti(unsigned t, bool json) {
  const OwnedTower tower = make_tower(t);
  char* text = nullptr;
  check(ggb_tower_betti(tower.get(), format_of(json), &text));
  std::cout << take(text);
  return 0;
}

int run_sq(unsigned op, unsigned t, const std::string& input) {
  const OwnedTower tower = make_tower(t);
  ggb_poly* raw = nullptr;
  check(ggb_poly_parse(input.c_str(), t, &raw));
  const OwnedPoly x(raw);
  ggb_poly* result = nullptr;
  const ggb_status status = ggb_tower_sq(tower.get(), op, x.get(), &result);
  if (status == GGB_ERR_INDETERMINATE) {
    std::cout << "indeterminate\n";
    std::cerr << "note: " << ggb_last_error() << "\n";
    return GGB_ERR_INDETERMINATE;
  }
  check(status);
  std::cout << format_poly(OwnedPoly(result).get()) << "\n";
  return 0;
}

int run_verify(const std::string& suite, unsigned t_max, bool json, bool timing) {
  ggb_report* raw = nullptr;
  check(ggb_verify_run(suite.c_str(), t_max, budget_from_env(), &raw));
  const OwnedReport report(raw);
  char* text = nullptr;
  check(ggb_report_render(report.get(), format_of(json), timing ? 1 : 0, &text));
  std::cout << take(text);
  return ggb_report_passed(report.get()) ? 0 : GGB_ERR_VERIFICATION;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases and cohomology of oriented Grassmannians G~(2^t, 3) over GF(2)",
               "grassgb"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ggb_version()));

  PolyArgs poly_args;
  auto* poly = app.add_subcommand("poly", "Print g_r, f_i, or a dual Stiefel-Whitney polynomial");
  auto* g_opt = poly->add_option("--g", poly_args.g, "g_r for this r");
  auto* f_opt = poly->add_option("--f", poly_args.f, "f_i for tower parameter t: --f T I")->expected(2);
  auto* wbar_opt =
      poly->add_option("--wbar", poly_args.wbar, "degree-r part of 1/(1+w1+...+wk): --wbar R K")
          ->expected(2);
  g_opt->excludes(f_opt, wbar_opt);
  f_opt->excludes(wbar_opt);
  poly->require_option(1);

  unsigned t = 0;
  bool json = false;
  bool verify_flag = false;
  auto* gb = app.add_subcommand("gb", "Print the reduced Groebner basis {f_0, ..., f_{t-1}}");
  gb->add_option("--t", t, "tower parameter")->required();
  gb->add_flag("--verify", verify_flag, "recompute it with Buchberger's algorithm and compare");
  gb->add_flag("--json", json, "JSON output");

  std::optional<std::int64_t> degree;
  auto* basis = app.add_subcommand("basis", "Print the additive basis of the cohomology");
  basis->add_option("--t", t, "tower parameter")->required();
  basis->add_option("--degree", degree, "only this degree");
  basis->add_flag("--json", json, "JSON output");

  auto* betti = app.add_subcommand("betti", "Print the Betti numbers");
  betti->add_option("--t", t, "tower parameter")->required();
  betti->add_flag("--json", json, "JSON output");

  unsigned op = 0;
  std::string input;
  auto* sq = app.add_subcommand("sq", "Apply Sq^1 or Sq^2 to a class and print its normal form");
  sq->add_option("--op", op, "1 or 2")->required()->check(CLI::IsMember({1U, 2U}));
  sq->add_option("--t", t, "tower parameter")->required();
  sq->add_option("--input", input, "polynomial in a, w2, w3")->required();

  std::string suite = "all";
  unsigned t_max = 0;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "all, gb, spoly, bounds, lemma or a2")
      ->check(CLI::IsMember({"all", "gb", "spoly", "bounds", "lemma", "a2"}));
  verify->add_option("--t-max", t_max, "largest t (largest i for lemma); defaults per suite");
  verify->add_flag("--json", json, "JSON output");
  verify->add_flag("--timing", timing, "include wall time per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*poly) return run_poly(poly_args);
    if (*gb) return run_gb(t, verify_flag, json);
    if (*basis) return run_basis(t, degree, json);
    if (*betti) return run_betti(t, json);
    if (*sq) return run_sq(op, t, input);
    if (*verify) return run_verify(suite, t_max, json, timing);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return GGB_ERR_INTERNAL;
  }
  return kExitUsage;
}
