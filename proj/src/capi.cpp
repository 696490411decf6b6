#include "grassgb/grassgb.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "grassgb/grassmann.hpp"
#include "grassgb/steenrod.hpp"
#include "grassgb/verify.hpp"
#include "serialize.hpp"

using namespace grassgb;

struct ggb_poly {
  std::variant<Polynomial, ExtPolynomial> value;
};

struct ggb_tower {
  TowerConfig cfg;
  std::uint64_t budget;
  std::shared_ptr<const CohomologyRing> ring;
};

struct ggb_report {
  VerificationReport report;
};

namespace {

thread_local std::string last_error;

ggb_status fail(ggb_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
ggb_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return GGB_OK;
  } catch (const VerificationFailure& e) {
    return fail(GGB_ERR_VERIFICATION, e.what());
  } catch (const ResourceError& e) {
    return fail(GGB_ERR_RESOURCE, e.what());
  } catch (const IndeterminateResult& e) {
    return fail(GGB_ERR_INDETERMINATE, e.what());
  } catch (const ContractError& e) {
    return fail(GGB_ERR_INTERNAL, e.what());
  } catch (const Error& e) {
    // Usage, parse, domain, overflow and zero-polynomial errors all stem from
    // the caller's input.
    return fail(GGB_ERR_USAGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GGB_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(GGB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GGB_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

serialize::Format to_format(ggb_format format) {
  switch (format) {
    case GGB_FORMAT_TEXT: return serialize::Format::Text;
    case GGB_FORMAT_JSON: return serialize::Format::Json;
  }
  throw UsageError("unknown output format");
}

template <class T>
void require(const T* p, const char* name) {
  if (!p) throw UsageError(std::string(name) + " must not be NULL");
}

ExtPolynomial as_ext(const ggb_poly& p, unsigned t) {
  if (const auto* plain = std::get_if<Polynomial>(&p.value)) return ExtPolynomial::lift(*plain, t);
  const auto& ext = std::get<ExtPolynomial>(p.value);
  if (ext.t() != t) {
    throw DomainMismatchError("polynomial parsed for t=" + std::to_string(ext.t()) +
                              " used with t=" + std::to_string(t));
  }
  return ext;
}

ggb_poly* wrap(CohClass x) { return new ggb_poly{x.value()}; }

}  // namespace

extern "C" {

const char* ggb_version(void) { return "1.0.0"; }

const char* ggb_last_error(void) { return last_error.c_str(); }

const char* ggb_status_name(ggb_status status) {
  switch (status) {
    case GGB_OK: return "ok";
    case GGB_ERR_VERIFICATION: return "verification failure";
    case GGB_ERR_USAGE: return "usage error";
    case GGB_ERR_RESOURCE: return "resource limit";
    case GGB_ERR_INDETERMINATE: return "indeterminate";
    case GGB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void ggb_string_free(char* s) { std::free(s); }

uint64_t ggb_default_budget(void) { return kDefaultReductionBudget; }

ggb_status ggb_poly_parse(const char* text, unsigned t, ggb_poly** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    if (t == 0) {
      *out = new ggb_poly{parse_polynomial(text)};
    } else {
      const TowerConfig cfg(t, kMaxTowerParameter);
      *out = new ggb_poly{parse_ext_polynomial(text, cfg.t())};
    }
  });
}

ggb_status ggb_poly_g(uint64_t r, ggb_poly** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ggb_poly{g_poly(r)};
  });
}

ggb_status ggb_poly_format(const ggb_poly* p, char** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = copy_string(std::visit([](const auto& v) { return to_string(v); }, p->value));
  });
}

int ggb_poly_is_zero(const ggb_poly* p) {
  if (!p) return 1;
  return std::visit([](const auto& v) { return v.is_zero() ? 1 : 0; }, p->value);
}

void ggb_poly_free(ggb_poly* p) { delete p; }

ggb_status ggb_wbar(unsigned r, unsigned k, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(to_string(wbar(r, k)));
  });
}

ggb_status ggb_tower_create(unsigned t, uint64_t budget, ggb_tower** out) {
  return guarded([&] {
    require(out, "out");
    const TowerConfig cfg(t);
    *out = new ggb_tower{cfg, budget ? budget : kDefaultReductionBudget, CohomologyRing::create(cfg)};
  });
}

void ggb_tower_free(ggb_tower* tower) { delete tower; }

unsigned ggb_tower_t(const ggb_tower* tower) { return tower ? tower->cfg.t() : 0; }

uint64_t ggb_tower_dim(const ggb_tower* tower) { return tower ? tower->cfg.dim() : 0; }

ggb_status ggb_tower_f(const ggb_tower* tower, unsigned i, ggb_poly** out) {
  return guarded([&] {
    require(tower, "tower");
    require(out, "out");
    if (i >= tower->cfg.t()) throw UsageError("f_i needs 0 <= i <= t - 1");
    *out = new ggb_poly{f_poly(tower->cfg, i)};
  });
}

ggb_status ggb_tower_gb(const ggb_tower* tower, ggb_format format, char** out) {
  return guarded([&] {
    require(tower, "tower");
    require(out, "out");
    *out = copy_string(serialize::groebner_basis(tower->cfg, to_format(format)));
  });
}

ggb_status ggb_tower_basis(const ggb_tower* tower, int64_t degree, ggb_format format, char** out) {
  return guarded([&] {
    require(tower, "tower");
    require(out, "out");
    std::optional<std::uint64_t> d;
    if (degree >= 0) d = static_cast<std::uint64_t>(degree);
    *out = copy_string(serialize::additive_basis(tower->cfg, d, to_format(format)));
  });
}

ggb_status ggb_tower_betti(const ggb_tower* tower, ggb_format format, char** out) {
  return guarded([&] {
    require(tower, "tower");
    require(out, "out");
    *out = copy_string(serialize::betti(tower->cfg, to_format(format)));
  });
}

ggb_status ggb_tower_normal_form(const ggb_tower* tower, const ggb_poly* x, ggb_poly** out) {
  return guarded([&] {
    require(tower, "tower");
    require(x, "x");
    require(out, "out");
    *out = wrap(tower->ring->normal_form(as_ext(*x, tower->cfg.t())));
  });
}

ggb_status ggb_tower_sq(const ggb_tower* tower, unsigned j, const ggb_poly* x, ggb_poly** out) {
  return guarded([&] {
    require(tower, "tower");
    require(x, "x");
    require(out, "out");
    const CohClass cls = tower->ring->normal_form(as_ext(*x, tower->cfg.t()));
    *out = wrap(sq_on_coh(j, cls));
  });
}

ggb_status ggb_verify_gb(const ggb_tower* tower, ggb_report** out) {
  return guarded([&] {
    require(tower, "tower");
    require(out, "out");
    auto report = std::make_unique<ggb_report>();
    report->report.suite = "gb";
    report->report.append(verify_reduced_gb(tower->cfg, tower->budget));
    report->report.sort();
    *out = report.release();
  });
}

ggb_status ggb_verify_run(const char* suite, unsigned t_max, uint64_t budget, ggb_report** out) {
  return guarded([&] {
    require(suite, "suite");
    require(out, "out");
    *out = new ggb_report{run_suite(suite, t_max, budget ? budget : kDefaultReductionBudget)};
  });
}

int ggb_report_passed(const ggb_report* report) { return report && report->report.passed() ? 1 : 0; }

ggb_status ggb_report_render(const ggb_report* report, ggb_format format, int with_timing,
                             char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = copy_string(serialize::report(report->report, to_format(format), with_timing != 0));
  });
}

void ggb_report_free(ggb_report* report) { delete report; }

}  // extern "C"
