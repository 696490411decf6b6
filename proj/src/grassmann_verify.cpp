#include <sstream>

#include "grassgb/grassmann.hpp"

namespace grassgb {

namespace {

Monomial w2_pow(std::uint64_t e) { return {static_cast<Exponent>(e), 0}; }
Monomial w3_pow(std::uint64_t e) { return {0, static_cast<Exponent>(e)}; }
std::uint64_t pow2(unsigned e) { return std::uint64_t{1} << e; }

std::string describe(const BasisSet<Polynomial>& basis) {
  std::string out = "{";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i) out += ", ";
    out += to_string(basis[i]);
  }
  return out + "}";
}

// f_0, ..., f_t; f_t is expected to vanish.
std::vector<Polynomial> f_family(const TowerConfig& cfg) {
  std::vector<Polynomial> fs;
  for (unsigned i = 0; i <= cfg.t(); ++i) fs.push_back(f_poly(cfg, i));
  return fs;
}

}  // namespace

std::vector<CheckResult> verify_reduced_gb(const TowerConfig& cfg, std::uint64_t budget_limit) {
  const unsigned t = cfg.t();
  std::vector<CheckResult> out;
  const BasisSet<Polynomial> claimed = claimed_gb(cfg);

  out.push_back(run_check("gb.buchberger", t, [&]() -> std::optional<std::string> {
    ReductionBudget budget(budget_limit);
    const BasisSet<Polynomial> generators({g_poly(cfg.n() - 2), g_poly(cfg.n() - 1)});
    const BasisSet<Polynomial> reduced = reduce_gb(buchberger(generators, budget), budget);
    if (same_members(reduced, claimed)) return std::nullopt;
    return "engine produced " + describe(reduced) + ", expected " + describe(claimed);
  }));

  out.push_back(run_check("gb.groebner", t, [&]() -> std::optional<std::string> {
    const GroebnerCheck check = is_groebner(claimed);
    if (check) return std::nullopt;
    return "S(f" + std::to_string(check.witness->i) + ",f" + std::to_string(check.witness->j) +
           ") reduces to " + check.witness->normal_form;
  }));

  out.push_back(run_check("gb.reduced", t, [&]() -> std::optional<std::string> {
    const auto& lms = claimed.leading_monomials();
    for (std::size_t i = 0; i < claimed.size(); ++i) {
      for (std::size_t j = 0; j < claimed.size(); ++j) {
        if (i == j) continue;
        for (const Monomial& m : claimed[j].terms()) {
          if (divides(lms[i], m)) {
            return "LM(f" + std::to_string(i) + ") divides " + to_string(m) + " in f" +
                   std::to_string(j);
          }
        }
      }
      if (i + 1 < claimed.size() && !(lms[i] > lms[i + 1])) {
        return "leading monomials not strictly decreasing at i=" + std::to_string(i);
      }
    }
    return std::nullopt;
  }));
  return out;
}

std::vector<CheckResult> verify_leading_monomials(const TowerConfig& cfg) {
  const unsigned t = cfg.t();
  std::vector<CheckResult> out;
  out.push_back(run_check("gb.leading_monomials", t, [&]() -> std::optional<std::string> {
    for (unsigned i = 0; i < t; ++i) {
      const Polynomial f = f_poly(cfg, i);
      if (f.is_zero()) return "f" + std::to_string(i) + " vanishes";
      if (f.leading() != lm_f_closed_form(cfg, i)) {
        return "LM(f" + std::to_string(i) + ") = " + to_string(f.leading()) + ", expected " +
               to_string(lm_f_closed_form(cfg, i));
      }
    }
    const Polynomial top = f_poly(cfg, t - 1);
    if (top != Polynomial(w3_pow(cfg.n() / 2 - 1))) {
      return "f" + std::to_string(t - 1) + " = " + to_string(top);
    }
    return std::nullopt;
  }));
  out.push_back(run_check("gb.vanishing", t, [&]() -> std::optional<std::string> {
    if (const Polynomial g = g_poly(cfg.n() - 3); !g.is_zero()) {
      return "g_{n-3} = " + to_string(g);
    }
    if (g_poly(cfg.n()) != g_poly(cfg.n() - 2) * w2_pow(1)) return "g_n != w2 g_{n-2}";
    return std::nullopt;
  }));
  return out;
}

std::vector<CheckResult> verify_spoly_identities(const TowerConfig& cfg) {
  const unsigned t = cfg.t();
  const std::vector<Polynomial> f = f_family(cfg);
  std::vector<CheckResult> out;

  out.push_back(run_check("spoly.top_vanishes", t, [&]() -> std::optional<std::string> {
    if (f[t].is_zero()) return std::nullopt;
    return "f_t = " + to_string(f[t]);
  }));

  out.push_back(run_check("spoly.consecutive", t, [&]() -> std::optional<std::string> {
    for (unsigned i = 0; i + 2 <= t; ++i) {
      const Polynomial lhs = f[i] * w3_pow(pow2(i)) + f[i + 1] * w2_pow(pow2(i));
      if (lhs != f[i + 2]) return "w3^(2^i) f_i + w2^(2^i) f_(i+1) != f_(i+2) at i=" + std::to_string(i);
    }
    return std::nullopt;
  }));

  out.push_back(run_check("spoly.adjacent", t, [&]() -> std::optional<std::string> {
    for (unsigned i = 0; i + 2 <= t; ++i) {
      if (s_polynomial(f[i], f[i + 1]) != f[i + 2]) {
        return "S(f_i, f_(i+1)) != f_(i+2) at i=" + std::to_string(i);
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("spoly.shift", t, [&]() -> std::optional<std::string> {
    for (unsigned i = 0; i + 2 <= t; ++i) {
      for (unsigned j = i; j + 2 <= t; ++j) {
        const Polynomial lhs = s_polynomial(f[i], f[j + 1]);
        const Polynomial rhs =
            s_polynomial(f[i], f[j]) * w3_pow(pow2(j)) + f[j + 2] * w2_pow(pow2(j) - pow2(i));
        if (lhs != rhs) {
          return "S(f_i, f_(j+1)) mismatch at (i,j)=(" + std::to_string(i) + "," +
                 std::to_string(j) + ")";
        }
      }
    }
    return std::nullopt;
  }));

  // S(f_i, f_j) as a combination of f_k, i + 2 <= k <= j + 1.
  auto expansion_term = [&](unsigned i, unsigned j, unsigned k) {
    return f[k] * Monomial{static_cast<Exponent>(pow2(k - 2) - pow2(i)),
                           static_cast<Exponent>(pow2(j) - pow2(k - 1))};
  };

  out.push_back(run_check("spoly.expansion", t, [&]() -> std::optional<std::string> {
    for (unsigned i = 0; i < t; ++i) {
      for (unsigned j = i + 1; j < t; ++j) {
        Polynomial rhs;
        for (unsigned k = i + 2; k <= j + 1; ++k) rhs += expansion_term(i, j, k);
        if (s_polynomial(f[i], f[j]) != rhs) {
          return "expansion of S(f_i, f_j) fails at (i,j)=(" + std::to_string(i) + "," +
                 std::to_string(j) + ")";
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("spoly.lm_bound", t, [&]() -> std::optional<std::string> {
    for (unsigned i = 0; i < t; ++i) {
      const Monomial bound = w2_pow(cfg.n() / 2 - pow2(i) - 1);
      for (unsigned j = i + 1; j < t; ++j) {
        const Monomial u = lcm(f[i].leading(), f[j].leading());
        if (!(bound < u)) return "bound not below lcm at (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
        for (unsigned k = i + 2; k <= j + 1; ++k) {
          const Polynomial term = expansion_term(i, j, k);
          if (!term.is_zero() && !(term.leading() < bound)) {
            return "summand k=" + std::to_string(k) + " of S(f_" + std::to_string(i) + ", f_" +
                   std::to_string(j) + ") has LM " + to_string(term.leading());
          }
        }
      }
    }
    return std::nullopt;
  }));
  return out;
}

std::vector<CheckResult> verify_bounds(const TowerConfig& cfg) {
  const unsigned t = cfg.t();
  std::vector<CheckResult> out;

  out.push_back(run_check("bounds.low_degrees", t, [&]() -> std::optional<std::string> {
    // Smallest degree of a basis element containing a.
    std::uint64_t lowest = UINT64_MAX;
    for (std::uint64_t d = 0; d <= cfg.dim() && lowest == UINT64_MAX; ++d) {
      for (const ExtMonomial& m : basis_in_degree(cfg, d)) {
        if (m.r == 1) lowest = d;
      }
    }
    if (lowest != cfg.a_degree()) return "lowest a-class in degree " + std::to_string(lowest);
    return std::nullopt;
  }));

  out.push_back(run_check("bounds.high_degrees", t, [&]() -> std::optional<std::string> {
    const std::uint64_t expected = 2 * cfg.n() - 8;
    const std::uint64_t top = max_w_only_degree(cfg);
    if (top != expected) {
      return "top degree without a is " + std::to_string(top) + ", expected " +
             std::to_string(expected);
    }
    for (std::uint64_t d = expected + 1; d <= cfg.dim(); ++d) {
      for (const ExtMonomial& m : basis_in_degree(cfg, d)) {
        if (m.r == 0) return "basis element " + to_string(m) + " above the bound";
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("bounds.w3_height", t, [&]() -> std::optional<std::string> {
    const auto ring = CohomologyRing::create(cfg);
    const std::uint64_t height = cfg.n() / 2 - 2;
    if (!ring->normal_form(Polynomial(w3_pow(height + 1))).is_zero()) {
      return "w3^" + std::to_string(height + 1) + " survives";
    }
    const CohClass top = ring->normal_form(Polynomial(w3_pow(height)));
    if (top.is_zero() || top.w_part() != Polynomial(w3_pow(height))) {
      return "w3^" + std::to_string(height) + " is not a nonzero normal form";
    }
    return std::nullopt;
  }));

  out.push_back(run_check("bounds.a_square", t, [&]() -> std::optional<std::string> {
    const auto ring = CohomologyRing::create(cfg);
    if ((ring->a() * ring->a()).is_zero()) return std::nullopt;
    return "a^2 has a nonzero normal form";
  }));
  return out;
}

std::vector<CheckResult> verify_additive_basis(const TowerConfig& cfg) {
  const unsigned t = cfg.t();
  std::vector<CheckResult> out;

  out.push_back(run_check("bounds.basis_standard", t, [&]() -> std::optional<std::string> {
    const BasisSet<ExtPolynomial> ext = extended_gb(cfg);
    // A few degrees past the top as well: the quotient must vanish there.
    for (std::uint64_t d = 0; d <= cfg.dim() + 6; ++d) {
      const std::vector<ExtMonomial> basis = basis_in_degree(cfg, d);
      if (basis != standard_monomials(ext, d)) {
        return "degree " + std::to_string(d) + " differs from the standard monomials";
      }
      for (const ExtMonomial& m : basis) {
        if (!in_additive_basis(cfg, m)) return to_string(m) + " fails the membership test";
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("bounds.basis_count", t, [&]() -> std::optional<std::string> {
    std::uint64_t count = 0;
    for (std::uint64_t d = 0; d <= cfg.dim(); ++d) count += basis_in_degree(cfg, d).size();
    if (count != cfg.basis_size()) {
      return "counted " + std::to_string(count) + ", expected " + std::to_string(cfg.basis_size());
    }
    return std::nullopt;
  }));

  out.push_back(run_check("bounds.betti_duality", t, [&]() -> std::optional<std::string> {
    const BettiTable table = betti_table(cfg);
    if (table.dims.front() != 1 || table.dims.back() != 1) return "ends of the table are not 1";
    if (!table.is_symmetric()) return "table is not symmetric under j -> dim - j";
    if (table.total() != cfg.basis_size()) return "table total " + std::to_string(table.total());
    return std::nullopt;
  }));
  return out;
}

LemmaScan check_lower_bound_lemma(unsigned i, std::uint64_t s_max) {
  if (i > 12) throw UsageError("the lemma scan supports i <= 12");
  if (s_max > (std::uint64_t{1} << 20)) throw UsageError("s_max is limited to 2^20");
  LemmaScan scan{i, s_max, 0, std::nullopt};
  const std::uint64_t c_min = pow2(i) - 1;
  for (std::uint64_t s = 1; s <= s_max; ++s) {
    if (pow2(i) * s < 3) continue;
    const std::uint64_t total = pow2(i) * s - 3;
    for (std::uint64_t c = 0; 3 * c <= total; ++c) {
      if ((total - 3 * c) % 2 != 0) continue;
      const std::uint64_t b = (total - 3 * c) / 2;
      if (binom_mod2(b + c, c) == 0) continue;
      ++scan.cases;
      if (c < c_min && !scan.counterexample) scan.counterexample = LemmaScan::Counterexample{b, c, s};
    }
  }
  return scan;
}

}  // namespace grassgb
