#include "grassgb/steenrod.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace grassgb {

namespace {

constexpr Monomial kW2{1, 0};
constexpr Monomial kW3{0, 1};

void sq1_monomial(const Monomial& m, std::vector<Monomial>& out) {
  if (m.b % 2 == 0) return;
  out.push_back(Monomial{m.b - 1, 0} * Monomial{0, m.c} * kW3);
}

void sq2_monomial(const Monomial& m, std::vector<Monomial>& out) {
  if ((static_cast<std::uint64_t>(m.b) + m.c) % 2 == 1) out.push_back(m * kW2);
  if (m.b >= 2 && binom_mod2(m.b, 2)) {
    out.push_back(Monomial{m.b - 2, 0} * Monomial{0, m.c} * kW3 * kW3);
  }
}

template <class F>
Polynomial apply_termwise(const Polynomial& p, F&& on_monomial) {
  std::vector<Monomial> out;
  for (const Monomial& m : p.terms()) on_monomial(m, out);
  return Polynomial::from_terms(std::move(out));
}

// Memoized Sq^1 and Sq^2 on monomials via x = g y with g in {w2, w3}:
//   Sq^1(g y) = Sq^1(g) y + g Sq^1(y)
//   Sq^2(g y) = Sq^2(g) y + Sq^1(g) Sq^1(y) + g Sq^2(y)
class CartanOracle {
 public:
  CartanOracle() {
    // The only facts used about the generators.
    gen_sq1_[0] = Polynomial(kW3);
    gen_sq1_[1] = Polynomial{};
    gen_sq2_[0] = Polynomial(kW2 * kW2);
    gen_sq2_[1] = Polynomial(kW2 * kW3);
  }

  const std::pair<Polynomial, Polynomial>& squares(const Monomial& m) {
    // Peel generators until a cached monomial is reached, then fill upward.
    std::vector<Monomial> chain;
    Monomial cur = m;
    while (!cache_.count(cur)) {
      chain.push_back(cur);
      if (cur.is_one()) {
        cache_.emplace(cur, std::pair<Polynomial, Polynomial>{});
        chain.pop_back();
        break;
      }
      cur = quotient(cur, cur.b > 0 ? kW2 : kW3);
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      const int g = it->b > 0 ? 0 : 1;
      const Monomial gen = g == 0 ? kW2 : kW3;
      const Monomial rest = quotient(*it, gen);
      const auto& [rest_sq1, rest_sq2] = cache_.at(rest);
      const Polynomial y(rest);
      std::pair<Polynomial, Polynomial> value{
          gen_sq1_[g] * y + rest_sq1 * gen,
          gen_sq2_[g] * y + gen_sq1_[g] * rest_sq1 + rest_sq2 * gen};
      cache_.emplace(*it, std::move(value));
    }
    return cache_.at(m);
  }

 private:
  Polynomial gen_sq1_[2];
  Polynomial gen_sq2_[2];
  std::map<Monomial, std::pair<Polynomial, Polynomial>> cache_;
};

ExtMonomial with_a(const TowerConfig& cfg, std::uint64_t b, std::uint64_t c) {
  return {1, static_cast<Exponent>(b), static_cast<Exponent>(c), cfg.t()};
}

std::string join(const std::vector<ExtMonomial>& ms) {
  std::string out;
  for (const ExtMonomial& m : ms) {
    if (!out.empty()) out += ", ";
    out += to_string(m);
  }
  return "{" + out + "}";
}

}  // namespace

Polynomial sq1(const Polynomial& p) { return apply_termwise(p, sq1_monomial); }

Polynomial sq2(const Polynomial& p) { return apply_termwise(p, sq2_monomial); }

Polynomial sq(unsigned j, const Polynomial& p) {
  switch (j) {
    case 0: return p;
    case 1: return sq1(p);
    case 2: return sq2(p);
    default: throw UsageError("only Sq^0, Sq^1 and Sq^2 are supported, got Sq^" + std::to_string(j));
  }
}

Polynomial sq_cartan_oracle(unsigned j, const Polynomial& p) {
  if (j != 1 && j != 2) throw UsageError("the Cartan oracle covers Sq^1 and Sq^2 only");
  CartanOracle oracle;
  Polynomial out;
  for (const Monomial& m : p.terms()) {
    const auto& squares = oracle.squares(m);
    out += j == 1 ? squares.first : squares.second;
  }
  return out;
}

CohClass sq_on_coh(unsigned j, const CohClass& x) {
  if (j != 1 && j != 2) throw UsageError("only Sq^1 and Sq^2 act on classes, got Sq^" + std::to_string(j));
  const CohomologyRing& ring = x.ring();
  const TowerConfig& cfg = ring.config();
  const unsigned t = cfg.t();
  const std::uint64_t top = max_w_only_degree(cfg);

  ExtPolynomial image = ExtPolynomial::lift(sq(j, x.w_part()), t);
  const Polynomial a_part = x.a_part();
  for (const Monomial& m : a_part.terms()) {
    // Every Sq^s(a) Sq^(j-s)(m) sits in degree deg(a m) + j.
    const std::uint64_t degree = cfg.a_degree() + m.weighted_degree() + j;
    if (degree <= top) {
      throw IndeterminateResult("Sq^" + std::to_string(j) + "(" + to_string(ExtMonomial{1, m.b, m.c, t}) + ") at t=" +
                                std::to_string(t) + " involves Sq^s(a) products in degree " +
                                std::to_string(degree) + ", not above " + std::to_string(top));
    }
    image += ExtPolynomial::lift(sq(j, Polynomial(m)), t, 1);
  }
  return ring.normal_form(image);
}

SqConstraintSystem build_a2_constraints(const TowerConfig& cfg) {
  const unsigned t = cfg.t();
  const std::uint64_t half = cfg.n() / 2;
  SqConstraintSystem sys;
  sys.t = t;

  for (const ExtMonomial& m : basis_in_degree(cfg, 2 * cfg.a_degree())) {
    if (m.r != 1 || m.c % 2 == 0 || (m.c - 1) / 2 * 3 + m.b + 2 != half) {
      throw ContractError("basis monomial " + to_string(m) + " in degree 2 deg(a) has an unexpected shape");
    }
    sys.unknowns.push_back((m.c - 1) / 2);
    sys.candidates.push_back(m);
  }
  std::vector<std::size_t> order(sys.unknowns.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return sys.unknowns[x] < sys.unknowns[y]; });
  {
    std::vector<std::uint64_t> ks;
    std::vector<ExtMonomial> ms;
    for (std::size_t i : order) {
      ks.push_back(sys.unknowns[i]);
      ms.push_back(sys.candidates[i]);
    }
    sys.unknowns = std::move(ks);
    sys.candidates = std::move(ms);
  }

  const auto ring = CohomologyRing::create(cfg);
  auto build_rows = [&](unsigned j, std::vector<ExtMonomial>& targets, Gf2Matrix& rows) {
    std::vector<ExtPolynomial> columns;
    for (const ExtMonomial& m : sys.candidates) {
      const Polynomial w{Monomial{m.b, m.c}};
      columns.push_back(ring->normal_form(ExtPolynomial::lift(sq(j, w), t, 1)).value());
    }
    for (const ExtPolynomial& col : columns) {
      targets.insert(targets.end(), col.terms().begin(), col.terms().end());
    }
    std::sort(targets.begin(), targets.end(), std::greater<>{});
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    rows = Gf2Matrix(targets.size(), columns.size());
    for (std::size_t k = 0; k < columns.size(); ++k) {
      for (const ExtMonomial& term : columns[k].terms()) {
        const auto pos = std::lower_bound(targets.begin(), targets.end(), term, std::greater<>{});
        rows.set(static_cast<std::size_t>(pos - targets.begin()), k, true);
      }
    }
  };
  build_rows(1, sys.sq1_targets, sys.sq1_rows);
  build_rows(2, sys.sq2_targets, sys.sq2_rows);
  return sys;
}

std::vector<CheckResult> verify_a2_zero(const TowerConfig& cfg) {
  const unsigned t = cfg.t();
  const std::uint64_t half = cfg.n() / 2;
  std::vector<CheckResult> out;

  std::optional<SqConstraintSystem> sys;
  out.push_back(run_check("a2.candidates", t, [&]() -> std::optional<std::string> {
    try {
      sys = build_a2_constraints(cfg);
    } catch (const ContractError& e) {
      return std::string(e.what());
    }
    std::vector<ExtMonomial> expected;
    for (std::uint64_t k = 1; 3 * k + 2 <= half; ++k) {
      expected.push_back(with_a(cfg, half - 2 - 3 * k, 2 * k + 1));
    }
    if (sys->candidates != expected) {
      return "basis in degree 2 deg(a) is " + join(sys->candidates) + ", expected " + join(expected);
    }
    for (const ExtMonomial& m : expected) {
      if (!in_additive_basis(cfg, m)) return to_string(m) + " is not a basis monomial";
    }
    if (half >= 2) {
      const ExtMonomial excluded = with_a(cfg, half - 2, 1);
      const auto divisor = extended_gb(cfg).first_divisor(excluded);
      if (divisor != 1U) return to_string(excluded) + " is not divisible by LM(f1)";
    }
    return std::nullopt;
  }));

  if (!sys) {
    for (const char* id : {"a2.cross_terms", "a2.sq1_rows", "a2.sq2_rows", "a2.kernel"}) {
      out.push_back(skipped_check(id, t, "constraint system unavailable"));
    }
    return out;
  }

  out.push_back(run_check("a2.cross_terms", t, [&]() -> std::optional<std::string> {
    // Sq^1(a) lies in a degree spanned by (w2, w3)-monomials alone.
    for (const ExtMonomial& m : basis_in_degree(cfg, cfg.a_degree() + 1)) {
      if (m.r != 0) return "degree deg(a)+1 contains " + to_string(m);
    }
    const std::uint64_t top = max_w_only_degree(cfg);
    for (std::uint64_t degree : {2 * cfg.n() - 1, 2 * cfg.n()}) {
      if (degree <= top) {
        return "cross terms in degree " + std::to_string(degree) + " not above " + std::to_string(top);
      }
    }
    return std::nullopt;
  }));

  const std::size_t unknowns = sys->unknowns.size();
  std::vector<std::size_t> odd, even;
  for (std::size_t i = 0; i < unknowns; ++i) (sys->unknowns[i] % 2 ? odd : even).push_back(i);

  out.push_back(run_check("a2.sq1_rows", t, [&]() -> std::optional<std::string> {
    for (std::size_t i : even) {
      if (!sys->sq1_rows.column_is_zero(i)) {
        return "Sq^1 column of k=" + std::to_string(sys->unknowns[i]) + " is nonzero";
      }
    }
    if (sys->sq1_rows.select_columns(odd).rank() != odd.size()) {
      return "Sq^1 rows do not determine the odd-k unknowns";
    }
    // Displayed coefficient: (2^(t-1) - 2 - 3k) on a w2^(2^(t-1)-3-3k) w3^(2k+2).
    for (std::size_t i = 0; i < unknowns; ++i) {
      const std::uint64_t k = sys->unknowns[i];
      const std::uint64_t b = half - 2 - 3 * k;
      std::vector<ExtMonomial> predicted;
      if (b % 2 == 1) predicted.push_back(with_a(cfg, b - 1, 2 * k + 2));
      std::vector<ExtMonomial> actual;
      for (std::size_t r = 0; r < sys->sq1_targets.size(); ++r) {
        if (sys->sq1_rows.get(r, i)) actual.push_back(sys->sq1_targets[r]);
      }
      if (actual != predicted) {
        return "Sq^1 column of k=" + std::to_string(k) + " is " + join(actual) + ", formula gives " +
               join(predicted);
      }
      for (const ExtMonomial& m : predicted) {
        if (!in_additive_basis(cfg, m)) return to_string(m) + " is not a basis monomial";
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("a2.sq2_rows", t, [&]() -> std::optional<std::string> {
    if (sys->sq2_rows.select_columns(even).rank() != even.size()) {
      return "Sq^2 rows do not determine the even-k unknowns";
    }
    // k = 2j: a w2^(2^(t-1)-1-6j) w3^(4j+1) + binom(2^(t-1)-2-6j, 2) a w2^(2^(t-1)-4-6j) w3^(4j+3).
    std::vector<ExtMonomial> all_targets;
    for (std::size_t i : even) {
      const std::uint64_t j = sys->unknowns[i] / 2;
      const std::uint64_t b = half - 2 - 6 * j;
      std::vector<ExtMonomial> predicted{with_a(cfg, half - 1 - 6 * j, 4 * j + 1)};
      if (b >= 2 && binom_mod2(b, 2)) predicted.push_back(with_a(cfg, half - 4 - 6 * j, 4 * j + 3));
      std::vector<ExtMonomial> actual;
      for (std::size_t r = 0; r < sys->sq2_targets.size(); ++r) {
        if (sys->sq2_rows.get(r, i)) actual.push_back(sys->sq2_targets[r]);
      }
      if (actual != predicted) {
        return "Sq^2 column of k=" + std::to_string(2 * j) + " is " + join(actual) +
               ", formula gives " + join(predicted);
      }
      for (const ExtMonomial& m : predicted) {
        if (!in_additive_basis(cfg, m)) return to_string(m) + " is not a basis monomial";
        all_targets.push_back(m);
      }
    }
    std::sort(all_targets.begin(), all_targets.end());
    if (std::adjacent_find(all_targets.begin(), all_targets.end()) != all_targets.end()) {
      return std::string("Sq^2 target monomials are not pairwise distinct");
    }
    return std::nullopt;
  }));

  out.push_back(run_check("a2.kernel", t, [&]() -> std::optional<std::string> {
    const auto kernel = sys->combined().kernel_basis();
    if (kernel.empty()) return std::nullopt;
    std::string witness = "nonzero kernel vector on k =";
    for (std::size_t i = 0; i < unknowns; ++i) {
      if (kernel.front()[i]) witness += " " + std::to_string(sys->unknowns[i]);
    }
    return witness;
  }));
  return out;
}

}  // namespace grassgb
