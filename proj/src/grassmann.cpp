#include "grassgb/grassmann.hpp"

#include <algorithm>
#include <bit>

namespace grassgb {

TowerConfig::TowerConfig(unsigned t, unsigned cap) : t_(t) {
  if (cap > kMaxTowerParameter) {
    throw UsageError("tower cap " + std::to_string(cap) + " exceeds " +
                     std::to_string(kMaxTowerParameter));
  }
  if (t < 2 || t > cap) {
    throw UsageError("t must lie in [2, " + std::to_string(cap) + "], got " + std::to_string(t));
  }
}

// ---------------------------------------------------------------------------
// g_r and f_i

Polynomial g_poly(std::uint64_t r) {
  std::vector<Monomial> terms;
  // c ascending means b descending, which is already decreasing lex.
  for (std::uint64_t c = 0; 3 * c <= r; ++c) {
    if ((r - 3 * c) % 2 != 0) continue;
    const std::uint64_t b = (r - 3 * c) / 2;
    if (binom_mod2(b + c, b) == 0) continue;
    if (b > kMaxExponent || c > kMaxExponent) throw OverflowError("g_r degree out of range");
    terms.push_back({static_cast<Exponent>(b), static_cast<Exponent>(c)});
  }
  return Polynomial::from_terms(std::move(terms));
}

std::vector<Polynomial> g_sequence(std::uint64_t r_max) {
  std::vector<Polynomial> g;
  g.reserve(r_max + 1);
  g.push_back(Polynomial::one());
  g.emplace_back();
  g.emplace_back(Monomial{1, 0});
  for (std::uint64_t r = 3; r <= r_max; ++r) {
    g.push_back(g[r - 2] * Monomial{1, 0} + g[r - 3] * Monomial{0, 1});
  }
  g.resize(r_max + 1);
  return g;
}

Polynomial g_poly_rec(std::uint64_t r) {
  // Rolling window over g_{m-3}, g_{m-2}, g_{m-1}.
  Polynomial older = Polynomial::one();
  Polynomial old{};
  Polynomial last{Monomial{1, 0}};
  if (r == 0) return older;
  if (r == 1) return old;
  for (std::uint64_t m = 3; m <= r; ++m) {
    Polynomial next = old * Monomial{1, 0} + older * Monomial{0, 1};
    older = std::move(old);
    old = std::move(last);
    last = std::move(next);
  }
  return last;
}

Polynomial f_poly(const TowerConfig& cfg, unsigned i) {
  if (i > cfg.t()) throw UsageError("f_i is defined for 0 <= i <= t - 1");
  return g_poly(cfg.n() - 3 + (std::uint64_t{1} << i));
}

Monomial lm_f_closed_form(const TowerConfig& cfg, unsigned i) {
  if (i >= cfg.t()) throw UsageError("f_i is defined for 0 <= i <= t - 1");
  const std::uint64_t half = cfg.n() / 2;
  const std::uint64_t pow = std::uint64_t{1} << i;
  return {static_cast<Exponent>(half - pow), static_cast<Exponent>(pow - 1)};
}

BasisSet<Polynomial> claimed_gb(const TowerConfig& cfg) {
  std::vector<Polynomial> fs;
  for (unsigned i = 0; i < cfg.t(); ++i) fs.push_back(f_poly(cfg, i));
  return BasisSet<Polynomial>(std::move(fs));
}

BasisSet<ExtPolynomial> detail::extended_gb_with(const TowerConfig& cfg, const Polynomial& tail) {
  const unsigned t = cfg.t();
  std::vector<ExtPolynomial> fs;
  for (unsigned i = 0; i < t; ++i) fs.push_back(ExtPolynomial::lift(f_poly(cfg, i), t));
  fs.push_back(ExtPolynomial(ExtMonomial{2, 0, 0, t}) + ExtPolynomial::lift(tail, t, 1));
  return BasisSet<ExtPolynomial>(std::move(fs));
}

BasisSet<ExtPolynomial> extended_gb(const TowerConfig& cfg) {
  return detail::extended_gb_with(cfg, Polynomial{});
}

// ---------------------------------------------------------------------------
// Additive basis

bool in_additive_basis(const TowerConfig& cfg, const ExtMonomial& m) {
  if (m.t != cfg.t() || m.r >= 2) return false;
  for (unsigned i = 0; i < cfg.t(); ++i) {
    const std::uint64_t pow = std::uint64_t{1} << i;
    const bool b_small = m.b < cfg.n() / 2 - pow;
    const bool c_small = m.c < pow - 1;
    if (!b_small && !c_small) return false;
  }
  return true;
}

std::uint64_t basis_b_bound(const TowerConfig& cfg, std::uint64_t c) {
  // The binding constraint comes from the largest i with 2^i - 1 <= c.
  const unsigned i = std::min<unsigned>(cfg.t() - 1, std::bit_width(c + 1) - 1);
  return cfg.n() / 2 - (std::uint64_t{1} << i);
}

std::vector<ExtMonomial> basis_in_degree(const TowerConfig& cfg, std::uint64_t degree) {
  std::vector<ExtMonomial> out;
  if (degree > cfg.dim()) return out;
  for (std::uint64_t r = 2; r-- > 0;) {
    if (r * cfg.a_degree() > degree) continue;
    const std::uint64_t rest = degree - r * cfg.a_degree();
    for (std::uint64_t c = 0; 3 * c <= rest; ++c) {
      if ((rest - 3 * c) % 2 != 0) continue;
      const std::uint64_t b = (rest - 3 * c) / 2;
      if (b < basis_b_bound(cfg, c)) {
        out.push_back({static_cast<Exponent>(r), static_cast<Exponent>(b),
                       static_cast<Exponent>(c), cfg.t()});
      }
    }
  }
  return out;
}

std::size_t AdditiveBasis::size() const noexcept {
  std::size_t total = 0;
  for (const auto& slice : by_degree) total += slice.size();
  return total;
}

AdditiveBasis additive_basis(const TowerConfig& cfg, std::uint64_t max_elements) {
  if (cfg.basis_size() > max_elements) {
    throw ResourceError("additive basis for t=" + std::to_string(cfg.t()) + " has " +
                        std::to_string(cfg.basis_size()) + " elements, over the budget of " +
                        std::to_string(max_elements));
  }
  AdditiveBasis basis{cfg.t(), std::vector<std::vector<ExtMonomial>>(cfg.dim() + 1)};
  // Walk c, then the admissible b-interval, instead of testing every monomial.
  for (std::uint64_t c = 0;; ++c) {
    const std::uint64_t bound = basis_b_bound(cfg, c);
    if (bound == 0) break;
    for (std::uint64_t b = 0; b < bound; ++b) {
      for (std::uint64_t r = 0; r < 2; ++r) {
        const ExtMonomial m{static_cast<Exponent>(r), static_cast<Exponent>(b),
                            static_cast<Exponent>(c), cfg.t()};
        basis.by_degree[m.weighted_degree()].push_back(m);
      }
    }
  }
  for (auto& slice : basis.by_degree) std::sort(slice.begin(), slice.end(), std::greater<>{});
  return basis;
}

std::uint64_t BettiTable::total() const noexcept {
  std::uint64_t sum = 0;
  for (std::uint64_t d : dims) sum += d;
  return sum;
}

bool BettiTable::is_symmetric() const noexcept {
  return std::equal(dims.begin(), dims.end(), dims.rbegin());
}

BettiTable betti_table(const TowerConfig& cfg) {
  BettiTable table{cfg.t(), std::vector<std::uint64_t>(cfg.dim() + 1, 0)};
  for (std::uint64_t c = 0;; ++c) {
    const std::uint64_t bound = basis_b_bound(cfg, c);
    if (bound == 0) break;
    for (std::uint64_t b = 0; b < bound; ++b) {
      const std::uint64_t degree = 2 * b + 3 * c;
      ++table.dims[degree];
      ++table.dims[degree + cfg.a_degree()];
    }
  }
  return table;
}

std::uint64_t max_w_only_degree(const TowerConfig& cfg) {
  std::uint64_t top = 0;
  for (std::uint64_t c = 0;; ++c) {
    const std::uint64_t bound = basis_b_bound(cfg, c);
    if (bound == 0) break;
    top = std::max(top, 2 * (bound - 1) + 3 * c);
  }
  return top;
}

// ---------------------------------------------------------------------------
// Ring arithmetic

CohomologyRing::CohomologyRing(const TowerConfig& cfg) : cfg_(cfg), basis_(extended_gb(cfg)) {}

std::shared_ptr<const CohomologyRing> CohomologyRing::create(const TowerConfig& cfg) {
  return std::shared_ptr<const CohomologyRing>(new CohomologyRing(cfg));
}

CohClass CohomologyRing::normal_form(const ExtPolynomial& x) const {
  if (x.t() != cfg_.t()) {
    throw DomainMismatchError("class from tower t=" + std::to_string(x.t()) +
                              " used in the ring for t=" + std::to_string(cfg_.t()));
  }
  return CohClass(shared_from_this(), reduce(x, basis_));
}

CohClass CohomologyRing::normal_form(const Polynomial& x) const {
  return normal_form(ExtPolynomial::lift(x, cfg_.t()));
}

CohClass CohomologyRing::zero() const { return CohClass(shared_from_this(), ExtPolynomial(cfg_.t())); }

CohClass CohomologyRing::one() const { return normal_form(Polynomial::one()); }

CohClass CohomologyRing::a() const {
  return normal_form(ExtPolynomial(ExtPolynomial::generator_a(cfg_.t())));
}

CohClass operator+(const CohClass& x, const CohClass& y) {
  if (x.ring_ != y.ring_ && !(x.ring().config() == y.ring().config())) {
    throw DomainMismatchError("adding classes from different rings");
  }
  // Sums of normal forms are normal forms.
  return CohClass(x.ring_, x.value_ + y.value_);
}

CohClass operator*(const CohClass& x, const CohClass& y) {
  if (x.ring_ != y.ring_ && !(x.ring().config() == y.ring().config())) {
    throw DomainMismatchError("multiplying classes from different rings");
  }
  return x.ring().normal_form(x.value_ * y.value_);
}

CohClass normal_form_coh(const TowerConfig& cfg, const ExtPolynomial& x) {
  return CohomologyRing::create(cfg)->normal_form(x);
}

}  // namespace grassgb
