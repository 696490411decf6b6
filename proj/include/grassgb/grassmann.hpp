#ifndef GRASSGB_GRASSMANN_HPP
#define GRASSGB_GRASSMANN_HPP

// The mod-2 cohomology of the oriented Grassmannian of 3-planes in R^(2^t):
// the relation polynomials g_r and f_i, their Groebner bases, the additive
// basis, Betti numbers, and normal-form arithmetic.
//
// The exterior generator a has degree 2^t - 1 and satisfies a^2 = 0, so the
// ring is Z/2[w2, w3, a] / (f_0, ..., f_{t-1}, a^2).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grassgb/gf2_poly.hpp"
#include "grassgb/groebner.hpp"
#include "grassgb/report.hpp"

namespace grassgb {

inline constexpr unsigned kDefaultTowerCap = 20;

class TowerConfig {
 public:
  // Throws UsageError unless 2 <= t <= cap.
  explicit TowerConfig(unsigned t, unsigned cap = kDefaultTowerCap);

  unsigned t() const noexcept { return t_; }
  std::uint64_t n() const noexcept { return std::uint64_t{1} << t_; }
  // Dimension of the manifold, 3n - 9.
  std::uint64_t dim() const noexcept { return 3 * n() - 9; }
  std::uint64_t a_degree() const noexcept { return n() - 1; }
  // (n - 1)(n - 2) / 3, the total rank of the cohomology.
  std::uint64_t basis_size() const noexcept { return (n() - 1) * (n() - 2) / 3; }

  friend bool operator==(const TowerConfig&, const TowerConfig&) = default;

 private:
  unsigned t_;
};

// ---------------------------------------------------------------------------
// Relation polynomials

// Polynomial over GF(2) in w1, ..., wk (w_i of degree i), terms in decreasing
// lex order with w1 dominant.
struct WPolynomial {
  unsigned k = 1;
  std::vector<std::vector<Exponent>> terms;

  friend bool operator==(const WPolynomial&, const WPolynomial&) = default;
};

std::string to_string(const WPolynomial& p);

// Homogeneous part of degree r of 1 / (1 + w1 + ... + wk), by the multinomial
// sum over a_1 + 2 a_2 + ... + k a_k = r. Supports k <= 8 and r <= 512.
WPolynomial wbar(unsigned r, unsigned k);
// Same value, by wbar_{m} = w1 wbar_{m-1} + ... + wk wbar_{m-k}.
WPolynomial wbar_recurrence(unsigned r, unsigned k);

// g_r = sum over 2b + 3c = r of binom(b + c, b) w2^b w3^c.
Polynomial g_poly(std::uint64_t r);
// g_r from g_0 = 1, g_1 = 0, g_2 = w2 and g_{r+3} = w2 g_{r+1} + w3 g_r.
Polynomial g_poly_rec(std::uint64_t r);
// g_0, ..., g_{r_max} by the recurrence.
std::vector<Polynomial> g_sequence(std::uint64_t r_max);

// f_i = g_{2^t - 3 + 2^i}, for 0 <= i <= t - 1 (i = t is allowed and gives 0).
Polynomial f_poly(const TowerConfig& cfg, unsigned i);
// w2^(2^(t-1) - 2^i) w3^(2^i - 1).
Monomial lm_f_closed_form(const TowerConfig& cfg, unsigned i);

// {f_0, ..., f_{t-1}} in the (w2, w3) ring.
BasisSet<Polynomial> claimed_gb(const TowerConfig& cfg);
// {f_0, ..., f_{t-1}, a^2} in the (a, w2, w3) ring.
BasisSet<ExtPolynomial> extended_gb(const TowerConfig& cfg);

namespace detail {
// {f_0, ..., f_{t-1}, a^2 + P a} for a polynomial P in w2, w3.
BasisSet<ExtPolynomial> extended_gb_with(const TowerConfig& cfg, const Polynomial& tail);
}  // namespace detail

// ---------------------------------------------------------------------------
// Additive basis and Betti numbers

// Membership test taken literally: r < 2 and, for every i < t,
// b < 2^(t-1) - 2^i or c < 2^i - 1.
bool in_additive_basis(const TowerConfig& cfg, const ExtMonomial& m);

// Exclusive upper bound on b for basis monomials with w3-exponent c; 0 when
// no such monomial exists.
std::uint64_t basis_b_bound(const TowerConfig& cfg, std::uint64_t c);

// Basis monomials of one degree, decreasing lex. Empty outside [0, dim].
std::vector<ExtMonomial> basis_in_degree(const TowerConfig& cfg, std::uint64_t degree);

struct AdditiveBasis {
  unsigned t = 2;
  std::vector<std::vector<ExtMonomial>> by_degree;  // index = degree, each decreasing lex

  std::size_t size() const noexcept;
};

inline constexpr std::uint64_t kDefaultBasisBudget = 20'000'000;

// Throws ResourceError when the basis has more than max_elements members.
AdditiveBasis additive_basis(const TowerConfig& cfg,
                             std::uint64_t max_elements = kDefaultBasisBudget);

struct BettiTable {
  unsigned t = 2;
  std::vector<std::uint64_t> dims;  // index = degree, 0..dim

  std::uint64_t total() const noexcept;
  bool is_symmetric() const noexcept;
};

BettiTable betti_table(const TowerConfig& cfg);

// Highest degree of a basis monomial without a (the top degree of the w2, w3
// subalgebra), found by enumeration.
std::uint64_t max_w_only_degree(const TowerConfig& cfg);

// ---------------------------------------------------------------------------
// Ring arithmetic

class CohClass;

// Owns the extended Groebner basis; classes keep a shared reference to it.
class CohomologyRing : public std::enable_shared_from_this<CohomologyRing> {
 public:
  static std::shared_ptr<const CohomologyRing> create(const TowerConfig& cfg);

  const TowerConfig& config() const noexcept { return cfg_; }
  const BasisSet<ExtPolynomial>& groebner_basis() const noexcept { return basis_; }

  CohClass normal_form(const ExtPolynomial& x) const;
  CohClass normal_form(const Polynomial& x) const;
  CohClass zero() const;
  CohClass one() const;
  CohClass a() const;

 private:
  explicit CohomologyRing(const TowerConfig& cfg);

  TowerConfig cfg_;
  BasisSet<ExtPolynomial> basis_;
};

// Element of H*, stored as its normal form p0 + a p1.
class CohClass {
 public:
  const ExtPolynomial& value() const noexcept { return value_; }
  const CohomologyRing& ring() const noexcept { return *ring_; }
  unsigned t() const noexcept { return value_.t(); }
  bool is_zero() const noexcept { return value_.is_zero(); }
  Polynomial w_part() const { return value_.a_coefficient(0); }
  Polynomial a_part() const { return value_.a_coefficient(1); }

  friend CohClass operator+(const CohClass& x, const CohClass& y);
  friend CohClass operator*(const CohClass& x, const CohClass& y);
  friend bool operator==(const CohClass& x, const CohClass& y) { return x.value_ == y.value_; }

 private:
  friend class CohomologyRing;
  CohClass(std::shared_ptr<const CohomologyRing> ring, ExtPolynomial value)
      : ring_(std::move(ring)), value_(std::move(value)) {}

  std::shared_ptr<const CohomologyRing> ring_;
  ExtPolynomial value_;
};

CohClass normal_form_coh(const TowerConfig& cfg, const ExtPolynomial& x);

// ---------------------------------------------------------------------------
// Verifiers. Each returns one CheckResult per named check.

// Runs Buchberger and reduce_gb on {g_{2^t-2}, g_{2^t-1}} and compares with
// {f_0, ..., f_{t-1}}. ResourceError propagates when the budget runs out.
std::vector<CheckResult> verify_reduced_gb(const TowerConfig& cfg,
                                           std::uint64_t budget = kDefaultReductionBudget);

// Closed-form leading monomials of the f_i, and f_{t-1} = w3^(2^(t-1) - 1).
std::vector<CheckResult> verify_leading_monomials(const TowerConfig& cfg);

// The S-polynomial identities among the f_i that certify the Groebner property.
std::vector<CheckResult> verify_spoly_identities(const TowerConfig& cfg);

// Low/high degree bounds for the w2, w3 subalgebra and the height of w3.
std::vector<CheckResult> verify_bounds(const TowerConfig& cfg);

// Additive basis against standard monomials, total count, and duality of the
// Betti table.
std::vector<CheckResult> verify_additive_basis(const TowerConfig& cfg);

struct LemmaScan {
  unsigned i = 0;
  std::uint64_t s_max = 0;
  std::uint64_t cases = 0;  // (b, c, s) triples with binom(b + c, c) odd
  struct Counterexample {
    std::uint64_t b, c, s;
  };
  std::optional<Counterexample> counterexample;
};

// For 1 <= s <= s_max and 2b + 3c = 2^i s - 3, every odd binom(b + c, c)
// must have c >= 2^i - 1. Requires i <= 12.
LemmaScan check_lower_bound_lemma(unsigned i, std::uint64_t s_max);

}  // namespace grassgb

#endif  // GRASSGB_GRASSMANN_HPP
