#ifndef GRASSGB_GROEBNER_HPP
#define GRASSGB_GROEBNER_HPP

// Buchberger machinery over GF(2), generic over Polynomial and ExtPolynomial.
//
// Reducer selection is always "first basis element in stored order whose
// leading monomial divides the current monomial". reduce() computes the full
// normal form; top_reduce() stops as soon as the leading monomial is
// irreducible and is what the Buchberger loop uses.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "grassgb/errors.hpp"
#include "grassgb/gf2_poly.hpp"

namespace grassgb {

inline constexpr std::uint64_t kDefaultReductionBudget = 1'000'000;

// Counts reduction steps (one multiple of a basis element added) and throws
// ResourceError once the limit is passed.
class ReductionBudget {
 public:
  explicit ReductionBudget(std::uint64_t limit = kDefaultReductionBudget) : limit_(limit) {}

  void charge(std::uint64_t steps = 1) {
    used_ += steps;
    if (used_ > limit_) {
      throw ResourceError("reduction budget of " + std::to_string(limit_) + " steps exhausted");
    }
  }
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

  static ReductionBudget unlimited() { return ReductionBudget(UINT64_MAX); }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Ordered list of nonzero polynomials with cached leading monomials.
template <class P>
class BasisSet {
 public:
  using polynomial_type = P;
  using monomial_type = typename P::monomial_type;

  BasisSet() = default;
  // Zero polynomials are dropped; each one is recorded in warnings().
  explicit BasisSet(std::vector<P> polys) {
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (polys[i].is_zero()) {
        warnings_.push_back("dropped zero polynomial at input position " + std::to_string(i));
        continue;
      }
      push_back(std::move(polys[i]));
    }
  }

  void push_back(P p) {
    if (p.is_zero()) throw ContractError("a basis set cannot hold the zero polynomial");
    if (!polys_.empty() && ring_tag(p) != ring_tag(polys_.front())) {
      throw DomainMismatchError("basis members from different rings");
    }
    leading_.push_back(p.leading());
    polys_.push_back(std::move(p));
  }

  const std::vector<P>& polys() const noexcept { return polys_; }
  const std::vector<monomial_type>& leading_monomials() const noexcept { return leading_; }
  const P& operator[](std::size_t i) const { return polys_[i]; }
  std::size_t size() const noexcept { return polys_.size(); }
  bool empty() const noexcept { return polys_.empty(); }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  // Index of the first member whose leading monomial divides m.
  std::optional<std::size_t> first_divisor(const monomial_type& m) const {
    for (std::size_t i = 0; i < leading_.size(); ++i) {
      if (divides(leading_[i], m)) return i;
    }
    return std::nullopt;
  }

  // Same polynomials, order ignored.
  friend bool same_members(const BasisSet& x, const BasisSet& y) {
    if (x.size() != y.size()) return false;
    return std::all_of(x.polys_.begin(), x.polys_.end(), [&](const P& p) {
      return std::find(y.polys_.begin(), y.polys_.end(), p) != y.polys_.end();
    });
  }

 private:
  static unsigned ring_tag(const Polynomial&) { return 0; }
  static unsigned ring_tag(const ExtPolynomial& p) { return p.t(); }

  std::vector<P> polys_;
  std::vector<monomial_type> leading_;
  std::vector<std::string> warnings_;
};

template <class P>
P s_polynomial(const P& p, const P& q) {
  if (p.is_zero() || q.is_zero()) throw ZeroPolynomialError("S-polynomial of a zero polynomial");
  const auto u = lcm(p.leading(), q.leading());
  return p * quotient(u, p.leading()) + q * quotient(u, q.leading());
}

// Cancels the leading monomial of p against basis members until it is
// irreducible or p vanishes.
template <class P>
P top_reduce(P p, const BasisSet<P>& basis, ReductionBudget& budget) {
  while (!p.is_zero()) {
    const auto divisor = basis.first_divisor(p.leading());
    if (!divisor) break;
    budget.charge();
    p += basis[*divisor] * quotient(p.leading(), basis.leading_monomials()[*divisor]);
  }
  return p;
}

// Full normal form: no monomial of the result is divisible by a leading
// monomial of the basis.
template <class P>
P reduce(const P& p, const BasisSet<P>& basis, ReductionBudget& budget) {
  using M = typename P::monomial_type;
  std::vector<M> irreducible;
  P rest = p;
  while (!rest.is_zero()) {
    rest = top_reduce(std::move(rest), basis, budget);
    if (rest.is_zero()) break;
    // The leading monomial is final; move it to the output.
    irreducible.push_back(rest.leading());
    rest += P(rest.leading());
  }
  if constexpr (std::is_same_v<P, ExtPolynomial>) {
    return ExtPolynomial::from_terms(p.t(), std::move(irreducible));
  } else {
    return P::from_terms(std::move(irreducible));
  }
}

template <class P>
P reduce(const P& p, const BasisSet<P>& basis) {
  auto budget = ReductionBudget::unlimited();
  return reduce(p, basis, budget);
}

struct SPairWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  std::string normal_form;
};

struct GroebnerCheck {
  bool is_groebner = true;
  std::optional<SPairWitness> witness;  // first pair whose S-polynomial does not reduce to 0

  explicit operator bool() const noexcept { return is_groebner; }
};

// Checks every pair, without the coprime shortcut.
template <class P>
GroebnerCheck is_groebner(const BasisSet<P>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      P nf = reduce(s_polynomial(basis[i], basis[j]), basis);
      if (!nf.is_zero()) return {false, SPairWitness{i, j, to_string(nf)}};
    }
  }
  return {};
}

template <class P>
struct SPair {
  std::size_t i;
  std::size_t j;
  typename P::monomial_type lcm;
};

// Queue order: ascending weighted degree of the lcm, then ascending lex on the
// lcm, then ascending indices.
template <class P>
struct SPairLater {
  bool operator()(const SPair<P>& x, const SPair<P>& y) const {
    const auto dx = x.lcm.weighted_degree();
    const auto dy = y.lcm.weighted_degree();
    if (dx != dy) return dx > dy;
    if (x.lcm != y.lcm) return x.lcm > y.lcm;
    return std::pair(x.i, x.j) > std::pair(y.i, y.j);
  }
};

// Extends the input to a Groebner basis of the same ideal. Pairs whose
// leading monomials are coprime are skipped.
template <class P>
BasisSet<P> buchberger(const BasisSet<P>& input, ReductionBudget& budget) {
  if (input.empty()) throw UsageError("buchberger() needs at least one generator");
  BasisSet<P> basis;
  std::priority_queue<SPair<P>, std::vector<SPair<P>>, SPairLater<P>> pairs;

  auto add_member = [&](P p) {
    const std::size_t n = basis.size();
    basis.push_back(std::move(p));
    const auto& lms = basis.leading_monomials();
    for (std::size_t k = 0; k < n; ++k) {
      if (!coprime(lms[k], lms[n])) pairs.push({k, n, lcm(lms[k], lms[n])});
    }
  };
  for (const P& p : input.polys()) add_member(p);

  while (!pairs.empty()) {
    const SPair<P> pair = pairs.top();
    pairs.pop();
    P h = top_reduce(s_polynomial(basis[pair.i], basis[pair.j]), basis, budget);
    if (!h.is_zero()) add_member(std::move(h));
  }
  return basis;
}

template <class P>
BasisSet<P> buchberger(const BasisSet<P>& input) {
  ReductionBudget budget;
  return buchberger(input, budget);
}

// The unique reduced Groebner basis of the ideal generated by a Groebner basis,
// sorted by decreasing leading monomial. Throws ContractError otherwise.
template <class P>
BasisSet<P> reduce_gb(const BasisSet<P>& groebner, ReductionBudget& budget) {
  if (const auto check = is_groebner(groebner); !check) {
    throw ContractError("reduce_gb() input is not a Groebner basis: S(" +
                        std::to_string(check.witness->i) + "," + std::to_string(check.witness->j) +
                        ") has normal form " + check.witness->normal_form);
  }
  // Keep only members whose leading monomial is minimal; among equal leading
  // monomials the earliest survives.
  const auto& lms = groebner.leading_monomials();
  std::vector<P> minimal;
  for (std::size_t i = 0; i < groebner.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < groebner.size() && !redundant; ++j) {
      if (i == j || !divides(lms[j], lms[i])) continue;
      redundant = lms[j] != lms[i] || j < i;
    }
    if (!redundant) minimal.push_back(groebner[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const P& x, const P& y) { return x.leading() > y.leading(); });

  // Interreduce in place; leading monomials are unchanged by this.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    BasisSet<P> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    P tail = minimal[i] + P(minimal[i].leading());
    minimal[i] = P(minimal[i].leading()) + reduce(tail, others, budget);
  }
  return BasisSet<P>(std::move(minimal));
}

template <class P>
BasisSet<P> reduce_gb(const BasisSet<P>& groebner) {
  ReductionBudget budget;
  return reduce_gb(groebner, budget);
}

// True when no leading monomial divides a monomial of another member.
template <class P>
bool is_reduced(const BasisSet<P>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& m : basis[j].terms()) {
        if (divides(basis.leading_monomials()[i], m)) return false;
      }
    }
  }
  return true;
}

// All monomials of the given weighted degree, in decreasing lex order.
std::vector<Monomial> monomials_of_degree(std::uint64_t degree);
std::vector<ExtMonomial> monomials_of_degree(std::uint64_t degree, unsigned t);

// Monomials of weighted degree d divisible by no leading monomial of the basis,
// in decreasing lex order.
std::vector<Monomial> standard_monomials(const BasisSet<Polynomial>& basis, std::uint64_t degree);
// The tower parameter is taken from the basis, which must be nonempty.
std::vector<ExtMonomial> standard_monomials(const BasisSet<ExtPolynomial>& basis,
                                            std::uint64_t degree);

}  // namespace grassgb

#endif  // GRASSGB_GROEBNER_HPP
