#include "grassgb/gf2_poly.hpp"

#include <algorithm>

#include "grassgb/detail/term_set.hpp"

namespace grassgb {

namespace {

Exponent checked_add(Exponent x, Exponent y) {
  const std::uint64_t sum = std::uint64_t{x} + y;
  if (sum > kMaxExponent) {
    throw OverflowError("exponent " + std::to_string(sum) + " exceeds the supported range");
  }
  return static_cast<Exponent>(sum);
}

void require_same_t(const ExtMonomial& x, const ExtMonomial& y) {
  if (x.t != y.t) {
    throw DomainMismatchError("extended monomials from towers t=" + std::to_string(x.t) +
                              " and t=" + std::to_string(y.t));
  }
}

void require_tower(unsigned t) {
  if (t < 1 || t > kMaxTowerParameter) {
    throw UsageError("tower parameter t=" + std::to_string(t) + " is out of range");
  }
}

}  // namespace

std::strong_ordering operator<=>(const ExtMonomial& x, const ExtMonomial& y) {
  require_same_t(x, y);
  if (auto o = x.r <=> y.r; o != 0) return o;
  if (auto o = x.b <=> y.b; o != 0) return o;
  return x.c <=> y.c;
}

std::strong_ordering cmp_lex(const Monomial& x, const Monomial& y) noexcept { return x <=> y; }
std::strong_ordering cmp_lex(const ExtMonomial& x, const ExtMonomial& y) { return x <=> y; }

bool divides(const Monomial& d, const Monomial& m) noexcept { return d.b <= m.b && d.c <= m.c; }

bool divides(const ExtMonomial& d, const ExtMonomial& m) {
  require_same_t(d, m);
  return d.r <= m.r && d.b <= m.b && d.c <= m.c;
}

Monomial lcm(const Monomial& x, const Monomial& y) noexcept {
  return {std::max(x.b, y.b), std::max(x.c, y.c)};
}

ExtMonomial lcm(const ExtMonomial& x, const ExtMonomial& y) {
  require_same_t(x, y);
  return {std::max(x.r, y.r), std::max(x.b, y.b), std::max(x.c, y.c), x.t};
}

bool coprime(const Monomial& x, const Monomial& y) noexcept {
  return (x.b == 0 || y.b == 0) && (x.c == 0 || y.c == 0);
}

bool coprime(const ExtMonomial& x, const ExtMonomial& y) {
  require_same_t(x, y);
  return (x.r == 0 || y.r == 0) && (x.b == 0 || y.b == 0) && (x.c == 0 || y.c == 0);
}

Monomial quotient(const Monomial& m, const Monomial& d) {
  if (!divides(d, m)) throw ContractError(to_string(d) + " does not divide " + to_string(m));
  return {m.b - d.b, m.c - d.c};
}

ExtMonomial quotient(const ExtMonomial& m, const ExtMonomial& d) {
  if (!divides(d, m)) throw ContractError(to_string(d) + " does not divide " + to_string(m));
  return {m.r - d.r, m.b - d.b, m.c - d.c, m.t};
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  return {checked_add(x.b, y.b), checked_add(x.c, y.c)};
}

ExtMonomial operator*(const ExtMonomial& x, const ExtMonomial& y) {
  require_same_t(x, y);
  return {checked_add(x.r, y.r), checked_add(x.b, y.b), checked_add(x.c, y.c), x.t};
}

int multinomial_mod2(std::span<const std::uint64_t> parts) {
  if (parts.empty()) throw UsageError("multinomial coefficient of an empty list");
  // Walk from the back, accumulating the suffix sums a_i + ... + a_k.
  std::uint64_t suffix = 0;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (*it > UINT64_MAX - suffix) throw OverflowError("multinomial sum overflows");
    suffix += *it;
    if (binom_mod2(suffix, *it) == 0) return 0;
  }
  return 1;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::from_terms(std::vector<Monomial> terms) {
  detail::collapse_parity(terms);
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::contains(const Monomial& m) const noexcept {
  return std::binary_search(terms_.begin(), terms_.end(), m, std::greater<>{});
}

const Monomial& Polynomial::leading() const {
  if (terms_.empty()) throw ZeroPolynomialError("leading monomial of the zero polynomial");
  return terms_.front();
}

bool Polynomial::is_homogeneous() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Monomial& m) {
    return m.weighted_degree() == terms_.front().weighted_degree();
  });
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  terms_ = detail::xor_merge<Monomial>(terms_, other.terms_);
  return *this;
}

Polynomial operator+(const Polynomial& x, const Polynomial& y) {
  Polynomial out = x;
  out += y;
  return out;
}

Polynomial operator*(const Polynomial& p, const Monomial& m) {
  // Multiplication by a monomial is strictly monotone, so the order survives.
  Polynomial out;
  out.terms_.reserve(p.terms_.size());
  for (const Monomial& term : p.terms_) out.terms_.push_back(term * m);
  return out;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  if (x.size() == 1) return y * x.terms_.front();
  if (y.size() == 1) return x * y.terms_.front();
  std::vector<Monomial> products;
  products.reserve(x.size() * y.size());
  for (const Monomial& u : x.terms_) {
    for (const Monomial& v : y.terms_) products.push_back(u * v);
  }
  return Polynomial::from_terms(std::move(products));
}

// ---------------------------------------------------------------------------
// ExtPolynomial

ExtPolynomial::ExtPolynomial(unsigned t) : t_(t) { require_tower(t); }

ExtPolynomial::ExtPolynomial(const ExtMonomial& m) : t_(m.t), terms_{m} { require_tower(m.t); }

ExtPolynomial ExtPolynomial::from_terms(unsigned t, std::vector<ExtMonomial> terms) {
  ExtPolynomial p(t);
  for (const ExtMonomial& m : terms) p.require_same_ring(m.t);
  detail::collapse_parity(terms);
  p.terms_ = std::move(terms);
  return p;
}

ExtPolynomial ExtPolynomial::lift(const Polynomial& p, unsigned t, Exponent r) {
  ExtPolynomial out(t);
  out.terms_.reserve(p.size());
  for (const Monomial& m : p.terms()) out.terms_.push_back({r, m.b, m.c, t});
  return out;
}

void ExtPolynomial::require_same_ring(unsigned other_t) const {
  if (other_t != t_) {
    throw DomainMismatchError("extended polynomials from towers t=" + std::to_string(t_) +
                              " and t=" + std::to_string(other_t));
  }
}

bool ExtPolynomial::contains(const ExtMonomial& m) const noexcept {
  if (m.t != t_) return false;
  return std::binary_search(terms_.begin(), terms_.end(), m, std::greater<>{});
}

const ExtMonomial& ExtPolynomial::leading() const {
  if (terms_.empty()) throw ZeroPolynomialError("leading monomial of the zero polynomial");
  return terms_.front();
}

bool ExtPolynomial::is_homogeneous() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [&](const ExtMonomial& m) {
    return m.weighted_degree() == terms_.front().weighted_degree();
  });
}

Polynomial ExtPolynomial::a_coefficient(Exponent r) const {
  std::vector<Monomial> out;
  for (const ExtMonomial& m : terms_) {
    if (m.r == r) out.push_back(m.w_part());
  }
  // Terms with equal r are contiguous and already decreasing in (b, c).
  return Polynomial::from_terms(std::move(out));
}

Exponent ExtPolynomial::max_a_exponent() const noexcept {
  return terms_.empty() ? 0 : terms_.front().r;
}

ExtPolynomial& ExtPolynomial::operator+=(const ExtPolynomial& other) {
  require_same_ring(other.t_);
  if (other.is_zero()) return *this;
  terms_ = detail::xor_merge<ExtMonomial>(terms_, other.terms_);
  return *this;
}

ExtPolynomial operator+(const ExtPolynomial& x, const ExtPolynomial& y) {
  ExtPolynomial out = x;
  out += y;
  return out;
}

ExtPolynomial operator*(const ExtPolynomial& p, const ExtMonomial& m) {
  p.require_same_ring(m.t);
  ExtPolynomial out(p.t_);
  out.terms_.reserve(p.terms_.size());
  for (const ExtMonomial& term : p.terms_) out.terms_.push_back(term * m);
  return out;
}

ExtPolynomial operator*(const ExtPolynomial& x, const ExtPolynomial& y) {
  x.require_same_ring(y.t_);
  if (x.size() == 1) return y * x.terms_.front();
  if (y.size() == 1) return x * y.terms_.front();
  std::vector<ExtMonomial> products;
  products.reserve(x.size() * y.size());
  for (const ExtMonomial& u : x.terms_) {
    for (const ExtMonomial& v : y.terms_) products.push_back(u * v);
  }
  return ExtPolynomial::from_terms(x.t_, std::move(products));
}

// The (a, w2, w3) order restricts to the (w2, w3) order, so both are accepted here.
Monomial leading_monomial(const Polynomial& p, MonomialOrder) { return p.leading(); }

ExtMonomial leading_monomial(const ExtPolynomial& p, MonomialOrder ord) {
  if (ord != ExtPolynomial::order) {
    throw DomainMismatchError("the (w2, w3) order does not rank monomials containing a");
  }
  return p.leading();
}

}  // namespace grassgb
