#ifndef GRASSGB_GF2_POLY_HPP
#define GRASSGB_GF2_POLY_HPP

// Sparse polynomials over GF(2) in the variables w2, w3 (weights 2 and 3) and
// the extension by the exterior generator a of weight 2^t - 1.
//
// Coefficients are implicit: a polynomial is the set of its monomials, and
// addition is symmetric difference. Terms are stored in strictly decreasing
// lexicographic order, so the leading monomial is always terms().front().

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grassgb/errors.hpp"

namespace grassgb {

using Exponent = std::uint32_t;
inline constexpr std::uint64_t kMaxExponent = UINT32_MAX;

// Largest tower parameter t for which a has a representable degree and
// products of basis elements stay inside the exponent range.
inline constexpr unsigned kMaxTowerParameter = 30;

enum class MonomialOrder {
  LexW2W3,   // w2 > w3
  LexAW2W3,  // a > w2 > w3
};

// w2^b w3^c. The defaulted comparison is lex with w2 dominant.
struct Monomial {
  Exponent b = 0;
  Exponent c = 0;

  constexpr std::uint64_t weighted_degree() const noexcept {
    return 2 * std::uint64_t{b} + 3 * std::uint64_t{c};
  }
  constexpr bool is_one() const noexcept { return b == 0 && c == 0; }

  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
  friend constexpr std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;
};

// a^r w2^b w3^c in the ring for tower parameter t. Normal forms only ever
// carry r in {0, 1}; r = 2 appears as the leading monomial of the relation a^2.
struct ExtMonomial {
  Exponent r = 0;
  Exponent b = 0;
  Exponent c = 0;
  unsigned t = 2;

  std::uint64_t weighted_degree() const noexcept {
    return std::uint64_t{r} * ((std::uint64_t{1} << t) - 1) + 2 * std::uint64_t{b} +
           3 * std::uint64_t{c};
  }
  Monomial w_part() const noexcept { return {b, c}; }

  friend bool operator==(const ExtMonomial&, const ExtMonomial&) = default;
  // Throws DomainMismatchError when the tower parameters differ.
  friend std::strong_ordering operator<=>(const ExtMonomial& x, const ExtMonomial& y);
};

std::strong_ordering cmp_lex(const Monomial& x, const Monomial& y) noexcept;
std::strong_ordering cmp_lex(const ExtMonomial& x, const ExtMonomial& y);

inline std::uint64_t weighted_degree(const Monomial& m) noexcept { return m.weighted_degree(); }
inline std::uint64_t weighted_degree(const ExtMonomial& m) noexcept { return m.weighted_degree(); }

bool divides(const Monomial& d, const Monomial& m) noexcept;
bool divides(const ExtMonomial& d, const ExtMonomial& m);
Monomial lcm(const Monomial& x, const Monomial& y) noexcept;
ExtMonomial lcm(const ExtMonomial& x, const ExtMonomial& y);
bool coprime(const Monomial& x, const Monomial& y) noexcept;
bool coprime(const ExtMonomial& x, const ExtMonomial& y);
// m / d; requires divides(d, m).
Monomial quotient(const Monomial& m, const Monomial& d);
ExtMonomial quotient(const ExtMonomial& m, const ExtMonomial& d);
// Throws OverflowError if an exponent leaves the 32-bit range.
Monomial operator*(const Monomial& x, const Monomial& y);
ExtMonomial operator*(const ExtMonomial& x, const ExtMonomial& y);

// binom(n, k) mod 2 by Lucas: odd iff the bits of k are a subset of those of n.
constexpr int binom_mod2(std::uint64_t n, std::uint64_t k) noexcept {
  return (k & ~n) == 0 ? 1 : 0;
}

// [a_1, ..., a_k] = binom(a_1+...+a_k, a_1) binom(a_2+...+a_k, a_2) ... mod 2.
// Throws UsageError on an empty list and OverflowError if the sum overflows.
int multinomial_mod2(std::span<const std::uint64_t> parts);
inline int multinomial_mod2(std::initializer_list<std::uint64_t> parts) {
  return multinomial_mod2(std::span<const std::uint64_t>(parts.begin(), parts.size()));
}

class Polynomial {
 public:
  using monomial_type = Monomial;
  static constexpr MonomialOrder order = MonomialOrder::LexW2W3;

  Polynomial() = default;
  explicit Polynomial(Monomial m) : terms_{m} {}
  // Accepts any order and repeated monomials; pairs cancel.
  static Polynomial from_terms(std::vector<Monomial> terms);
  static Polynomial one() { return Polynomial(Monomial{}); }

  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool contains(const Monomial& m) const noexcept;
  // Throws ZeroPolynomialError on the zero polynomial.
  const Monomial& leading() const;
  bool is_homogeneous() const noexcept;
  Polynomial zero_like() const { return {}; }

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator*(const Polynomial& p, const Monomial& m);
  friend Polynomial operator*(const Monomial& m, const Polynomial& p) { return p * m; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Monomial> terms_;
};

class ExtPolynomial {
 public:
  using monomial_type = ExtMonomial;
  static constexpr MonomialOrder order = MonomialOrder::LexAW2W3;

  // The zero polynomial of the ring for tower parameter t.
  explicit ExtPolynomial(unsigned t);
  explicit ExtPolynomial(const ExtMonomial& m);
  // All monomials must carry tower parameter t; pairs cancel.
  static ExtPolynomial from_terms(unsigned t, std::vector<ExtMonomial> terms);
  // p(w2, w3) * a^r.
  static ExtPolynomial lift(const Polynomial& p, unsigned t, Exponent r = 0);
  static ExtMonomial generator_a(unsigned t) { return {1, 0, 0, t}; }

  unsigned t() const noexcept { return t_; }
  const std::vector<ExtMonomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool contains(const ExtMonomial& m) const noexcept;
  const ExtMonomial& leading() const;
  bool is_homogeneous() const noexcept;
  ExtPolynomial zero_like() const { return ExtPolynomial(t_); }
  // Coefficient of a^r as a polynomial in w2, w3.
  Polynomial a_coefficient(Exponent r) const;
  Exponent max_a_exponent() const noexcept;

  ExtPolynomial& operator+=(const ExtPolynomial& other);
  friend ExtPolynomial operator+(const ExtPolynomial& x, const ExtPolynomial& y);
  friend ExtPolynomial operator*(const ExtPolynomial& x, const ExtPolynomial& y);
  friend ExtPolynomial operator*(const ExtPolynomial& p, const ExtMonomial& m);
  friend ExtPolynomial operator*(const ExtMonomial& m, const ExtPolynomial& p) { return p * m; }

  friend bool operator==(const ExtPolynomial&, const ExtPolynomial&) = default;

 private:
  void require_same_ring(unsigned other_t) const;

  unsigned t_;
  std::vector<ExtMonomial> terms_;
};

// Throws ZeroPolynomialError for p = 0. A (w2, w3) polynomial has the same
// leading monomial under both orders; an ExtPolynomial requires LexAW2W3 and
// throws DomainMismatchError otherwise.
Monomial leading_monomial(const Polynomial& p, MonomialOrder ord = MonomialOrder::LexW2W3);
ExtMonomial leading_monomial(const ExtPolynomial& p, MonomialOrder ord = MonomialOrder::LexAW2W3);

// Text form. Grammar:
//   poly   := "0" | term ("+" term)*
//   term   := factor ("*" factor)*
//   factor := "1" | "a" ["^" int] | "w2" ["^" int] | "w3" ["^" int]
// Whitespace is ignored everywhere. Output is canonical: decreasing lex,
// explicit "*", exponent 1 omitted, " + " between terms, "0" for zero.
Polynomial parse_polynomial(std::string_view text);
ExtPolynomial parse_ext_polynomial(std::string_view text, unsigned t);

std::string to_string(const Monomial& m);
std::string to_string(const ExtMonomial& m);
std::string to_string(const Polynomial& p);
std::string to_string(const ExtPolynomial& p);

}  // namespace grassgb

#endif  // GRASSGB_GF2_POLY_HPP
