#include <doctest.h>

#include <vector>

#include "grassgb/gf2_poly.hpp"
#include "support/oracles.hpp"

using namespace grassgb;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }

const Monomial kW2{1, 0};
const Monomial kW3{0, 1};

}  // namespace

TEST_SUITE("gf2_poly") {

TEST_CASE("binom_mod2 examples") {
  CHECK(binom_mod2(0, 0) == 1);
  CHECK(binom_mod2(7, 3) == 1);
  CHECK(binom_mod2(4, 2) == 0);
  CHECK(binom_mod2(3, 5) == 0);
}

TEST_CASE("binom_mod2 agrees with Pascal's triangle for n <= 512") {
  const auto pascal = oracle::pascal_mod2(512);
  for (std::uint64_t n = 0; n <= 512; ++n) {
    for (std::uint64_t k = 0; k <= n + 2; ++k) {
      REQUIRE_MESSAGE(binom_mod2(n, k) == oracle::binom(pascal, n, k), "n=" << n << " k=" << k);
    }
  }
}

TEST_CASE("multinomial_mod2 examples") {
  CHECK(multinomial_mod2({5}) == 1);
  CHECK(multinomial_mod2({1, 1}) == 0);
  CHECK(multinomial_mod2({2, 1}) == 1);
  CHECK(multinomial_mod2({0, 0, 0}) == 1);
  CHECK_THROWS_AS(multinomial_mod2(std::span<const std::uint64_t>{}), UsageError);
}

TEST_CASE("multinomial_mod2 agrees with the Pascal recursion for sums <= 64") {
  const auto pascal = oracle::pascal_mod2(64);
  // Every composition of every n <= 64 into up to three parts, plus a random
  // sample of longer ones.
  for (std::uint64_t n = 0; n <= 64; ++n) {
    for (std::uint64_t x = 0; x <= n; ++x) {
      REQUIRE(multinomial_mod2({x, n - x}) == oracle::multinomial(pascal, {x, n - x}));
      for (std::uint64_t y = 0; x + y <= n; ++y) {
        const std::vector<std::uint64_t> parts{x, y, n - x - y};
        REQUIRE(multinomial_mod2(parts) == oracle::multinomial(pascal, parts));
      }
    }
  }
  oracle::Gen gen(11);
  for (int trial = 0; trial < 20000; ++trial) {
    std::vector<std::uint64_t> parts(gen.uniform(1, 8));
    std::uint64_t budget = gen.uniform(0, 64);
    for (auto& p : parts) {
      p = gen.uniform(0, budget);
      budget -= p;
    }
    REQUIRE(multinomial_mod2(parts) == oracle::multinomial(pascal, parts));
  }
}

TEST_CASE("cmp_lex examples") {
  CHECK(cmp_lex(Monomial{1, 0}, Monomial{0, 5}) == std::strong_ordering::greater);
  CHECK(cmp_lex(Monomial{2, 1}, Monomial{2, 3}) == std::strong_ordering::less);
  CHECK(cmp_lex(Monomial{2, 3}, Monomial{2, 3}) == std::strong_ordering::equal);
  CHECK(cmp_lex(ExtMonomial{1, 0, 0, 3}, ExtMonomial{0, 9, 9, 3}) == std::strong_ordering::greater);
  CHECK_THROWS_AS(cmp_lex(ExtMonomial{1, 0, 0, 3}, ExtMonomial{1, 0, 0, 4}), DomainMismatchError);
}

TEST_CASE("lex order is total and multiplicative on random triples") {
  oracle::Gen gen(1);
  for (int trial = 0; trial < 20000; ++trial) {
    const Monomial x = gen.monomial(6), y = gen.monomial(6), z = gen.monomial(6);
    const auto xy = cmp_lex(x, y);
    CHECK((cmp_lex(y, x) < 0) == (xy > 0));  // antisymmetry
    CHECK((xy == 0) == (x == y));
    if (xy <= 0 && cmp_lex(y, z) <= 0) CHECK(cmp_lex(x, z) <= 0);
    if (xy <= 0) CHECK(cmp_lex(z * x, z * y) <= 0);
  }
}

TEST_CASE("weighted degree") {
  CHECK(weighted_degree(Monomial{2, 1}) == 7);
  CHECK(weighted_degree(ExtPolynomial::generator_a(3)) == 7);
  CHECK(weighted_degree(Monomial{}) == 0);
  CHECK(weighted_degree(ExtMonomial{1, 2, 1, 4}) == 22);
}

TEST_CASE("addition") {
  CHECK(P("w2^3 + w3^2") + P("w2^3") == P("w3^2"));
  CHECK(Polynomial{} + P("w2*w3") == P("w2*w3"));
  const Polynomial g6 = P("w2^3 + w3^2");
  CHECK((g6 + g6).is_zero());
}

TEST_CASE("multiplication") {
  CHECK(P("w2") * P("w2") == P("w2^2"));
  const Polynomial p = P("w2^3*w3 + w3^4 + 1");
  CHECK(Polynomial::one() * p == p);
  const Polynomial s = P("w2 + w3");
  CHECK(s * s == P("w2^2 + w3^2"));
  CHECK(P("w2") * Polynomial{} == Polynomial{});
}

TEST_CASE("exponent overflow is an error") {
  const Monomial big{static_cast<Exponent>(kMaxExponent), 0};
  CHECK_THROWS_AS(big * kW2, OverflowError);
  CHECK_THROWS_AS(Polynomial(big) * Polynomial(kW2), OverflowError);
  CHECK_NOTHROW(big * kW3);
}

TEST_CASE("ring axioms and Frobenius on random inputs") {
  oracle::Gen gen(2);
  for (int trial = 0; trial < 2000; ++trial) {
    const Polynomial p = gen.polynomial(6, 8), q = gen.polynomial(6, 8), r = gen.polynomial(6, 8);
    CHECK(p + q == q + p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p + p).is_zero());
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p + q) * (p + q) == p * p + q * q);
    CHECK(p * q == oracle::naive_product(p, q));
  }
}

TEST_CASE("leading monomials multiply") {
  oracle::Gen gen(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const Polynomial p = gen.nonzero_polynomial(6, 8), q = gen.nonzero_polynomial(6, 8);
    const Polynomial pq = p * q;
    REQUIRE_FALSE(pq.is_zero());
    CHECK(pq.leading() == p.leading() * q.leading());
  }
}

TEST_CASE("leading_monomial") {
  CHECK(leading_monomial(P("w2^3 + w3^2")) == Monomial{3, 0});
  CHECK(leading_monomial(P("w2^4 + w2*w3^2")) == Monomial{4, 0});
  CHECK(leading_monomial(P("w2*w3^5")) == Monomial{1, 5});
  CHECK(leading_monomial(P("w2 + w3^9"), MonomialOrder::LexAW2W3) == Monomial{1, 0});
  CHECK_THROWS_AS(leading_monomial(Polynomial{}), ZeroPolynomialError);
  const ExtPolynomial e = parse_ext_polynomial("w2^9 + a*w3", 3);
  CHECK(leading_monomial(e) == ExtMonomial{1, 0, 1, 3});
  CHECK_THROWS_AS(leading_monomial(e, MonomialOrder::LexW2W3), DomainMismatchError);
}

TEST_CASE("terms are stored strictly decreasing") {
  oracle::Gen gen(4);
  for (int trial = 0; trial < 500; ++trial) {
    const Polynomial p = gen.polynomial(12, 5) * gen.polynomial(4, 3);
    for (std::size_t i = 1; i < p.size(); ++i) CHECK(p.terms()[i - 1] > p.terms()[i]);
  }
}

TEST_CASE("parse examples") {
  CHECK(P("w2^3 + w3^2") == Polynomial::from_terms({{3, 0}, {0, 2}}));
  CHECK(P("0").is_zero());
  CHECK(P("w3 + w3").is_zero());
  CHECK(P("w3^2 + w2^3") == P("w2^3+w3^2"));
  CHECK(P(" w2 * w2 ^ 2 ") == P("w2^3"));
  CHECK(P("1") == Polynomial::one());
  CHECK(P("w2^0") == Polynomial::one());
}

TEST_CASE("parse errors carry positions") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_polynomial(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("no error for " << text);
    return 0;
  };
  CHECK(position_of("w2 + w4") == 6);
  CHECK(position_of("w2 +") == 4);
  CHECK(position_of("") == 0);
  CHECK(position_of("w2^") == 3);
  CHECK(position_of("w2 w3") == 3);
  CHECK(position_of("0 + w2") == 0);
  CHECK_THROWS_AS(P("a*w2"), ParseError);
  CHECK_THROWS_AS(P("w2^99999999999"), ParseError);
  CHECK_THROWS_AS(P("w2^4294967295*w2"), ParseError);
}

TEST_CASE("format is canonical and round-trips") {
  CHECK(to_string(P("w3^2 + w2^3")) == "w2^3 + w3^2");
  CHECK(to_string(Polynomial{}) == "0");
  CHECK(to_string(P("1 + w2*w3")) == "w2*w3 + 1");
  CHECK(to_string(parse_ext_polynomial("w2 + a*w3^2", 3)) == "a*w3^2 + w2");
  oracle::Gen gen(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const Polynomial p = gen.polynomial(8, 12);
    CHECK(P(to_string(p).c_str()) == p);
    CHECK(to_string(P(to_string(p).c_str())) == to_string(p));
  }
}

TEST_CASE("extended polynomials keep rings apart") {
  const ExtPolynomial a3(ExtPolynomial::generator_a(3));
  const ExtPolynomial a4(ExtPolynomial::generator_a(4));
  CHECK_THROWS_AS(a3 + a4, DomainMismatchError);
  CHECK_THROWS_AS(a3 * a4, DomainMismatchError);
  CHECK((a3 * a3).leading() == ExtMonomial{2, 0, 0, 3});
  const ExtPolynomial x = parse_ext_polynomial("a*w2 + a + w3^2", 3);
  CHECK(x.a_coefficient(1) == P("w2 + 1"));
  CHECK(x.a_coefficient(0) == P("w3^2"));
  CHECK(x.max_a_exponent() == 1);
  CHECK(ExtPolynomial::lift(P("w2 + w3"), 3, 1) == parse_ext_polynomial("a*w2 + a*w3", 3));
}

}  // TEST_SUITE
