#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "grassgb/grassmann.hpp"
#include "support/known_values.hpp"
#include "support/oracles.hpp"

using namespace grassgb;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }

std::set<std::string> names(const AdditiveBasis& basis) {
  std::set<std::string> out;
  for (const auto& slice : basis.by_degree) {
    for (const auto& m : slice) out.insert(to_string(m));
  }
  return out;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  bool ok = true;
  for (const auto& c : checks) {
    if (c.status != CheckStatus::Pass) {
      MESSAGE(c.id << " t=" << c.t << ": " << c.witness);
      ok = false;
    }
  }
  return ok;
}

// Degree-r part of 1 / (1 + w1 + ... + wk) = sum_n (w1 + ... + wk)^n over
// GF(2), with exponent vectors as keys.
std::map<std::vector<Exponent>, int> series_inverse(unsigned r, unsigned k) {
  using Poly = std::map<std::vector<Exponent>, int>;
  Poly power{{std::vector<Exponent>(k, 0), 1}};  // (w1 + ... + wk)^0
  Poly total;
  for (unsigned n = 0; n <= r; ++n) {
    for (const auto& [e, coeff] : power) {
      unsigned degree = 0;
      for (unsigned i = 0; i < k; ++i) degree += (i + 1) * e[i];
      if (degree == r && coeff % 2) total[e] ^= 1;
    }
    Poly next;
    for (const auto& [e, coeff] : power) {
      if (coeff % 2 == 0) continue;
      for (unsigned i = 0; i < k; ++i) {
        auto f = e;
        ++f[i];
        unsigned degree = 0;
        for (unsigned j = 0; j < k; ++j) degree += (j + 1) * f[j];
        if (degree <= r) next[f] ^= 1;
      }
    }
    power = std::move(next);
  }
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return total;
}

}  // namespace

TEST_SUITE("grassmann") {

TEST_CASE("tower configuration") {
  const TowerConfig cfg(4);
  CHECK(cfg.n() == 16);
  CHECK(cfg.dim() == 39);
  CHECK(cfg.a_degree() == 15);
  CHECK(cfg.basis_size() == 70);
  CHECK_THROWS_AS(TowerConfig(1), UsageError);
  CHECK_THROWS_AS(TowerConfig(21), UsageError);
  CHECK_NOTHROW(TowerConfig(24, 24));
  CHECK_THROWS_AS(TowerConfig(5, 31), UsageError);
}

TEST_CASE("small generators") {
  for (const auto& [r, text] : known::kSmallG) {
    CHECK_MESSAGE(to_string(g_poly(r)) == text, "r=" << r);
    CHECK(to_string(g_poly_rec(r)) == text);
  }
  CHECK(g_poly(0) == Polynomial::one());
  CHECK(g_poly_rec(4) == P("w2^2"));
  CHECK(g_poly_rec(8) == P("w2^4 + w2*w3^2"));
}

TEST_CASE("closed form and recurrence agree") {
  const auto seq = g_sequence(4096);
  for (std::uint64_t r = 0; r <= 4096; ++r) {
    const Polynomial g = g_poly(r);
    REQUIRE_MESSAGE(g == seq[r], "r=" << r);
    CHECK(g.is_homogeneous());
    for (const Monomial& m : g.terms()) CHECK(m.weighted_degree() == r);
  }
  for (unsigned t = 2; t <= 16; ++t) {
    const std::uint64_t n = std::uint64_t{1} << t;
    for (std::uint64_t r : {n - 3, n - 2, n - 1, n, 3 * n}) CHECK(g_poly_rec(r) == g_poly(r));
  }
}

TEST_CASE("vanishing family") {
  for (unsigned t = 2; t <= 16; ++t) {
    const std::uint64_t n = std::uint64_t{1} << t;
    CHECK(g_poly(n - 3).is_zero());
    CHECK(g_poly(n) == g_poly(n - 2) * Monomial{1, 0});
  }
}

TEST_CASE("wbar examples") {
  CHECK(to_string(wbar(0, 3)) == "1");
  CHECK(to_string(wbar(1, 3)) == "w1");
  CHECK(to_string(wbar(2, 3)) == "w1^2 + w2");
  CHECK(to_string(wbar(3, 1)) == "w1^3");
  CHECK_THROWS_AS(wbar(2, 0), UsageError);
  CHECK_THROWS_AS(wbar(513, 3), UsageError);
  CHECK_THROWS_AS(wbar(2, 9), UsageError);
}

TEST_CASE("wbar agrees with series inversion and with its recurrence") {
  for (unsigned k = 1; k <= 5; ++k) {
    for (unsigned r = 0; r <= 12; ++r) {
      const WPolynomial w = wbar(r, k);
      const auto expected = series_inverse(r, k);
      std::vector<std::vector<Exponent>> keys;
      for (const auto& kv : expected) keys.push_back(kv.first);
      std::sort(keys.begin(), keys.end(), std::greater<>{});
      CHECK_MESSAGE(w.terms == keys, "r=" << r << " k=" << k);
      CHECK(w == wbar_recurrence(r, k));
    }
  }
  for (unsigned r = 0; r <= 160; r += 7) CHECK(wbar(r, 8) == wbar_recurrence(r, 8));
}

TEST_CASE("dropping w1 from wbar(r, 3) gives g_r") {
  for (unsigned r = 0; r <= 200; ++r) {
    std::vector<Monomial> terms;
    for (const auto& e : wbar(r, 3).terms) {
      if (e[0] == 0) terms.push_back({e[1], e[2]});
    }
    CHECK(Polynomial::from_terms(terms) == g_poly(r));
  }
}

TEST_CASE("f polynomials and their leading monomials") {
  CHECK(f_poly(TowerConfig(3), 0) == P("w2^3 + w3^2"));
  CHECK(f_poly(TowerConfig(2), 1) == P("w3"));
  CHECK(f_poly(TowerConfig(4), 3) == P("w3^7"));
  CHECK(f_poly(TowerConfig(4), 4).is_zero());
  CHECK_THROWS_AS(f_poly(TowerConfig(4), 5), UsageError);
  CHECK_THROWS_AS(lm_f_closed_form(TowerConfig(4), 4), UsageError);

  std::vector<std::string> lms;
  for (unsigned i = 0; i < 4; ++i) lms.push_back(to_string(lm_f_closed_form(TowerConfig(4), i)));
  CHECK(lms == std::vector<std::string>{"w2^7", "w2^6*w3", "w2^4*w3^3", "w3^7"});
  CHECK(lm_f_closed_form(TowerConfig(2), 0) == Monomial{1, 0});
  CHECK(lm_f_closed_form(TowerConfig(3), 1) == Monomial{2, 1});

  for (unsigned t = 2; t <= 16; ++t) {
    const TowerConfig cfg(t);
    for (unsigned i = 0; i < t; ++i) {
      const Polynomial f = f_poly(cfg, i);
      REQUIRE_FALSE(f.is_zero());
      CHECK(f.leading() == lm_f_closed_form(cfg, i));
      if (i > 0) CHECK(lm_f_closed_form(cfg, i - 1) > lm_f_closed_form(cfg, i));
    }
    CHECK(f_poly(cfg, t - 1) == Polynomial(Monomial{0, static_cast<Exponent>(cfg.n() / 2 - 1)}));
  }
}

TEST_CASE("claimed and extended bases") {
  const auto t2 = claimed_gb(TowerConfig(2));
  REQUIRE(t2.size() == 2);
  CHECK(t2[0] == P("w2"));
  CHECK(t2[1] == P("w3"));
  const auto t3 = claimed_gb(TowerConfig(3));
  REQUIRE(t3.size() == 3);
  CHECK(t3[0] == P("w2^3 + w3^2"));
  CHECK(t3[1] == P("w2^2*w3"));
  CHECK(t3[2] == P("w3^3"));
  const auto ext = extended_gb(TowerConfig(4));
  std::vector<std::string> lms;
  for (const auto& m : ext.leading_monomials()) lms.push_back(to_string(m));
  CHECK(lms == std::vector<std::string>{"w2^7", "w2^6*w3", "w2^4*w3^3", "w3^7", "a^2"});
}

TEST_CASE("a^2 + P a keeps leading monomial a^2 and the Groebner property") {
  oracle::Gen gen(31);
  for (unsigned t = 2; t <= 5; ++t) {
    const TowerConfig cfg(t);
    for (int trial = 0; trial < 10; ++trial) {
      const Polynomial tail = gen.homogeneous(cfg.a_degree());
      const auto f = detail::extended_gb_with(cfg, tail);
      CHECK(f.leading_monomials().back() == ExtMonomial{2, 0, 0, t});
      CHECK(is_groebner(f));
    }
  }
}

TEST_CASE("additive basis matches the transcribed lists") {
  CHECK(names(additive_basis(TowerConfig(2))) == std::set<std::string>{"1", "a"});
  const auto t3 = additive_basis(TowerConfig(3));
  CHECK(t3.size() == 14);
  CHECK(names(t3) == std::set<std::string>(known::kBasisT3.begin(), known::kBasisT3.end()));
  const auto t4 = additive_basis(TowerConfig(4));
  CHECK(t4.size() == 70);
  CHECK(names(t4) == std::set<std::string>(known::kBasisT4.begin(), known::kBasisT4.end()));
  // The transcribed lists are sorted by degree.
  for (const auto* list : {&known::kBasisT3, &known::kBasisT4}) {
    const unsigned t = list == &known::kBasisT3 ? 3 : 4;
    std::uint64_t last = 0;
    for (const auto& text : *list) {
      const auto d = parse_ext_polynomial(text, t).leading().weighted_degree();
      CHECK(d >= last);
      last = d;
    }
  }
}

TEST_CASE("additive basis equals the standard monomials, degree by degree") {
  for (unsigned t = 2; t <= 7; ++t) {
    const TowerConfig cfg(t);
    const auto ext = extended_gb(cfg);
    const auto basis = additive_basis(cfg);
    REQUIRE(basis.by_degree.size() == cfg.dim() + 1);
    for (std::uint64_t d = 0; d <= cfg.dim() + 5; ++d) {
      const auto standard = standard_monomials(ext, d);
      const auto slice = basis_in_degree(cfg, d);
      CHECK_MESSAGE(slice == standard, "t=" << t << " d=" << d);
      if (d <= cfg.dim()) CHECK(basis.by_degree[d] == slice);
      for (const auto& m : slice) CHECK(in_additive_basis(cfg, m));
    }
  }
}

TEST_CASE("membership criterion matches the b-bound") {
  for (unsigned t = 2; t <= 8; ++t) {
    const TowerConfig cfg(t);
    for (Exponent c = 0; c <= cfg.n(); ++c) {
      for (Exponent b = 0; b <= cfg.n(); ++b) {
        const bool literal = in_additive_basis(cfg, ExtMonomial{0, b, c, t});
        CHECK(literal == (b < basis_b_bound(cfg, c)));
      }
    }
    CHECK_FALSE(in_additive_basis(cfg, ExtMonomial{2, 0, 0, t}));
  }
}

TEST_CASE("basis size") {
  for (unsigned t = 2; t <= 12; ++t) {
    const TowerConfig cfg(t);
    const auto basis = additive_basis(cfg);
    CHECK(basis.size() == cfg.basis_size());
    CHECK(betti_table(cfg).total() == cfg.basis_size());
  }
  CHECK_THROWS_AS(additive_basis(TowerConfig(12), 1000), ResourceError);
}

TEST_CASE("Betti numbers") {
  const auto t3 = betti_table(TowerConfig(3));
  CHECK(t3.dims.size() == 16);
  CHECK(t3.dims[7] == 1);
  CHECK(t3.dims[8] == 1);
  CHECK(t3.dims[9] == 1);
  CHECK(t3.dims[13] == 1);
  CHECK(t3.dims[14] == 0);
  CHECK(t3.dims[15] == 1);
  const auto t4 = betti_table(TowerConfig(4));
  const std::vector<std::pair<unsigned, unsigned>> spots{
      {15, 3}, {16, 2}, {17, 2}, {30, 2}, {31, 2}, {32, 1}, {37, 1}, {38, 0}, {39, 1}};
  for (const auto& [d, v] : spots) CHECK_MESSAGE(t4.dims[d] == v, "degree " << d);
  for (unsigned t = 2; t <= 12; ++t) {
    const TowerConfig cfg(t);
    const auto table = betti_table(cfg);
    CHECK(table.dims.front() == 1);
    CHECK(table.dims.back() == 1);
    CHECK(table.is_symmetric());
    const auto top = basis_in_degree(cfg, cfg.dim());
    REQUIRE(top.size() == 1);
    CHECK(top[0] == ExtMonomial{1, static_cast<Exponent>(cfg.n() / 4 - 1),
                                static_cast<Exponent>(cfg.n() / 2 - 2), t});
  }
}

TEST_CASE("normal forms in the cohomology ring") {
  for (unsigned t = 2; t <= 12; ++t) {
    const TowerConfig cfg(t);
    const auto ring = CohomologyRing::create(cfg);
    const Exponent h = static_cast<Exponent>(cfg.n() / 2 - 2);
    CHECK(ring->normal_form(Polynomial(Monomial{0, h + 1})).is_zero());
    const auto w3h = ring->normal_form(Polynomial(Monomial{0, h}));
    CHECK(w3h.value() == ExtPolynomial(ExtMonomial{0, 0, h, t}));
    CHECK((ring->a() * ring->a()).is_zero());
    CHECK(normal_form_coh(cfg, ExtPolynomial(ExtMonomial{2, 0, 0, t})).is_zero());
  }
  const auto r3 = CohomologyRing::create(TowerConfig(3));
  const auto r4 = CohomologyRing::create(TowerConfig(4));
  CHECK_THROWS_AS(r3->normal_form(parse_ext_polynomial("a", 4)), DomainMismatchError);
  CHECK_THROWS_AS(r3->a() + r4->a(), DomainMismatchError);
}

TEST_CASE("cohomology ring laws on random classes") {
  oracle::Gen gen(32);
  for (unsigned t = 3; t <= 5; ++t) {
    const TowerConfig cfg(t);
    const auto ring = CohomologyRing::create(cfg);
    auto random_class = [&]() {
      const Polynomial p0 = gen.polynomial(4, static_cast<std::uint32_t>(cfg.n() / 2));
      const Polynomial p1 = gen.polynomial(4, static_cast<std::uint32_t>(cfg.n() / 2));
      return ring->normal_form(ExtPolynomial::lift(p0, t) + ExtPolynomial::lift(p1, t, 1));
    };
    for (int trial = 0; trial < 100; ++trial) {
      const CohClass x = random_class(), y = random_class(), z = random_class();
      CHECK(x * y == y * x);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x + y) * (x + y) == x * x + y * y);
      CHECK(x * ring->one() == x);
      CHECK((x + x).is_zero());
      for (const auto& m : x.value().terms()) CHECK(in_additive_basis(cfg, m));
    }
  }
}

TEST_CASE("verifiers pass") {
  for (unsigned t = 2; t <= 8; ++t) {
    const TowerConfig cfg(t);
    CHECK_MESSAGE(all_pass(verify_reduced_gb(cfg)), "t=" << t);
    CHECK(all_pass(verify_leading_monomials(cfg)));
  }
  for (unsigned t = 2; t <= 12; ++t) {
    const TowerConfig cfg(t);
    CHECK_MESSAGE(all_pass(verify_spoly_identities(cfg)), "t=" << t);
    CHECK_MESSAGE(all_pass(verify_bounds(cfg)), "t=" << t);
    CHECK_MESSAGE(all_pass(verify_additive_basis(cfg)), "t=" << t);
  }
}

TEST_CASE("verify_reduced_gb surfaces the budget") {
  CHECK_THROWS_AS(verify_reduced_gb(TowerConfig(7), 5), ResourceError);
}

TEST_CASE("lower bound lemma scan") {
  const auto zero = check_lower_bound_lemma(0, 30);
  CHECK_FALSE(zero.counterexample);
  CHECK(zero.cases > 0);
  CHECK_FALSE(check_lower_bound_lemma(1, 20).counterexample);
  CHECK_FALSE(check_lower_bound_lemma(5, 40).counterexample);
  for (unsigned i = 0; i <= 10; ++i) CHECK_FALSE(check_lower_bound_lemma(i, 64).counterexample);
  CHECK_THROWS_AS(check_lower_bound_lemma(13, 4), UsageError);
}

}  // TEST_SUITE
