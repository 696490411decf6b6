#include "grassgb/groebner.hpp"

namespace grassgb {

namespace {

// Appends w2^b w3^c of weighted degree d, with c ascending (so b, and with it
// the lex rank, descending).
template <class Emit>
void for_each_w_monomial(std::uint64_t degree, Emit&& emit) {
  for (std::uint64_t c = 0; 3 * c <= degree; ++c) {
    const std::uint64_t rest = degree - 3 * c;
    if (rest % 2 != 0) continue;
    const std::uint64_t b = rest / 2;
    if (b > kMaxExponent || c > kMaxExponent) throw OverflowError("degree too large to enumerate");
    emit(static_cast<Exponent>(b), static_cast<Exponent>(c));
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::uint64_t degree) {
  std::vector<Monomial> out;
  for_each_w_monomial(degree, [&](Exponent b, Exponent c) { out.push_back({b, c}); });
  return out;
}

std::vector<ExtMonomial> monomials_of_degree(std::uint64_t degree, unsigned t) {
  const std::uint64_t a_degree = (std::uint64_t{1} << t) - 1;
  std::vector<ExtMonomial> out;
  const std::uint64_t r_max = degree / a_degree;
  for (std::uint64_t r = r_max + 1; r-- > 0;) {
    for_each_w_monomial(degree - r * a_degree, [&](Exponent b, Exponent c) {
      out.push_back({static_cast<Exponent>(r), b, c, t});
    });
  }
  return out;
}

std::vector<Monomial> standard_monomials(const BasisSet<Polynomial>& basis, std::uint64_t degree) {
  std::vector<Monomial> out;
  for (const Monomial& m : monomials_of_degree(degree)) {
    if (!basis.first_divisor(m)) out.push_back(m);
  }
  return out;
}

std::vector<ExtMonomial> standard_monomials(const BasisSet<ExtPolynomial>& basis,
                                            std::uint64_t degree) {
  if (basis.empty()) throw UsageError("cannot infer the tower parameter from an empty basis");
  std::vector<ExtMonomial> out;
  for (const ExtMonomial& m : monomials_of_degree(degree, basis[0].t())) {
    if (!basis.first_divisor(m)) out.push_back(m);
  }
  return out;
}

}  // namespace grassgb
