#ifndef GRASSGB_STEENROD_HPP
#define GRASSGB_STEENROD_HPP

// Sq^1 and Sq^2 on the (w2, w3) subalgebra, a Cartan-recursion oracle for
// them, their action on cohomology classes where it is determined, and the
// constraint system showing a^2 = 0.

#include <cstdint>
#include <vector>

#include "grassgb/gf2_linalg.hpp"
#include "grassgb/gf2_poly.hpp"
#include "grassgb/grassmann.hpp"
#include "grassgb/report.hpp"

namespace grassgb {

// Sq^1(w2^b w3^c) = b w2^(b-1) w3^(c+1), extended additively.
Polynomial sq1(const Polynomial& p);
// Sq^2(w2^b w3^c) = (b + c) w2^(b+1) w3^c + binom(b, 2) w2^(b-2) w3^(c+2).
Polynomial sq2(const Polynomial& p);
// j must be 0, 1 or 2; Sq^0 is the identity.
Polynomial sq(unsigned j, const Polynomial& p);

// Sq^j (j = 1, 2) computed by peeling one generator off each monomial and
// applying the Cartan formula, starting from Sq^1 w2 = w3, Sq^1 w3 = 0,
// Sq^2 w2 = w2^2, Sq^2 w3 = w2 w3.
Polynomial sq_cartan_oracle(unsigned j, const Polynomial& p);

// Sq^j of a class. The terms Sq^s(a) Sq^(j-s)(m) coming from a monomial a m
// lie in the (w2, w3) subalgebra; they are dropped when their degree exceeds
// its top degree. Otherwise IndeterminateResult is thrown.
CohClass sq_on_coh(unsigned j, const CohClass& x);

// Linear system for the coefficients lambda_k in
// a^2 = sum_k lambda_k a w2^(2^(t-1)-2-3k) w3^(2k+1).
struct SqConstraintSystem {
  unsigned t = 2;
  std::vector<std::uint64_t> unknowns;    // the k values, ascending
  std::vector<ExtMonomial> candidates;    // one per unknown
  std::vector<ExtMonomial> sq1_targets;   // row labels of sq1_rows
  Gf2Matrix sq1_rows;                     // rows x unknowns
  std::vector<ExtMonomial> sq2_targets;
  Gf2Matrix sq2_rows;

  Gf2Matrix combined() const { return sq1_rows.stacked(sq2_rows); }
};

// The candidates are read off the additive basis in degree 2 deg(a); each
// column is the normal form of Sq^j(a m) with the Sq^s(a) terms removed.
SqConstraintSystem build_a2_constraints(const TowerConfig& cfg);

// Checks a2.candidates, a2.cross_terms, a2.sq1_rows, a2.sq2_rows, a2.kernel.
std::vector<CheckResult> verify_a2_zero(const TowerConfig& cfg);

}  // namespace grassgb

#endif  // GRASSGB_STEENROD_HPP
