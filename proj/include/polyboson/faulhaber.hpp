#ifndef POLYBOSON_FAULHABER_HPP
#define POLYBOSON_FAULHABER_HPP

#include <vector>

#include "polyboson/rational.hpp"

namespace polyboson {

// Coefficients D_0..D_rmax of the closed-form power-sum expansion
//   sum_{j=0}^{M-1} j^s = M^{s+1}/(s+1) - M^s/2
//                         + sum_r D_r [prod_{p=0}^{2r}(s-p)] M^{s-2r-1},
// terms with exponent s-2r-1 < 1 dropped. D_r = B_{2r+2}/(2r+2)! with B the
// Bernoulli numbers, but the table is always produced by the linear solve in
// derive_dr, never hard-coded.
struct DrTable {
  std::vector<Rational> values;

  long rmax() const { return static_cast<long>(values.size()) - 1; }
};

// sum_{j=0}^{M-1} j^s by direct summation; 0^0 = 1, empty sum = 0.
Rational power_sum(long s, long M);

// sum_{j=0}^{m1-1} (j - m2)^s by direct summation.
Rational shifted_power_sum(long s, long m1, long m2);

// Right-hand side of the closed-form expansion above, using dr.
Rational faulhaber_closed_form(long s, long M, const DrTable& dr);

// Determines D_0..D_rmax by exact sequential solve against power_sum and
// verifies the expansion for all s <= 2*rmax+2, M <= 20 before returning.
// Throws std::logic_error if the verification fails.
DrTable derive_dr(long rmax);

enum class BracketVariant { two_var, neg_single, single };

// The bracketed diagonal factors of the boson realizations, evaluated at
// integer occupation eigenvalues. Variant two_var uses both m1 and m2 (sums
// over monomials in m2 and m2-m1); neg_single and single use m1 only, with
// powers of -m1 and m1 respectively. Empty q-sums and negative-exponent
// monomials contribute 0. rlimit = -1 disables the D_r tail entirely.
Rational bracket_value(BracketVariant variant, long s, long m1, long m2,
                       const DrTable& dr, long rlimit);

}  // namespace polyboson

#endif
