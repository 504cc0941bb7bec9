#ifndef POLYBOSON_ALGEBRA_HPP
#define POLYBOSON_ALGEBRA_HPP

#include <utility>
#include <vector>

#include "polyboson/rational.hpp"

namespace polyboson {

// The algebra [J3, J±] = ±J±, [J+, J-] = sum_{i=0}^{n} c_i J3^i,
// given by the polynomial degree n and its rational coefficients.
struct AlgebraSpec {
  long n = 0;
  std::vector<Rational> coeffs;  // c_0 .. c_n, exactly n+1 entries

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

// Validates and builds an AlgebraSpec. Throws std::invalid_argument on a
// length mismatch or a zero leading coefficient with n > 0.
AlgebraSpec make_algebra(long n, std::vector<Rational> coeffs);

AlgebraSpec preset_su2();
AlgebraSpec preset_su11();
// n = 3, coeffs [0, c1, 0, c3]; throws if c3 = 0 (not degree 3).
AlgebraSpec preset_higgs(const Rational& c1, const Rational& c3);
AlgebraSpec preset_quadratic(const Rational& c0, const Rational& c1, const Rational& c2);

// Sparse view of the nonzero (i, c_i) pairs, ascending in i.
std::vector<std::pair<long, Rational>> rhs_coefficient_table(const AlgebraSpec& alg);

}  // namespace polyboson

#endif
