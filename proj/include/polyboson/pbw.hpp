#ifndef POLYBOSON_PBW_HPP
#define POLYBOSON_PBW_HPP

#include <compare>
#include <map>
#include <vector>

#include "polyboson/algebra.hpp"
#include "polyboson/rational.hpp"

namespace polyboson {

enum class Generator { J3, Jplus, Jminus };

// Ordered monomial X(m1,m2,m3) = J+^m1 J-^m2 J3^m3; (0,0,0) is the identity.
struct PBWMonomial {
  long m1 = 0, m2 = 0, m3 = 0;

  friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
};

// Finite rational combination of PBW monomials, canonical (no zeros).
using UEAElement = std::map<PBWMonomial, Rational>;

void add_term(UEAElement& e, const PBWMonomial& x, const Rational& c);
UEAElement scale(const Rational& c, const UEAElement& e);
UEAElement add(const UEAElement& a, const UEAElement& b);

// Left multiplication of a generator on a PBW basis monomial, expanded back
// into the PBW basis. The lowering action carries the triple sum over
// (h, i, j) with coefficient c_i binom(i,h) (j-m2)^{i-h}.
UEAElement master_action(const AlgebraSpec& alg, Generator gen, const PBWMonomial& x);
UEAElement master_action(const AlgebraSpec& alg, Generator gen, const UEAElement& e);

enum class Ideal { I1, I2, I3 };

// Basis monomial of a quotient space: (m1,m2) mod I1, (m1,m3) mod I2,
// (m1) mod I3 (eb unused there).
struct QuotientMonomial {
  Ideal ideal = Ideal::I1;
  long ea = 0;  // always the J+ exponent m1
  long eb = 0;  // m2 for I1, m3 for I2, unused for I3

  friend auto operator<=>(const QuotientMonomial&, const QuotientMonomial&) = default;
};

using QuotientElement = std::map<QuotientMonomial, Rational>;

void add_term(QuotientElement& e, const QuotientMonomial& x, const Rational& c);

// Induced representations on the quotients by the left ideals generated by
// J3 - L, J- - l, and {J-, J3 - k} respectively. Throw on an ideal-tag
// mismatch. Note the I3 lowering action includes the structure-constant
// factor c_i alongside binom(i,h); this is the reading under which the
// defining relations close (enforced by the property tests).
QuotientElement induced_action_I1(const AlgebraSpec& alg, const Rational& capital_lambda,
                                  Generator gen, const QuotientMonomial& x);
QuotientElement induced_action_I2(const AlgebraSpec& alg, const Rational& lambda,
                                  Generator gen, const QuotientMonomial& x);
QuotientElement induced_action_I3(const AlgebraSpec& alg, const Rational& kappa,
                                  Generator gen, const QuotientMonomial& x);

QuotientElement induced_action(const AlgebraSpec& alg, Ideal ideal, const Rational& param,
                               Generator gen, const QuotientMonomial& x);
QuotientElement induced_action(const AlgebraSpec& alg, Ideal ideal, const Rational& param,
                               Generator gen, const QuotientElement& e);

// Coefficients {binom(l,i) (sign m)^{l-i}} for i = 0..l-1 in the reordering
//   (J3+j)^l J±^m = J±^m [ (J3+j)^l + sum_{i<l} coeff_i (J3+j)^i ].
// The shift j does not enter the coefficients.
std::vector<Rational> swap_power(long l, long j, bool plus_sign, long m);

// [J-, J+^m] = -J+^{m-1} P(J3) with P = sum_i sum_{k<m} c_i (J3+k)^i.
// Returns P expanded in powers of J3 (degree n) plus the prefactor data.
struct LoweringCommutator {
  long raising_power = 0;           // m-1
  std::vector<Rational> poly;       // coefficients of J3^0..J3^n, negated prefactor applied by caller
};
LoweringCommutator commute_lowering_raising(const AlgebraSpec& alg, long m);

}  // namespace polyboson

#endif
