#include "polyboson/algebra.hpp"

#include <stdexcept>

namespace polyboson {

AlgebraSpec make_algebra(long n, std::vector<Rational> coeffs) {
  if (n < 0) throw std::invalid_argument("make_algebra: n must be non-negative");
  if (static_cast<long>(coeffs.size()) != n + 1)
    throw std::invalid_argument("make_algebra: expected n+1 coefficients");
  if (n > 0 && coeffs.back().is_zero())
    throw std::invalid_argument("make_algebra: leading coefficient c_n must be nonzero");
  return AlgebraSpec{n, std::move(coeffs)};
}

AlgebraSpec preset_su2() { return make_algebra(1, {Rational(0), Rational(2)}); }

AlgebraSpec preset_su11() { return make_algebra(1, {Rational(0), Rational(-2)}); }

AlgebraSpec preset_higgs(const Rational& c1, const Rational& c3) {
  if (c3.is_zero())
    throw std::invalid_argument("preset_higgs: c3 = 0 degenerates to degree 1; use make_algebra");
  return make_algebra(3, {Rational(0), c1, Rational(0), c3});
}

AlgebraSpec preset_quadratic(const Rational& c0, const Rational& c1, const Rational& c2) {
  return make_algebra(2, {c0, c1, c2});
}

std::vector<std::pair<long, Rational>> rhs_coefficient_table(const AlgebraSpec& alg) {
  std::vector<std::pair<long, Rational>> out;
  for (long i = 0; i <= alg.n; ++i)
    if (!alg.coeffs[i].is_zero()) out.emplace_back(i, alg.coeffs[i]);
  return out;
}

}  // namespace polyboson
