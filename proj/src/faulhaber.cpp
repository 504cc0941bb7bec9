#include "polyboson/faulhaber.hpp"

#include <stdexcept>

namespace polyboson {

Rational power_sum(long s, long M) {
  Rational acc(0);
  for (long j = 0; j < M; ++j) acc += int_pow(j, s);
  return acc;
}

Rational shifted_power_sum(long s, long m1, long m2) {
  Rational acc(0);
  for (long j = 0; j < m1; ++j) {
    long b = j - m2;
    // int_pow requires a non-negative exponent only; base may be negative.
    acc += int_pow(b, s);
  }
  return acc;
}

namespace {

// prod_{p=0}^{2r} (s - p), exact.
Rational falling_product(long s, long r) {
  Rational acc(1);
  for (long p = 0; p <= 2 * r; ++p) acc *= Rational(s - p);
  return acc;
}

}  // namespace

Rational faulhaber_closed_form(long s, long M, const DrTable& dr) {
  Rational rhs = int_pow(M, s + 1) / Rational(s + 1) - int_pow(M, s) / Rational(2);
  for (long r = 0; r <= dr.rmax(); ++r) {
    long e = s - 2 * r - 1;
    if (e < 1) continue;
    rhs += dr.values[r] * falling_product(s, r) * int_pow(M, e);
  }
  return rhs;
}

DrTable derive_dr(long rmax) {
  DrTable dr;
  for (long r = 0; r <= rmax; ++r) {
    long s = 2 * r + 2;
    // With D_0..D_{r-1} known, the expansion at (s, M) is linear in D_r with
    // coefficient prod(s-p) * M^{s-2r-1}, nonzero for M >= 1.
    DrTable partial = dr;
    partial.values.push_back(Rational(0));
    Rational coeff = falling_product(s, r) * int_pow(1, s - 2 * r - 1);
    Rational residual = power_sum(s, 1) - faulhaber_closed_form(s, 1, partial);
    Rational d = residual / coeff;
    dr.values.push_back(d);
    for (long M = 1; M <= s + 2; ++M)
      if (power_sum(s, M) != faulhaber_closed_form(s, M, dr))
        throw std::logic_error("derive_dr: inconsistent linear system");
  }
  for (long s = 1; s <= 2 * rmax + 2; ++s)
    for (long M = 0; M <= 20; ++M)
      if (power_sum(s, M) != faulhaber_closed_form(s, M, dr))
        throw std::logic_error("derive_dr: closed form fails verification");
  return dr;
}

namespace {

// sum_{q=0}^{qmax} m2^{e-q} (m2-m1)^q where e = qmax; 0 when qmax < 0.
Rational geometric_pair_sum(long qmax, long m1, long m2) {
  Rational acc(0);
  for (long q = 0; q <= qmax; ++q) acc += int_pow(m2, qmax - q) * int_pow(m2 - m1, q);
  return acc;
}

// base^e, or 0 when e < 0 (dropped monomial).
Rational monomial_or_zero(long base, long e) {
  if (e < 0) return Rational(0);
  return int_pow(base, e);
}

}  // namespace

Rational bracket_value(BracketVariant variant, long s, long m1, long m2,
                       const DrTable& dr, long rlimit) {
  if (rlimit > dr.rmax()) throw std::invalid_argument("bracket_value: rlimit exceeds DrTable");
  auto leading = [&](long e) {
    switch (variant) {
      case BracketVariant::two_var: return geometric_pair_sum(e, m1, m2);
      case BracketVariant::neg_single: return monomial_or_zero(-m1, e);
      case BracketVariant::single: return monomial_or_zero(m1, e);
    }
    return Rational(0);
  };
  Rational middle_sign = (variant == BracketVariant::single) ? Rational(-1) : Rational(1);
  Rational acc = leading(s) / Rational(s + 1) + middle_sign * leading(s - 1) / Rational(2);
  for (long r = 0; r <= rlimit; ++r)
    acc += dr.values[r] * falling_product(s, r) * leading(s - 2 * (r + 1));
  return acc;
}

}  // namespace polyboson
