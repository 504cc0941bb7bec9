#include "polyboson/pbw.hpp"

#include <stdexcept>

namespace polyboson {

void add_term(UEAElement& e, const PBWMonomial& x, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

UEAElement scale(const Rational& c, const UEAElement& e) {
  UEAElement out;
  if (c.is_zero()) return out;
  for (const auto& [x, v] : e) out.emplace(x, c * v);
  return out;
}

UEAElement add(const UEAElement& a, const UEAElement& b) {
  UEAElement out = a;
  for (const auto& [x, v] : b) add_term(out, x, v);
  return out;
}

UEAElement master_action(const AlgebraSpec& alg, Generator gen, const PBWMonomial& x) {
  UEAElement out;
  switch (gen) {
    case Generator::J3:
      add_term(out, {x.m1, x.m2, x.m3 + 1}, Rational(1));
      add_term(out, x, Rational(x.m1 - x.m2));
      break;
    case Generator::Jplus:
      add_term(out, {x.m1 + 1, x.m2, x.m3}, Rational(1));
      break;
    case Generator::Jminus:
      add_term(out, {x.m1, x.m2 + 1, x.m3}, Rational(1));
      for (long h = 0; h <= alg.n; ++h)
        for (long i = h; i <= alg.n; ++i) {
          if (alg.coeffs[i].is_zero()) continue;
          Rational jsum(0);
          for (long j = 0; j < x.m1; ++j) jsum += int_pow(j - x.m2, i - h);
          add_term(out, {x.m1 - 1, x.m2, x.m3 + h},
                   -alg.coeffs[i] * binomial(i, h) * jsum);
        }
      break;
  }
  return out;
}

UEAElement master_action(const AlgebraSpec& alg, Generator gen, const UEAElement& e) {
  UEAElement out;
  for (const auto& [x, c] : e)
    for (const auto& [y, v] : master_action(alg, gen, x)) add_term(out, y, c * v);
  return out;
}

void add_term(QuotientElement& e, const QuotientMonomial& x, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

namespace {

void require_ideal(const QuotientMonomial& x, Ideal want, const char* who) {
  if (x.ideal != want) throw std::invalid_argument(std::string(who) + ": wrong ideal tag");
}

}  // namespace

QuotientElement induced_action_I1(const AlgebraSpec& alg, const Rational& capital_lambda,
                                  Generator gen, const QuotientMonomial& x) {
  require_ideal(x, Ideal::I1, "induced_action_I1");
  QuotientElement out;
  switch (gen) {
    case Generator::J3:
      add_term(out, x, capital_lambda + Rational(x.ea - x.eb));
      break;
    case Generator::Jplus:
      add_term(out, {Ideal::I1, x.ea + 1, x.eb}, Rational(1));
      break;
    case Generator::Jminus:
      add_term(out, {Ideal::I1, x.ea, x.eb + 1}, Rational(1));
      for (long h = 0; h <= alg.n; ++h)
        for (long i = h; i <= alg.n; ++i) {
          if (alg.coeffs[i].is_zero()) continue;
          Rational jsum(0);
          for (long j = 0; j < x.ea; ++j) jsum += int_pow(j - x.eb, i - h);
          add_term(out, {Ideal::I1, x.ea - 1, x.eb},
                   -alg.coeffs[i] * binomial(i, h) * jsum * capital_lambda.pow(h));
        }
      break;
  }
  return out;
}

QuotientElement induced_action_I2(const AlgebraSpec& alg, const Rational& lambda,
                                  Generator gen, const QuotientMonomial& x) {
  require_ideal(x, Ideal::I2, "induced_action_I2");
  QuotientElement out;
  switch (gen) {
    case Generator::J3:
      add_term(out, {Ideal::I2, x.ea, x.eb + 1}, Rational(1));
      add_term(out, x, Rational(x.ea));
      break;
    case Generator::Jplus:
      add_term(out, {Ideal::I2, x.ea + 1, x.eb}, Rational(1));
      break;
    case Generator::Jminus:
      for (long r = 0; r <= x.eb; ++r)
        add_term(out, {Ideal::I2, x.ea, r}, lambda * binomial(x.eb, r));
      for (long h = 0; h <= alg.n; ++h)
        for (long i = h; i <= alg.n; ++i) {
          if (alg.coeffs[i].is_zero()) continue;
          Rational jsum(0);
          for (long j = 0; j < x.ea; ++j) jsum += int_pow(j, i - h);
          add_term(out, {Ideal::I2, x.ea - 1, x.eb + h},
                   -alg.coeffs[i] * binomial(i, h) * jsum);
        }
      break;
  }
  return out;
}

QuotientElement induced_action_I3(const AlgebraSpec& alg, const Rational& kappa,
                                  Generator gen, const QuotientMonomial& x) {
  require_ideal(x, Ideal::I3, "induced_action_I3");
  QuotientElement out;
  switch (gen) {
    case Generator::J3:
      add_term(out, x, kappa + Rational(x.ea));
      break;
    case Generator::Jplus:
      add_term(out, {Ideal::I3, x.ea + 1, 0}, Rational(1));
      break;
    case Generator::Jminus:
      for (long h = 0; h <= alg.n; ++h)
        for (long i = h; i <= alg.n; ++i) {
          if (alg.coeffs[i].is_zero()) continue;
          Rational jsum(0);
          for (long j = 0; j < x.ea; ++j) jsum += int_pow(j, i - h);
          add_term(out, {Ideal::I3, x.ea - 1, 0},
                   -alg.coeffs[i] * binomial(i, h) * jsum * kappa.pow(h));
        }
      break;
  }
  return out;
}

QuotientElement induced_action(const AlgebraSpec& alg, Ideal ideal, const Rational& param,
                               Generator gen, const QuotientMonomial& x) {
  switch (ideal) {
    case Ideal::I1: return induced_action_I1(alg, param, gen, x);
    case Ideal::I2: return induced_action_I2(alg, param, gen, x);
    case Ideal::I3: return induced_action_I3(alg, param, gen, x);
  }
  throw std::logic_error("induced_action: bad ideal");
}

QuotientElement induced_action(const AlgebraSpec& alg, Ideal ideal, const Rational& param,
                               Generator gen, const QuotientElement& e) {
  QuotientElement out;
  for (const auto& [x, c] : e)
    for (const auto& [y, v] : induced_action(alg, ideal, param, gen, x))
      add_term(out, y, c * v);
  return out;
}

std::vector<Rational> swap_power(long l, long /*j*/, bool plus_sign, long m) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(l > 0 ? l : 0));
  long signed_m = plus_sign ? m : -m;
  for (long i = 0; i < l; ++i) out.push_back(binomial(l, i) * int_pow(signed_m, l - i));
  return out;
}

LoweringCommutator commute_lowering_raising(const AlgebraSpec& alg, long m) {
  if (m < 1) throw std::invalid_argument("commute_lowering_raising: m must be >= 1");
  LoweringCommutator out;
  out.raising_power = m - 1;
  out.poly.assign(static_cast<std::size_t>(alg.n + 1), Rational(0));
  for (long i = 0; i <= alg.n; ++i) {
    if (alg.coeffs[i].is_zero()) continue;
    for (long k = 0; k < m; ++k)
      for (long t = 0; t <= i; ++t)
        out.poly[t] += alg.coeffs[i] * binomial(i, t) * int_pow(k, i - t);
  }
  return out;
}

}  // namespace polyboson
