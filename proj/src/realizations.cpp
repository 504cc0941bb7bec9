#include "polyboson/realizations.hpp"

#include <stdexcept>

namespace polyboson {

std::string kind_name(RealizationKind k) {
  switch (k) {
    case RealizationKind::fock3: return "fock3";
    case RealizationKind::three_boson: return "three_boson";
    case RealizationKind::two_boson_central: return "two_boson_central";
    case RealizationKind::two_boson_lowering: return "two_boson_lowering";
    case RealizationKind::single_boson: return "single_boson";
  }
  throw std::logic_error("kind_name: bad kind");
}

RealizationKind kind_from_name(const std::string& name) {
  if (name == "fock3") return RealizationKind::fock3;
  if (name == "three_boson") return RealizationKind::three_boson;
  if (name == "two_boson_central") return RealizationKind::two_boson_central;
  if (name == "two_boson_lowering") return RealizationKind::two_boson_lowering;
  if (name == "single_boson") return RealizationKind::single_boson;
  throw std::invalid_argument("unknown realization kind '" + name + "'");
}

std::size_t kind_mode_count(RealizationKind k) {
  switch (k) {
    case RealizationKind::fock3:
    case RealizationKind::three_boson: return 3;
    case RealizationKind::two_boson_central:
    case RealizationKind::two_boson_lowering: return 2;
    case RealizationKind::single_boson: return 1;
  }
  throw std::logic_error("kind_mode_count: bad kind");
}

bool kind_has_parameter(RealizationKind k) {
  return k == RealizationKind::two_boson_central || k == RealizationKind::two_boson_lowering ||
         k == RealizationKind::single_boson;
}

namespace {

void require_modes(const SpaceSpec& spec, std::size_t want, const char* who) {
  if (spec.modes() != want)
    throw std::invalid_argument(std::string(who) + ": wrong number of modes");
}

Rational parity_sign(long e) {  // (-1)^e
  return (e % 2 == 0) ? Rational(1) : Rational(-1);
}

// Per-generator max occupation raise doubled (degree-2 words); the lowering
// generator raises the inhomogeneous mode by up to n, and the RHS polynomial
// sum c_i J3^i raises it by at most n as well, so 2*max(1,n) covers both.
std::vector<long> standard_margins(RealizationKind kind, long n) {
  long hi = 2 * std::max(1L, n);
  switch (kind) {
    case RealizationKind::fock3:
    case RealizationKind::three_boson: return {2, 2, hi};
    case RealizationKind::two_boson_central: return {2, 2};
    case RealizationKind::two_boson_lowering: return {2, hi};
    case RealizationKind::single_boson: return {2};
  }
  throw std::logic_error("standard_margins: bad kind");
}

}  // namespace

RealizationSet build_fock_rep(const AlgebraSpec& alg, const SpaceSpec& spec) {
  require_modes(spec, 3, "build_fock_rep");
  SparseOperator J3(spec), Jp(spec), Jm(spec);
  const auto basis = enumerate_basis(spec);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& st = basis[col];
    const long m1 = st[0], m2 = st[1], m3 = st[2];
    if (m3 < spec.caps[2]) J3.add_entry(state_index(spec, {m1, m2, m3 + 1}), col, Rational(1));
    J3.add_entry(col, col, Rational(m1 - m2));
    if (m1 < spec.caps[0]) Jp.add_entry(state_index(spec, {m1 + 1, m2, m3}), col, Rational(1));
    if (m2 < spec.caps[1]) Jm.add_entry(state_index(spec, {m1, m2 + 1, m3}), col, Rational(1));
    if (m1 > 0) {
      for (long h = 0; h <= alg.n; ++h) {
        if (m3 + h > spec.caps[2]) continue;
        for (long i = h; i <= alg.n; ++i) {
          if (alg.coeffs[i].is_zero()) continue;
          Rational c = -alg.coeffs[i] * binomial(i, h) * shifted_power_sum(i - h, m1, m2);
          Jm.add_entry(state_index(spec, {m1 - 1, m2, m3 + h}), col, c);
        }
      }
    }
  }
  return {RealizationKind::fock3, alg, spec, std::nullopt,
          std::move(J3), std::move(Jp), std::move(Jm), standard_margins(RealizationKind::fock3, alg.n)};
}

RealizationSet build_three_boson(const AlgebraSpec& alg, const SpaceSpec& spec, const DrTable& dr) {
  require_modes(spec, 3, "build_three_boson");
  const long rlimit = alg.n / 2 - 1;
  if (rlimit > dr.rmax()) throw std::invalid_argument("build_three_boson: DrTable too short");
  SparseOperator J3 = op_add(creation(spec, 2), op_add(number(spec, 0), op_scale(Rational(-1), number(spec, 1))));
  SparseOperator Jp = creation(spec, 0);
  SparseOperator Jm = creation(spec, 1);
  const auto basis = enumerate_basis(spec);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& st = basis[col];
    const long m1 = st[0], m2 = st[1], m3 = st[2];
    if (m1 == 0) continue;
    for (long h = 0; h <= alg.n; ++h) {
      if (m3 + h > spec.caps[2]) continue;
      for (long i = h; i <= alg.n; ++i) {
        if (alg.coeffs[i].is_zero()) continue;
        Rational c = parity_sign(i - h + 1) * alg.coeffs[i] * binomial(i, h) * Rational(m1) *
                     bracket_value(BracketVariant::two_var, i - h, m1, m2, dr, rlimit);
        Jm.add_entry(state_index(spec, {m1 - 1, m2, m3 + h}), col, c);
      }
    }
  }
  return {RealizationKind::three_boson, alg, spec, std::nullopt,
          std::move(J3), std::move(Jp), std::move(Jm), standard_margins(RealizationKind::three_boson, alg.n)};
}

RealizationSet build_two_boson_central(const AlgebraSpec& alg, const Rational& capital_lambda,
                                       const SpaceSpec& spec, const DrTable& dr) {
  require_modes(spec, 2, "build_two_boson_central");
  const long rlimit = alg.n / 2 - 1;
  if (rlimit > dr.rmax()) throw std::invalid_argument("build_two_boson_central: DrTable too short");
  SparseOperator J3(spec), Jp = creation(spec, 0), Jm = creation(spec, 1);
  const auto basis = enumerate_basis(spec);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& st = basis[col];
    const long m1 = st[0], m2 = st[1];
    J3.add_entry(col, col, capital_lambda + Rational(m1 - m2));
    if (m1 == 0) continue;
    std::size_t dst = state_index(spec, {m1 - 1, m2});
    for (long h = 0; h <= alg.n; ++h)
      for (long i = h; i <= alg.n; ++i) {
        if (alg.coeffs[i].is_zero()) continue;
        Rational c = parity_sign(i - h + 1) * alg.coeffs[i] * binomial(i, h) *
                     capital_lambda.pow(h) * Rational(m1) *
                     bracket_value(BracketVariant::two_var, i - h, m1, m2, dr, rlimit);
        Jm.add_entry(dst, col, c);
      }
  }
  return {RealizationKind::two_boson_central, alg, spec, capital_lambda,
          std::move(J3), std::move(Jp), std::move(Jm),
          standard_margins(RealizationKind::two_boson_central, alg.n)};
}

RealizationSet build_two_boson_lowering(const AlgebraSpec& alg, const Rational& lambda,
                                        const SpaceSpec& spec, const DrTable& dr) {
  require_modes(spec, 2, "build_two_boson_lowering");
  const long rlimit = alg.n / 2 - 1;
  if (rlimit > dr.rmax()) throw std::invalid_argument("build_two_boson_lowering: DrTable too short");
  SparseOperator J3 = op_add(creation(spec, 1), number(spec, 0));
  SparseOperator Jp = creation(spec, 0);
  SparseOperator Jm = op_scale(lambda, exp_annihilation(spec, 1));
  const auto basis = enumerate_basis(spec);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& st = basis[col];
    const long m1 = st[0], m2 = st[1];
    if (m1 == 0) continue;
    for (long h = 0; h <= alg.n; ++h) {
      if (m2 + h > spec.caps[1]) continue;  // (a2+)^h acts first
      std::size_t dst = state_index(spec, {m1 - 1, m2 + h});
      for (long i = h; i <= alg.n; ++i) {
        if (alg.coeffs[i].is_zero()) continue;
        Rational c = parity_sign(i - h + 1) * alg.coeffs[i] * binomial(i, h) * Rational(m1) *
                     bracket_value(BracketVariant::neg_single, i - h, m1, 0, dr, rlimit);
        Jm.add_entry(dst, col, c);
      }
    }
  }
  return {RealizationKind::two_boson_lowering, alg, spec, lambda,
          std::move(J3), std::move(Jp), std::move(Jm),
          standard_margins(RealizationKind::two_boson_lowering, alg.n)};
}

RealizationSet build_single_boson(const AlgebraSpec& alg, const Rational& kappa,
                                  const SpaceSpec& spec, const DrTable& dr) {
  require_modes(spec, 1, "build_single_boson");
  const long rlimit = alg.n / 2 - 1;
  if (rlimit > dr.rmax()) throw std::invalid_argument("build_single_boson: DrTable too short");
  SparseOperator J3(spec), Jp = creation(spec, 0), Jm(spec);
  for (long m1 = 0; m1 <= spec.caps[0]; ++m1) {
    std::size_t col = state_index(spec, {m1});
    J3.add_entry(col, col, kappa + Rational(m1));
    if (m1 == 0) continue;
    std::size_t dst = state_index(spec, {m1 - 1});
    for (long h = 0; h <= alg.n; ++h)
      for (long i = h; i <= alg.n; ++i) {
        if (alg.coeffs[i].is_zero()) continue;
        Rational c = -alg.coeffs[i] * binomial(i, h) * kappa.pow(h) * Rational(m1) *
                     bracket_value(BracketVariant::single, i - h, m1, 0, dr, rlimit);
        Jm.add_entry(dst, col, c);
      }
  }
  return {RealizationKind::single_boson, alg, spec, kappa,
          std::move(J3), std::move(Jp), std::move(Jm),
          standard_margins(RealizationKind::single_boson, alg.n)};
}

RealizationSet substitute_mode3(const RealizationSet& r, const std::vector<ModeTerm>& f,
                                const DrTable& dr) {
  if (r.kind != RealizationKind::three_boson)
    throw std::invalid_argument("substitute_mode3: requires a three_boson realization");
  const AlgebraSpec& alg = r.alg;
  const SpaceSpec& spec = r.space;
  const long rlimit = alg.n / 2 - 1;

  SparseOperator fop(spec);
  long raise_deg = 0;
  {
    SparseOperator ap = creation(spec, 2);
    SparseOperator am = annihilation(spec, 2);
    for (const auto& term : f) {
      if (term.p < 0 || term.q < 0) throw std::invalid_argument("substitute_mode3: negative exponent");
      if (term.coeff.is_zero()) continue;
      raise_deg = std::max(raise_deg, term.p);
      SparseOperator t = identity_operator(spec);
      for (long k = 0; k < term.p; ++k) t = op_mul(t, ap);
      for (long k = 0; k < term.q; ++k) t = op_mul(t, am);
      fop = op_add(fop, op_scale(term.coeff, t));
    }
  }

  // Powers f^0..f^n.
  std::vector<SparseOperator> fpow;
  fpow.push_back(identity_operator(spec));
  for (long h = 1; h <= alg.n; ++h) fpow.push_back(op_mul(fpow.back(), fop));

  SparseOperator J3 = op_add(fop, op_add(number(spec, 0), op_scale(Rational(-1), number(spec, 1))));
  SparseOperator Jp = creation(spec, 0);
  SparseOperator Jm = creation(spec, 1);

  const auto basis = enumerate_basis(spec);
  for (long h = 0; h <= alg.n; ++h) {
    // Collected scalar bracket part for this h: sum over i of the signed
    // coefficient times the diagonal bracket, then a1; f^h is applied last.
    SparseOperator inner(spec);
    bool any = false;
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const auto& st = basis[col];
      const long m1 = st[0], m2 = st[1];
      if (m1 == 0) continue;
      Rational c(0);
      for (long i = h; i <= alg.n; ++i) {
        if (alg.coeffs[i].is_zero()) continue;
        c += parity_sign(i - h + 1) * alg.coeffs[i] * binomial(i, h) *
             bracket_value(BracketVariant::two_var, i - h, m1, m2, dr, rlimit);
      }
      if (c.is_zero()) continue;
      any = true;
      inner.add_entry(state_index(spec, {m1 - 1, m2, st[2]}), col, c * Rational(m1));
    }
    if (any) Jm = op_add(Jm, op_mul(fpow[static_cast<std::size_t>(h)], inner));
  }

  std::vector<long> margins{2, 2, 2 * raise_deg * std::max(1L, alg.n)};
  return {RealizationKind::three_boson, alg, spec, std::nullopt,
          std::move(J3), std::move(Jp), std::move(Jm), std::move(margins)};
}

}  // namespace polyboson
