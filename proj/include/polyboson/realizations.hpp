#ifndef POLYBOSON_REALIZATIONS_HPP
#define POLYBOSON_REALIZATIONS_HPP

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "polyboson/algebra.hpp"
#include "polyboson/faulhaber.hpp"
#include "polyboson/fock.hpp"

namespace polyboson {

enum class RealizationKind { fock3, three_boson, two_boson_central, two_boson_lowering, single_boson };

std::string kind_name(RealizationKind k);
RealizationKind kind_from_name(const std::string& name);
// 3 / 3 / 2 / 2 / 1.
std::size_t kind_mode_count(RealizationKind k);
bool kind_has_parameter(RealizationKind k);

// A triple of exact sparse operators realizing (J3, J+, J-), plus the
// safe-subspace margins under which the defining relations are exact.
struct RealizationSet {
  RealizationKind kind = RealizationKind::three_boson;
  AlgebraSpec alg;
  SpaceSpec space;
  std::optional<Rational> param;  // Lambda / lambda / kappa, when applicable
  SparseOperator J3, Jplus, Jminus;
  std::vector<long> margins;
};

// Fock transcription of the master representation: column-by-column from the
// lowering coefficients sum_j (j-m2)^{i-h}, no closed-form brackets.
RealizationSet build_fock_rep(const AlgebraSpec& alg, const SpaceSpec& spec);

// J3 = a3+ + n1 - n2, J+ = a1+, and the lowering operator built from the
// diagonal two-variable bracket (evaluated at occupation eigenvalues), then
// a1, then (a3+)^h, in that order.
RealizationSet build_three_boson(const AlgebraSpec& alg, const SpaceSpec& spec, const DrTable& dr);

// a3+ replaced by the scalar Lambda (2 modes).
RealizationSet build_two_boson_central(const AlgebraSpec& alg, const Rational& capital_lambda,
                                       const SpaceSpec& spec, const DrTable& dr);

// Lowering ideal variant: J3 = a2+ + n1, J- = lambda e^{a2} + corrections
// with the single-variable bracket in -n1 and a trailing (a2+)^h (2 modes).
RealizationSet build_two_boson_lowering(const AlgebraSpec& alg, const Rational& lambda,
                                        const SpaceSpec& spec, const DrTable& dr);

// Single mode: J3 = kappa + n1, J- diagonal-bracket lowering with kappa^h.
RealizationSet build_single_boson(const AlgebraSpec& alg, const Rational& kappa,
                                  const SpaceSpec& spec, const DrTable& dr);

// One term coeff * (a3+)^p (a3)^q of a substitution polynomial.
struct ModeTerm {
  long p = 0, q = 0;
  Rational coeff;

  friend bool operator==(const ModeTerm&, const ModeTerm&) = default;
};

// Rebuilds a three-boson realization with every a3+ replaced by the operator
// f(a3+, a3). Empty f is allowed (all h > 0 terms vanish). Margins are
// recomputed from the raising degree of f.
RealizationSet substitute_mode3(const RealizationSet& r, const std::vector<ModeTerm>& f,
                                const DrTable& dr);

}  // namespace polyboson

#endif
