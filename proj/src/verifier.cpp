#include "polyboson/verifier.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>

namespace polyboson {

bool VerificationReport::all_passed() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (c.status != CheckStatus::passed) return false;
  return true;
}

bool VerificationReport::any_failed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::failed) return true;
  return false;
}

bool VerificationReport::any_vacuous() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::vacuous) return true;
  return false;
}

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::vacuous: return "vacuous";
  }
  return "?";
}

std::string subject_string(const RealizationSet& r) {
  std::string s = kind_name(r.kind) + " n=" + std::to_string(r.alg.n) + " coeffs=[";
  for (long i = 0; i <= r.alg.n; ++i) {
    if (i) s += ",";
    s += r.alg.coeffs[i].str();
  }
  s += "]";
  if (r.param) s += " param=" + r.param->str();
  s += " caps=[";
  for (std::size_t i = 0; i < r.space.modes(); ++i) {
    if (i) s += ",";
    s += std::to_string(r.space.caps[i]);
  }
  s += "]";
  return s;
}

// Exact column comparison of lhs and rhs on the given columns; fills in the
// first differing entry, scanning basis order then row order.
CheckResult compare_on_columns(std::string name, const SparseOperator& lhs,
                               const SparseOperator& rhs,
                               const std::vector<std::size_t>& columns,
                               const std::vector<FockState>& basis) {
  CheckResult res;
  res.name = std::move(name);
  res.states_checked = static_cast<long>(columns.size());
  if (columns.empty()) {
    res.status = CheckStatus::vacuous;
    return res;
  }
  for (std::size_t col : columns) {
    std::map<std::size_t, std::pair<Rational, Rational>> rows;
    for (const auto& [r, v] : lhs.column(col)) rows[r].first = v;
    for (const auto& [r, v] : rhs.column(col)) rows[r].second = v;
    for (const auto& [r, pair] : rows) {
      if (pair.first != pair.second) {
        res.status = CheckStatus::failed;
        res.first_failure = FailureDetail{basis[col], r, pair.first.str(), pair.second.str()};
        return res;
      }
    }
  }
  res.status = CheckStatus::passed;
  return res;
}

}  // namespace

DrProvenance dr_provenance(const DrTable& dr) {
  static const std::vector<Rational> quoted = {
      Rational(1, 12), Rational(-1, 720), Rational(-1, 30240),
      Rational(-1, 1209600), Rational(1, 47900160)};
  DrProvenance out;
  for (long r = 0; r <= dr.rmax(); ++r) {
    out.values.push_back(dr.values[r].str());
    if (r < static_cast<long>(quoted.size()) && dr.values[r] != quoted[r])
      out.discrepant_indices.push_back(r);
  }
  return out;
}

VerificationReport check_algebra(const RealizationSet& r) {
  VerificationReport report;
  report.subject = subject_string(r);
  const auto basis = enumerate_basis(r.space);
  const auto safe = safe_subspace(r.space, r.margins);

  report.checks.push_back(compare_on_columns(
      "commutator_J3_Jplus", op_commutator(r.J3, r.Jplus), r.Jplus, safe, basis));
  report.checks.push_back(compare_on_columns(
      "commutator_J3_Jminus", op_commutator(r.J3, r.Jminus),
      op_scale(Rational(-1), r.Jminus), safe, basis));
  report.checks.push_back(compare_on_columns(
      "commutator_Jplus_Jminus", op_commutator(r.Jplus, r.Jminus),
      apply_polynomial(r.J3, r.alg.coeffs), safe, basis));
  return report;
}

VerificationReport check_fock_equivalence(const RealizationSet& b, const RealizationSet& f) {
  if (b.kind != RealizationKind::three_boson || f.kind != RealizationKind::fock3)
    throw std::invalid_argument("check_fock_equivalence: expects three_boson vs fock3");
  if (!(b.space == f.space)) throw std::invalid_argument("check_fock_equivalence: space mismatch");
  if (!(b.alg == f.alg)) throw std::invalid_argument("check_fock_equivalence: algebra mismatch");

  VerificationReport report;
  report.subject = subject_string(b);
  const auto basis = enumerate_basis(b.space);
  const long lift = std::max(1L, b.alg.n);
  std::vector<std::size_t> window;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& st = basis[i];
    if (st[0] < b.space.caps[0] && st[1] < b.space.caps[1] && st[2] <= b.space.caps[2] - lift)
      window.push_back(i);
  }
  report.checks.push_back(compare_on_columns("fock_equiv_J3", b.J3, f.J3, window, basis));
  report.checks.push_back(compare_on_columns("fock_equiv_Jplus", b.Jplus, f.Jplus, window, basis));
  report.checks.push_back(compare_on_columns("fock_equiv_Jminus", b.Jminus, f.Jminus, window, basis));
  return report;
}

VerificationReport check_quotient_equivalence(const RealizationSet& b, Ideal ideal) {
  const std::map<RealizationKind, Ideal> expected = {
      {RealizationKind::two_boson_central, Ideal::I1},
      {RealizationKind::two_boson_lowering, Ideal::I2},
      {RealizationKind::single_boson, Ideal::I3}};
  auto it = expected.find(b.kind);
  if (it == expected.end() || it->second != ideal)
    throw std::invalid_argument("check_quotient_equivalence: kind/ideal mismatch");
  if (!b.param) throw std::invalid_argument("check_quotient_equivalence: missing parameter");

  VerificationReport report;
  report.subject = subject_string(b);
  const auto basis = enumerate_basis(b.space);
  const long lift = std::max(1L, b.alg.n);

  std::vector<std::size_t> window;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& st = basis[i];
    bool ok = st[0] < b.space.caps[0];
    if (ideal == Ideal::I1) ok = ok && st[1] < b.space.caps[1];
    if (ideal == Ideal::I2) ok = ok && st[1] <= b.space.caps[1] - lift;
    if (ok) window.push_back(i);
  }

  auto expected_operator = [&](Generator gen) {
    SparseOperator op(b.space);
    for (std::size_t col : window) {
      const auto& st = basis[col];
      QuotientMonomial x{ideal, st[0], b.space.modes() > 1 ? st[1] : 0};
      for (const auto& [y, v] : induced_action(b.alg, ideal, *b.param, gen, x)) {
        FockState dst = (b.space.modes() > 1) ? FockState{y.ea, y.eb} : FockState{y.ea};
        op.add_entry(state_index(b.space, dst), col, v);
      }
    }
    return op;
  };

  report.checks.push_back(compare_on_columns("quotient_equiv_J3", b.J3,
                                             expected_operator(Generator::J3), window, basis));
  report.checks.push_back(compare_on_columns("quotient_equiv_Jplus", b.Jplus,
                                             expected_operator(Generator::Jplus), window, basis));
  report.checks.push_back(compare_on_columns("quotient_equiv_Jminus", b.Jminus,
                                             expected_operator(Generator::Jminus), window, basis));
  return report;
}

VerificationReport check_ordering_identities(const AlgebraSpec& alg, const RealizationSet& r,
                                             long lmax, long mmax) {
  VerificationReport report;
  report.subject = subject_string(r);
  const auto basis = enumerate_basis(r.space);

  std::vector<long> margins = r.margins;
  for (auto& m : margins) m = (m / 2) * (lmax + mmax);
  const auto safe = safe_subspace(r.space, margins);

  const SpaceSpec& spec = r.space;
  SparseOperator ident = identity_operator(spec);

  // Powers of J± up to mmax.
  std::vector<SparseOperator> plus_pow{ident}, minus_pow{ident};
  for (long m = 1; m <= mmax; ++m) {
    plus_pow.push_back(op_mul(plus_pow.back(), r.Jplus));
    minus_pow.push_back(op_mul(minus_pow.back(), r.Jminus));
  }

  CheckResult swap_res;
  swap_res.name = "ordering_swap_power";
  swap_res.states_checked = static_cast<long>(safe.size());
  swap_res.status = safe.empty() ? CheckStatus::vacuous : CheckStatus::passed;

  for (long j = 0; j <= 2 && swap_res.status == CheckStatus::passed; ++j) {
    // Powers of (J3 + j) up to lmax.
    std::vector<SparseOperator> shifted_pow{ident};
    SparseOperator shifted = op_add(r.J3, op_scale(Rational(j), ident));
    for (long l = 1; l <= lmax; ++l) shifted_pow.push_back(op_mul(shifted_pow.back(), shifted));

    for (bool plus : {true, false}) {
      const auto& qpow = plus ? plus_pow : minus_pow;
      for (long l = 0; l <= lmax; ++l) {
        for (long m = 1; m <= mmax; ++m) {
          SparseOperator lhs = op_commutator(shifted_pow[l], qpow[m]);
          SparseOperator rhs(spec);
          auto coeffs = swap_power(l, j, plus, m);
          for (long i = 0; i < l; ++i)
            rhs = op_add(rhs, op_scale(coeffs[i], op_mul(qpow[m], shifted_pow[i])));
          auto sub = compare_on_columns(swap_res.name, lhs, rhs, safe, basis);
          if (sub.status == CheckStatus::failed) {
            swap_res.status = CheckStatus::failed;
            swap_res.first_failure = sub.first_failure;
          }
          if (swap_res.status != CheckStatus::passed) break;
        }
        if (swap_res.status != CheckStatus::passed) break;
      }
      if (swap_res.status != CheckStatus::passed) break;
    }
  }
  report.checks.push_back(swap_res);

  CheckResult lower_res;
  lower_res.name = "ordering_lowering_raising";
  lower_res.states_checked = static_cast<long>(safe.size());
  lower_res.status = safe.empty() ? CheckStatus::vacuous : CheckStatus::passed;

  for (long m = 1; m <= mmax && lower_res.status == CheckStatus::passed; ++m) {
    SparseOperator lhs = op_commutator(r.Jminus, plus_pow[m]);
    auto data = commute_lowering_raising(alg, m);
    SparseOperator rhs = op_scale(Rational(-1),
        op_mul(plus_pow[data.raising_power], apply_polynomial(r.J3, data.poly)));
    auto sub = compare_on_columns(lower_res.name, lhs, rhs, safe, basis);
    if (sub.status == CheckStatus::failed) {
      lower_res.status = CheckStatus::failed;
      lower_res.first_failure = sub.first_failure;
    }
  }
  report.checks.push_back(lower_res);
  return report;
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["subject"] = subject;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["states_checked"] = c.states_checked;
    cj["status"] = status_name(c.status);
    cj["passed"] = (c.status == CheckStatus::passed);
    if (c.first_failure) {
      nlohmann::json fj;
      fj["state"] = c.first_failure->state;
      fj["row"] = c.first_failure->row;
      fj["lhs"] = c.first_failure->lhs;
      fj["rhs"] = c.first_failure->rhs;
      cj["first_failure"] = fj;
    }
    j["checks"].push_back(cj);
  }
  if (dr_provenance) {
    nlohmann::json dj;
    dj["values"] = dr_provenance->values;
    dj["discrepant_indices"] = dr_provenance->discrepant_indices;
    j["dr_provenance"] = dj;
  }
  return j.dump(2) + "\n";
}

}  // namespace polyboson
