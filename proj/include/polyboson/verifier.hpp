#ifndef POLYBOSON_VERIFIER_HPP
#define POLYBOSON_VERIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "polyboson/pbw.hpp"
#include "polyboson/realizations.hpp"

namespace polyboson {

enum class CheckStatus { passed, failed, vacuous };

struct FailureDetail {
  FockState state;      // basis state of the failing column
  std::size_t row = 0;  // failing matrix row
  std::string lhs;      // exact values, "p/q" form
  std::string rhs;
};

struct CheckResult {
  std::string name;
  long states_checked = 0;
  CheckStatus status = CheckStatus::vacuous;
  std::optional<FailureDetail> first_failure;
};

struct DrProvenance {
  std::vector<std::string> values;        // D_r in "p/q" form
  std::vector<long> discrepant_indices;   // r where the derived value differs
                                          // from the commonly quoted constant
};

struct VerificationReport {
  std::string subject;  // kind + algebra + parameter summary
  std::vector<CheckResult> checks;
  std::optional<DrProvenance> dr_provenance;

  bool all_passed() const;   // every check passed (none failed or vacuous)
  bool any_failed() const;
  bool any_vacuous() const;

  // Deterministic JSON rendering.
  std::string to_json() const;
};

// Widely quoted reference constants for D_0..D_4; derive_dr results are
// compared against these to emit discrepancy flags.
DrProvenance dr_provenance(const DrTable& dr);

// Exact column-wise check of [J3,J±] = ±J± and [J+,J-] = sum c_i J3^i on
// safe_subspace(r.space, r.margins). Empty interior yields vacuous status.
VerificationReport check_algebra(const RealizationSet& r);

// Entrywise equality of a three-boson realization against the Fock
// transcription, on columns whose image never crosses a cap.
VerificationReport check_fock_equivalence(const RealizationSet& b, const RealizationSet& f);

// Columns of a quotient-kind realization against the symbolic induced
// action, on an untruncated window.
VerificationReport check_quotient_equivalence(const RealizationSet& b, Ideal ideal);

// Both reordering identities, as matrix equations in r's generators, for all
// l <= lmax, j <= 2, m <= mmax, both signs; margins scale with lmax + mmax.
VerificationReport check_ordering_identities(const AlgebraSpec& alg, const RealizationSet& r,
                                             long lmax, long mmax);

}  // namespace polyboson

#endif
