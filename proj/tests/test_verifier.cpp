#include <doctest.h>

#include "polyboson/export.hpp"
#include "polyboson/sampling.hpp"
#include "polyboson/verifier.hpp"

using namespace polyboson;

namespace {

const DrTable& dr() {
  static DrTable table = derive_dr(6);
  return table;
}

}  // namespace

TEST_CASE("check_algebra passes on su2 three-boson") {
  auto r = build_three_boson(preset_su2(), SpaceSpec{{6, 6, 6}}, dr());
  auto rep = check_algebra(r);
  CHECK(rep.all_passed());
  for (const auto& c : rep.checks) CHECK(c.states_checked >= 125);
}

TEST_CASE("abelian algebra gives a vanishing lowering operator") {
  AlgebraSpec abelian = make_algebra(0, {Rational(0)});
  auto r = build_single_boson(abelian, Rational(7, 3), SpaceSpec{{6}}, dr());
  CHECK(r.Jminus.is_zero());
  CHECK(check_algebra(r).all_passed());
}

TEST_CASE("vacuous when the interior is empty") {
  auto r = build_three_boson(preset_su2(), SpaceSpec{{1, 1, 1}}, dr());
  auto rep = check_algebra(r);
  CHECK(rep.any_vacuous());
  CHECK(!rep.all_passed());
  for (const auto& c : rep.checks) CHECK(c.states_checked == 0);
}

TEST_CASE("states_checked equals the safe-subspace cardinality") {
  auto r = build_three_boson(preset_su2(), SpaceSpec{{5, 6, 7}}, dr());
  auto rep = check_algebra(r);
  auto safe = safe_subspace(r.space, r.margins);
  for (const auto& c : rep.checks)
    CHECK(c.states_checked == static_cast<long>(safe.size()));
}

TEST_CASE("corrupted D0 breaks fock equivalence with a mode-3-raising entry") {
  AlgebraSpec alg = preset_higgs(Rational(2), Rational(1, 3));
  SpaceSpec spec{{5, 5, 8}};
  DrTable bad = dr();
  bad.values[0] = -bad.values[0];
  auto b = build_three_boson(alg, spec, bad);
  auto rep = check_fock_equivalence(b, build_fock_rep(alg, spec));
  CHECK(rep.any_failed());
  bool found = false;
  auto basis = enumerate_basis(spec);
  for (const auto& c : rep.checks)
    if (c.first_failure) {
      found = true;
      // The failure sits in a lowering-correction entry (m1 drops by one).
      const auto& st = c.first_failure->state;
      CHECK(basis[c.first_failure->row][0] == st[0] - 1);
      CHECK(c.first_failure->lhs != c.first_failure->rhs);
    }
  CHECK(found);
}

TEST_CASE("quotient equivalence across ideals") {
  CHECK(check_quotient_equivalence(
            build_two_boson_central(preset_su2(), Rational(3, 2), SpaceSpec{{6, 6}}, dr()),
            Ideal::I1)
            .all_passed());
  CHECK(check_quotient_equivalence(
            build_two_boson_lowering(preset_su2(), Rational(1), SpaceSpec{{6, 7}}, dr()),
            Ideal::I2)
            .all_passed());
  CHECK(check_quotient_equivalence(
            build_single_boson(preset_higgs(Rational(2), Rational(1, 3)), Rational(-2),
                               SpaceSpec{{8}}, dr()),
            Ideal::I3)
            .all_passed());
  CHECK_THROWS_AS(check_quotient_equivalence(
                      build_single_boson(preset_su2(), Rational(1), SpaceSpec{{4}}, dr()),
                      Ideal::I1),
                  std::invalid_argument);
}

TEST_CASE("ordering identities") {
  auto su2 = build_three_boson(preset_su2(), SpaceSpec{{8, 8, 8}}, dr());
  CHECK(check_ordering_identities(preset_su2(), su2, 2, 3).all_passed());

  AlgebraSpec higgs = preset_higgs(Rational(2), Rational(1, 3));
  auto hr = build_three_boson(higgs, SpaceSpec{{6, 6, 16}}, dr());
  CHECK(check_ordering_identities(higgs, hr, 2, 2).all_passed());
}

TEST_CASE("mutation sensitivity") {
  Sampler sampler(999);
  AlgebraSpec alg = sampler.algebra(5);
  SpaceSpec spec{{6, 6, 6 + 2 * alg.n}};

  SUBCASE("flipped structure constant") {
    AlgebraSpec bad = alg;
    bad.coeffs[alg.n] = -bad.coeffs[alg.n];
    auto r = build_three_boson(bad, spec, dr());
    r.alg = alg;  // verify against the uncorrupted algebra
    CHECK(check_algebra(r).any_failed());
  }

  SUBCASE("flipped D_r") {
    AlgebraSpec deep = sampler.algebra(5);
    while (deep.n < 2) deep = sampler.algebra(5);
    DrTable bad = dr();
    bad.values[0] = -bad.values[0];
    SpaceSpec dspec{{6, 6, 6 + 2 * deep.n}};
    auto r = build_three_boson(deep, dspec, bad);
    CHECK(check_algebra(r).any_failed());
  }
}

TEST_CASE("reports are deterministic and serializable") {
  auto r = build_two_boson_central(preset_su2(), Rational(1, 2), SpaceSpec{{5, 5}}, dr());
  auto rep1 = check_algebra(r);
  auto rep2 = check_algebra(r);
  rep1.dr_provenance = dr_provenance(dr());
  rep2.dr_provenance = dr_provenance(dr());
  CHECK(rep1.to_json() == rep2.to_json());
  CHECK(rep1.to_json().find("\"passed\": true") != std::string::npos);
}

TEST_CASE("dr provenance flags the sign discrepancy at r = 2") {
  auto prov = dr_provenance(derive_dr(4));
  CHECK(prov.values == std::vector<std::string>{"1/12", "-1/720", "1/30240", "-1/1209600",
                                                "1/47900160"});
  CHECK(prov.discrepant_indices == std::vector<long>{2});
}

TEST_CASE("export round-trip") {
  auto r = build_two_boson_lowering(preset_su2(), Rational(2, 3), SpaceSpec{{4, 5}}, dr());
  std::string doc = export_realization(r);
  auto back = parse_realization(doc);
  CHECK(back.kind == r.kind);
  CHECK(back.alg == r.alg);
  CHECK(back.space == r.space);
  CHECK(back.param == r.param);
  CHECK(back.J3 == r.J3);
  CHECK(back.Jplus == r.Jplus);
  CHECK(back.Jminus == r.Jminus);
  CHECK(back.margins == r.margins);
  CHECK(export_realization(back) == doc);
}
