import json

import polyboson as pb


def test_derive_dr_values():
    table = pb.derive_dr(4)
    assert table.values == ["1/12", "-1/720", "1/30240", "-1/1209600", "1/47900160"]


def test_power_sums():
    assert pb.power_sum(2, 5) == "30"  # 0 + 1 + 4 + 9 + 16
    assert pb.shifted_power_sum(1, 3, 2) == "-3"  # (0-2) + (1-2) + (2-2)


def test_su2_three_boson_checks_out():
    alg = pb.preset_su2()
    assert alg.n == 1
    assert alg.coeffs == ["0", "2"]
    dr = pb.derive_dr(4)
    r = pb.build_three_boson(alg, [6, 6, 6], dr)
    assert r.kind == "three_boson"
    assert r.margins == [2, 2, 2]
    ok, report = pb.check_algebra(r)
    assert ok
    assert json.loads(report)["checks"]


def test_fock_equivalence_and_export_roundtrip():
    alg = pb.make_algebra(2, ["1", "0", "1/2"])
    dr = pb.derive_dr(4)
    r = pb.build_three_boson(alg, [5, 5, 9], dr)
    ok, _ = pb.check_fock_equivalence(r, pb.build_fock_rep(alg, [5, 5, 9]))
    assert ok

    doc = r.export_json()
    parsed = json.loads(doc)
    assert parsed["basis_order"] == "lex_last_fastest"
    back = pb.parse_realization(doc)
    assert back.export_json() == doc


def test_quotient_realizations():
    dr = pb.derive_dr(4)
    alg = pb.preset_higgs("2", "1/3")
    central = pb.build_two_boson_central(alg, "3/2", [8, 8], dr)
    assert pb.check_quotient_equivalence(central, "I1")[0]
    single = pb.build_single_boson(pb.preset_su2(), "-1", [10], dr)
    assert pb.check_quotient_equivalence(single, "I3")[0]


def test_substitution():
    dr = pb.derive_dr(4)
    base = pb.build_three_boson(pb.preset_su2(), [6, 6, 6], dr)
    mixed = pb.substitute_mode3(base, [(1, 0, "1"), (0, 1, "1")], dr)
    assert pb.check_algebra(mixed)[0]
