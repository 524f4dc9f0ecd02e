import json

import pytest

from g2spheres import local_kinematics as lk
from g2spheres.scalar import PI, S, q
from g2spheres.tensor import SymTensor

o = SymTensor.odot


@pytest.fixture(scope="module")
def tables():
    return lk.load_tables()


def test_table_contents(tables):
    k_su3, k_g2, k_u3, k_so7 = tables
    assert set(k_g2.rows) == {"Delta0", "Delta1", "N2", "N3", "N4", "RePhi", "ImPhi"}
    assert not k_so7.rows
    assert k_g2["N4"] == o("Delta7", "N4", 2)
    assert k_g2.rows["Delta0"].relative_to == "K_SO7"


@pytest.mark.parametrize("which", [0, 1, 2])
def test_balance_and_symmetry(tables, which):
    tab = tables[which]
    assert lk.balance_violations(tab) == []
    for row in tab.rows.values():
        assert lk.sym_part(row.tensor.to_tensor2()) == row.tensor


def test_delta00_correction(tables):
    delta = lk.k_su3_delta00_correction(tables[0])
    assert delta == o("Phi3", "Phib3", q(-2, 15) / PI) + o("Psi3", "Psib3", -1 / (8 * PI))


def test_derived_coefficients():
    assert lk.derive_psi2_coefficient() == 16 / (15 * PI)
    assert lk.derive_psi3_correction() == -1 / (8 * PI)


def test_g2_delta_globalizes_to_nu_block(tables):
    k_g2 = tables[1]
    assert lk.glob_glob(k_g2["Delta0"], "G2") == o("nu3", "nu4", q(1, 256))


def test_g2_delta1_against_n4_square(tables):
    k_g2 = tables[1]
    lhs = lk.glob_glob(k_g2["Delta1"], "G2")
    rhs = lk.glob_glob(o("N4", "N4", -3 * PI / 2 ** 13), "G2")
    assert lhs == rhs


def test_run_checks_without_external_data():
    res = lk.run_checks()
    assert not [r.name for r in res if r.status == "FAIL"]
    skipped = [r for r in res if r.status == "SKIPPED"]
    assert [r.name for r in skipped] == ["su3: glob(K(chi)) = pkf"]


def test_parse_external_rows():
    text = json.dumps([
        {"operator": "K_SO7", "argument": "Delta7", "terms": [{"left": "Delta7", "right": "Delta7", "coeff": "2"}]},
        {"operator": "K_U3", "argument": "Delta41+Delta42",
         "terms": [{"left": "Delta63", "right": "Delta41", "coeff": "1/2 * pi^-1 * s^2"}]},
    ])
    rows = lk.parse_external(text)
    assert [r.provenance for r in rows] == ["external-data", "external-data"]
    assert rows[1].tensor == o("Delta63", "Delta41", S ** 2 / (2 * PI))


@pytest.mark.parametrize("text", ["not json", "{}", '[{"operator": "K_U3"}]',
                                  '[{"operator": "K_U3", "argument": "Delta63", "terms": [{"left": "a"}]}]'])
def test_parse_external_errors(text):
    with pytest.raises(lk.ExternalDataError):
        lk.parse_external(text)


def test_external_rows_unlock_pkf_check(tmp_path):
    # deliberately wrong rows: the check must run and fail, not pass or skip
    path = tmp_path / "ext.json"
    path.write_text(json.dumps([
        {"operator": "K_U3", "argument": "Delta41+Delta42", "terms": []},
        {"operator": "K_U3", "argument": "Delta63", "terms": [{"left": "Delta63", "right": "Delta00", "coeff": "2"}]},
    ]))
    res = {r.name: r.status for r in lk.run_checks(str(path))}
    assert res["su3: glob(K(chi)) = pkf"] == "FAIL"


def test_dump_json_is_stable():
    assert lk.dump_json() == lk.dump_json()
    json.loads(lk.dump_json())
