import pytest

from g2spheres import measures
from g2spheres.scalar import I, LAMBDA, PI, S, q
from g2spheres.tensor import Combo


def test_basis_sizes():
    assert len(measures.su3_basis()) == 21
    assert len(measures.g2_basis()) == 13


@pytest.mark.parametrize("group", ["SU3", "G2"])
def test_conjugates_pair_up(group):
    basis = measures.basis(group)
    for lab, cm in basis.items():
        if cm.conjugate:
            assert basis[cm.conjugate].conjugate == lab
            assert basis[cm.conjugate].weight == -cm.weight


def test_real_and_imaginary_parts():
    assert measures.real_part("Phi2") + measures.imag_part("Phi2").scale(I) == Combo.of("Phi2")


@pytest.mark.parametrize("group", ["SU3", "G2"])
def test_euler_verdier_from_forms(group):
    for lab in measures.basis(group):
        assert measures.euler_verdier_from_forms(lab, group) == measures.euler_verdier(lab, group)


def test_g2_sigma_swaps_phi():
    assert measures.euler_verdier("Phi", "G2") == Combo.of("Phib", -1)


def test_antipodal_from_forms():
    for lab in measures.su3_basis():
        assert measures.antipodal_from_forms(lab) == measures.antipodal(lab)


def test_globalization_values():
    assert measures.globalize("Delta30") == Combo.of("mu30")
    assert measures.globalize("N20") == Combo({"mu41": LAMBDA / (2 * PI), "mu42": -2 * LAMBDA / PI})
    assert measures.globalize("Psi3") == Combo({"mu41": -S / 2, "mu42": 2 * S})
    assert measures.globalize("Phi", "S7") == Combo({"nu3": q(1, 4), "nu4": 4 * S * I / (3 * PI)})
    assert measures.globalize("N2", "S7") == Combo.of("nu4", -3 * LAMBDA / (2 * PI))


def test_globalize_is_linear():
    c = Combo({"Delta30": 2, "N20": S})
    assert measures.globalize(c) == measures.globalize("Delta30").scale(2) + measures.globalize("N20").scale(S)


def test_restriction_table_matches_fiber_integral():
    table = measures.restriction_table()
    assert len(table) == 13
    for lab, img in table.items():
        assert measures.restrict_computed(lab) == img, lab


def test_restriction_kernel():
    assert measures.restriction_kernel() == [Combo.of("Delta7")]


def test_form_of_rejects_volume_parts():
    vol = [lab for lab, cm in measures.su3_basis().items() if cm.volume_part]
    assert vol
    with pytest.raises(ValueError):
        measures.form_of(Combo.of(vol[0]), "SU3")
