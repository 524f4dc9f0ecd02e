import pytest

from g2spheres import measures, rumin, s6_forms
from g2spheres.checks import reference_d_omega_42
from g2spheres.named import NamedPoly

g = s6_forms.gen
OMEGA = g("gamma") * g("theta0") * g("theta2")


def test_rumin_bidegree_four_two_part():
    D = rumin.rumin_differential(OMEGA).D.expand()
    assert D.grade_part(4, 2) == reference_d_omega_42().expand()


def test_d_omega_is_alpha_multiple():
    res = rumin.rumin_differential(OMEGA)
    assert rumin.is_alpha_multiple(res.D.expand())
    assert (OMEGA + g("alpha") * res.xi).d().expand() == res.D.expand()


def test_xi_independence():
    D = rumin.rumin_differential(OMEGA).D.expand()
    vectors = rumin.rumin_kernel_vectors()
    assert vectors
    for v in vectors:
        assert rumin.rumin_differential(OMEGA, v).D.expand() == D


def test_zero_form():
    res = rumin.rumin_differential(NamedPoly(s6_forms.model(), {}))
    assert not res.D.expand() and not res.xi.expand()


def test_weight_audit():
    # D omega = rho1 + s rho2 + lambda rho3 with the stated weights
    audit = rumin.weight_bidegree_audit(OMEGA)
    assert {w for _, w in audit[0]} == {0}
    assert {w for _, w in audit[1]} <= {-1, 1}
    assert {w for _, w in audit[2]} <= {-2, 0, 2}


def test_n31_globalizes_to_zero():
    form = measures.su3_basis()["N31"].form
    assert not rumin.rumin_differential(form).D.expand()
    assert not s6_forms.fiber_integral(form)
    assert rumin.glob_zero_certificate(form)


@pytest.mark.parametrize("label", ["Delta10", "Delta20", "Delta30", "Delta31", "N10", "N20"])
def test_certificate_rejects_nonkernel(label):
    assert not rumin.glob_zero_certificate(measures.su3_basis()[label].form)
