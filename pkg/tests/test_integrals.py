import pytest

from g2spheres import integrals
from g2spheres.scalar import LAMBDA, PI, S, q
from g2spheres.trig import PiMultiple, TrigPoly

rho = integrals.RHO
sin, cos = TrigPoly.sin(rho), TrigPoly.cos(rho)


@pytest.mark.parametrize("label", sorted(integrals.printed_ball_values()))
def test_ball_formula(label):
    assert integrals.ball_evaluation(label) == integrals.printed_ball_values()[label]


def test_selected_closed_forms():
    assert integrals.ball_evaluation("Delta30") == (sin ** 5).map_scalars(lambda c: c * PI ** 2 / S ** 3)
    assert integrals.ball_evaluation("Psi2") == (cos ** 2 * sin ** 3).map_scalars(lambda c: c * 4 * PI / (3 * LAMBDA))
    assert integrals.ball_evaluation("N10") == (cos ** 2 * sin ** 3).map_scalars(lambda c: -c * PI / S)


def test_degree_four_rejected():
    with pytest.raises(ValueError):
        integrals.ball_evaluation("Delta41")


def test_four_sphere_values():
    assert integrals.sphere4_values() == {"Delta41": 32 * PI ** 2 / (15 * LAMBDA ** 2),
                                          "Delta42": 8 * PI ** 2 / (15 * LAMBDA ** 2)}


def test_full_sphere_is_ball_at_pi():
    full = integrals.ball4_evaluation("Delta41").substitute(rho, PiMultiple(1))
    assert full == TrigPoly.const(integrals.sphere4_values()["Delta41"])


def test_kernel_relation_n20():
    lhs = integrals.ball_evaluation("N20")
    combo = integrals.ball4_evaluation("Delta41") - integrals.ball4_evaluation("Delta42") * 4
    assert lhs == combo.map_scalars(lambda c: c * LAMBDA / (2 * PI))


def test_kernel_consistency_report():
    report = integrals.kernel_consistency()
    assert report and all(r.passed for r in report), [r.name for r in report if not r.passed]


def test_application_bounds():
    b6, b7 = integrals.application_bounds()
    assert (b6.lower, b6.upper, b6.upper_strict) == (4 / (9 * PI), 4 / (5 * PI), True)
    assert (b7.lower, b7.upper) == (q(15, 128), q(5, 32))


def test_pretty_uses_radius():
    assert "sqrt(lambda) r" in integrals.pretty(integrals.ball_evaluation("Delta30"))
