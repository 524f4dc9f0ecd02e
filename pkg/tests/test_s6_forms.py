import pytest
from hypothesis import given, settings, strategies as st

from g2spheres import s6_forms
from g2spheres.checks import GENERATORS_13
from g2spheres.scalar import I, PI, ZERO

g = s6_forms.gen


@pytest.mark.parametrize("name", GENERATORS_13)
def test_d_squared_vanishes(name):
    assert not g(name).d().d().expand()


@settings(max_examples=25)
@given(st.sampled_from(GENERATORS_13), st.sampled_from(GENERATORS_13))
def test_leibniz_rule(x, y):
    a, b = g(x), g(y)
    sign = -1 if a.degree() % 2 else 1
    lhs = (a * b).d().expand()
    rhs = (a.d() * b + (a * b.d()).scale(sign)).expand()
    assert lhs == rhs


def test_complex_generators_split():
    chi1 = g("chi1")
    assert chi1.expand() == (g("chi1R") + g("chi1I").scale(I)).expand()


def test_euler_verdier_and_antipodal_are_involutions():
    for name in GENERATORS_13:
        p = g(name)
        assert s6_forms.euler_verdier_pullback(s6_forms.euler_verdier_pullback(p)).expand() == p.expand()
        assert s6_forms.antipodal_pullback(s6_forms.antipodal_pullback(p)).expand() == p.expand()


def test_euler_verdier_matches_coframe_route():
    for name in ("beta", "theta1", "chi0R", "chi2I"):
        p = g(name)
        via_coframe = s6_forms.pullback_coframe(p.expand(), s6_forms.euler_verdier_coframe())
        assert via_coframe == s6_forms.euler_verdier_pullback(p).expand()


def test_fiber_integral_of_volume_form():
    # a vertical volume integrates to the volume of S^5
    assert s6_forms.fiber_integral(s6_forms.dvol_fiber()) == PI ** 3
    assert s6_forms.fiber_integral(g("alpha") * g("beta") * g("gamma") * g("theta0")) == ZERO


def test_top_ratios():
    base = g("alpha") * g("beta") * g("gamma") * g("theta0") * g("theta2")
    assert s6_forms.top_ratio(base * g("theta1") * g("theta1")) == -4
    assert s6_forms.top_ratio(base * g("chi1R") * g("chi1R")) == 4


def test_d_alpha_is_lambda_free():
    assert not any(b for c in g("alpha").d().expand().terms.values() for (_, b) in c.terms())
    # beta picks up lambda through the curvature of the base
    assert any(b for c in g("beta").d().expand().terms.values() for (_, b) in c.terms())
