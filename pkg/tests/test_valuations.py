from hypothesis import given, settings, strategies as st

from g2spheres import valuations
from g2spheres.scalar import LAMBDA, PI, S, q
from g2spheres.tensor import Combo, SymTensor

V = valuations.Valuation
S6_LABELS = valuations.MU_S6
S7_LABELS = valuations.MU_S7


@st.composite
def valuation(draw, space="S6"):
    labels = S6_LABELS if space == "S6" else S7_LABELS
    chosen = draw(st.lists(st.sampled_from(labels), min_size=1, max_size=3, unique=True))
    terms = {lab: q(draw(st.integers(-3, 3))) + S * draw(st.integers(0, 2)) for lab in chosen}
    return V.from_mu(space, Combo(terms))


@settings(max_examples=25)
@given(valuation(), valuation(), valuation())
def test_alesker_product_commutative_associative(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=25)
@given(valuation())
def test_euler_characteristic_is_unit(a):
    assert V.chi("S6") * a == a
    assert V.from_mu("S6", a.mu()) == a


@settings(max_examples=25)
@given(valuation(), valuation())
def test_pd_symmetric(a, b):
    assert valuations.pd(a, b) == valuations.pd(b, a)


def test_normal_basis():
    ring = valuations.ring_s6()
    assert [ring.label(b) for b in ring.normal_basis] == [
        "1", "t", "t^2", "u", "t^3", "t*u", "phi3", "phib3", "t^4", "t^2*u", "t^5", "t^6"]


def test_t_lambda_in_mu_basis():
    assert V.t_lambda("S6").mu() == Combo({
        "mu10": 2 / PI, "mu30": 3 * LAMBDA / PI ** 2, "mu31": 3 * LAMBDA / PI ** 2,
        "mu52": q(15, 2) * LAMBDA ** 2 / PI ** 3})
    assert V.u_lambda("S6").mu() == Combo.of("mu21", 2 / PI)


def test_pd_u_u():
    u = V.u_lambda("S6")
    assert valuations.pd(u, u) == 18 * LAMBDA / PI ** 3
    assert valuations.pd_via_forms(u, u) == 18 * LAMBDA / PI ** 3


def test_euler_characteristic_of_spheres():
    assert valuations.eval_on_sphere(V.chi("S6")) == 2
    assert valuations.eval_on_sphere(V.chi("S7")) == 0


def test_kinematic_chi_is_symmetric_inverse_of_pd():
    k = valuations.kinematic_chi("S6")
    assert len(k) == 21
    assert k["mu63", "mu00"] == 2
    assert k["phi3", "phib3"] == q(-2, 15) / PI
    assert k["mu63", "mu63"] == 15 * LAMBDA ** 3 / (8 * PI ** 3)


def test_s7_relations():
    t, u = V.t_lambda("S7"), V.u_lambda("S7")
    zero = V("S7")
    assert t * t * u == zero
    assert u * u + t ** 6 == zero
    assert t ** 7 != zero and t ** 8 == zero
    nu3, nu4 = V.from_mu("S7", "nu3"), V.from_mu("S7", "nu4")
    assert valuations.pd(nu3, nu4) == 512
    assert (u * (t * u)).mu() == Combo.of("mu7", -768 / PI ** 4)


def test_s7_nu_block():
    k = valuations.kinematic_chi("S7") - valuations.so_block_inverse("S7")
    assert k == SymTensor.odot("nu3", "nu4", q(1, 256))


def test_restriction_of_nu():
    assert valuations.restrict_valuation(Combo.of("nu3")) == Combo(
        {"mu30": q(3, 2), "mu31": -1, "phi3": q(-5, 4), "phib3": q(-5, 4)})


def test_flat_limit_of_t_powers():
    from math import factorial
    from g2spheres.scalar import unit_ball_volume
    for k in range(7):
        tk = valuations.t_lambda_power("S6", k).substitute_s(0)
        tau = Combo({f"mu{k}{j}": factorial(k) * unit_ball_volume(k) / PI ** k
                     for j in range(max(0, k - 3), k // 2 + 1)})
        assert tk == tau
