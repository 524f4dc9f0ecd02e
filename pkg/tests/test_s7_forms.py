import itertools

import pytest

from g2spheres import s7_forms
from g2spheres.exterior import solve_linear

g = s7_forms.gen
CHIS = [f"chi{i}" for i in range(4)] + [f"chib{i}" for i in range(4)]


@pytest.mark.parametrize("idx,sign", [((1, 4, 5), 1), ((2, 5, 7), -1), ((5, 4, 1), -1), ((4, 5, 6, 7), 1), ((1, 1, 2), 0)])
def test_epsilon(idx, sign):
    assert s7_forms.epsilon(*idx) == sign


def test_epsilon_antisymmetric():
    for idx in itertools.permutations(range(1, 8), 3):
        for a, b in ((0, 1), (1, 2)):
            swapped = list(idx)
            swapped[a], swapped[b] = swapped[b], swapped[a]
            assert s7_forms.epsilon(*swapped) == -s7_forms.epsilon(*idx)


def test_epsilon_support_is_seven_triples():
    support = {tuple(sorted(t)) for t in itertools.combinations(range(1, 8), 3) if s7_forms.epsilon(*t)}
    assert len(support) == 7


def test_epsilon_range():
    with pytest.raises(ValueError):
        s7_forms.epsilon(0, 1, 2)


def test_theta2_expansion():
    assert len(s7_forms.expand7(g("theta2")).terms) == 3


@pytest.mark.parametrize("i,j", [(i, j) for i in range(4) for j in range(4)])
def test_chi_products_vanish_unless_complementary(i, j):
    prod = s7_forms.expand7(g(f"chi{i}") * g(f"chi{j}"))
    assert bool(prod) == (i + j == 3)


def test_complementary_products_proportional():
    ref = s7_forms.expand7(g("chi1") * g("chi2"))
    for i in range(4):
        sol = solve_linear([s7_forms.expand7(g(f"chi{i}") * g(f"chi{3 - i}"))], [ref])
        assert sol is not None


def test_chi_chibar_lies_in_theta_algebra():
    cands = [s7_forms.expand7(m) for m in s7_forms.theta_monomials(6)]
    for i in range(4):
        for j in range(4):
            target = s7_forms.expand7(g(f"chi{i}") * g(f"chib{j}"))
            if target:
                assert solve_linear([target], cands) is not None


def test_euler_verdier_rules():
    ev = s7_forms.euler_verdier_pullback7
    assert ev(g("theta2")).terms == {("theta2",): -1}
    assert ev(g("chi3")).terms == {("chib3",): 1}
    for i in range(4):
        sign = (-1) ** (i + 1)
        if i < 3:
            assert ev(g(f"theta{i}")).expand() == g(f"theta{i}").scale(sign).expand()
        assert ev(g(f"chi{i}")).expand() == g(f"chib{i}").scale(sign).expand()


def test_euler_verdier_coframe_route():
    for name in ("theta0", "theta1", "chi2", "chib1"):
        p = g(name)
        assert s7_forms.euler_verdier_pullback7(p).expand() == _pull(p)


def _pull(p):
    from g2spheres.s6_forms import pullback_coframe
    return pullback_coframe(s7_forms.expand7(p), s7_forms.euler_verdier_coframe7())
