import json

import pytest

from g2spheres import emit
from g2spheres.scalar import I, LAMBDA, PI, S, q
from g2spheres.tensor import Combo, SymTensor
from g2spheres.trig import TrigPoly


@pytest.mark.parametrize("label,tex", [
    ("mu63", r"\mu^\lambda_{6,3}"), ("nu3", r"\nu^\lambda_{3}"), ("phib3", r"\overline{\phi}^\lambda_{3}"),
    ("Delta41", r"\Delta_{4,1}"), ("Psib2", r"\overline{\Psi}_{2}"), ("Theta63", r"\Theta_{6,3}"),
    ("weird", r"\mathrm{weird}"),
])
def test_label_latex(label, tex):
    assert emit.label_latex(label) == tex


def test_combo_latex_signs_and_parentheses():
    c = Combo({"mu41": -S / 2, "mu42": 1 + PI})
    assert emit.combo_latex(c) == r"-\frac{\sqrt{\lambda}}{2}\mu^\lambda_{4,1} + \left(\pi + 1\right)\mu^\lambda_{4,2}"


def test_complex_coefficient():
    assert emit.combo_latex(Combo.of("nu4", 4 * S * I / (3 * PI))) == r"\frac{4\sqrt{\lambda}}{3\pi}i\nu^\lambda_{4}"


def test_tensor_latex():
    t = SymTensor.odot("mu63", "mu63", 15 * LAMBDA ** 3 / (8 * PI ** 3))
    assert emit.tensor_latex(t) == r"\frac{15\lambda^{3}}{8\pi^{3}}\mu^\lambda_{6,3}\odot \mu^\lambda_{6,3}"


def test_trig_latex():
    f = TrigPoly.sin("rho") * TrigPoly.cos("rho") ** 2
    assert emit.trig_latex(f) == r"\sin(\sqrt{\lambda}\,r)\cos(\sqrt{\lambda}\,r)^{2}"


def test_to_json_sorted():
    text = emit.to_json({"b": Combo.of("mu10", q(1, 2)), "a": 1})
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text)["b"] == {"mu10": "1/2"}
