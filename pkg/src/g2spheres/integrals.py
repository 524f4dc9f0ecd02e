"""Geodesic ball and sphere evaluations on S^6, kernel checks and the two intersection bounds.

The 4-dimensional geodesic ball ``B(r)`` in a totally geodesic ``S^4`` has
its normal cycle over the boundary parametrized by ``S^3 x S^2_+``.  A lift
to the SU(3)-frame bundle pulls the S^6 coframe back to forms in
``du2, du3, du4, dphi, dtheta`` at a reference point; integrating the top
coefficient over ``phi`` and ``theta`` and multiplying by ``vol(S^3)`` gives
the value of the globalized measure on ``B(r)`` as a trigonometric
polynomial in ``rho = sqrt(lambda) r``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg, measures, s6_forms, valuations
from .exterior import Coframe
from .scalar import I, LAMBDA, ONE, PI, S, ZERO, Scalar, as_scalar, q, sphere_volume
from .tensor import Combo
from .trig import PiMultiple, TrigPoly

__all__ = [
    "BALL_COFRAME",
    "ball_pullback_images",
    "ball_evaluation",
    "printed_ball_values",
    "sphere4_values",
    "ball4_evaluation",
    "kernel_consistency",
    "KernelReport",
    "application_bounds",
    "BoundsResult",
    "pretty",
]

RHO, PHI = "rho", "phi"

BALL_COFRAME = Coframe("S3xS2+", (
    ("du2", "horizontal", 0), ("du3", "horizontal", 0), ("du4", "horizontal", 0),
    ("dphi", "vertical", 0), ("dtheta", "vertical", 0),
))

# du2 du3 du4 dphi dtheta orients the normal cycle; the sign is fixed once by
# requiring [Delta_{3,0}](B(r)) > 0.
ORIENTATION = 1


def _sin(v):
    return TrigPoly.sin(v)


def _cos(v):
    return TrigPoly.cos(v)


def _g(name, coeff):
    return BALL_COFRAME.gen(name, coeff)


@lru_cache(maxsize=None)
def ball_pullback_images():
    """Pullback of the S^6 coframe along the lift of the normal-cycle map.

    ``v1 = cos phi``, ``v2 = sin phi``, ``dv3 = sin phi dtheta`` and
    ``v2 dv1 - v1 dv2 = -dphi`` at the reference point.
    """
    sr, cr = _sin(RHO), _cos(RHO)
    v1, v2 = _cos(PHI), _sin(PHI)
    inv_s = TrigPoly.const(S.inv())
    dv3 = _g("dtheta", v2)
    zero = BALL_COFRAME.zero()
    return {
        "w1": zero,
        "w1b": _g("du3", -inv_s * sr * v2 * sr) + _g("du2", inv_s * sr * v1),
        "w2": _g("du3", -inv_s * sr * v1 * sr) + _g("du2", -inv_s * sr * v2),
        "w2b": zero,
        "w3": _g("du4", inv_s * sr),
        "w3b": _g("du3", -inv_s * cr * sr),
        "p1b1": dv3.scale(cr * v2) + _g("du3", -v1 * cr * sr * v2) + _g("du2", v1 * cr * v1),
        "p21": dv3.scale(v1 * cr) + _g("du3", -v1 * cr * sr * v1) + _g("du2", -v1 * cr * v2),
        "p2b1": _g("dphi", TrigPoly.const(-1)),
        "p31": _g("du4", v1 * cr),
        "p3b1": dv3.scale(-sr) + _g("du3", -v1 * cr * cr),
    }


def _pullback(form):
    images = ball_pullback_images()
    names = s6_forms.COFRAME6.names()
    out = BALL_COFRAME.zero()
    for mask, v in form.terms.items():
        acc = BALL_COFRAME.one(TrigPoly.const(v))
        for i, n in enumerate(names):
            if mask >> i & 1:
                acc = acc.wedge(images[n])
                if not acc:
                    break
        out = out + acc
    return out


def ball_evaluation(item):
    """``[m]_lambda(B(r))`` for an eta-free SU(3) measure (label or Combo) of degree != 4."""
    combo = Combo.of(item) if isinstance(item, str) else item
    basis = measures.su3_basis()
    for lab in combo.terms:
        if basis[lab].degree == 4:
            raise ValueError("degree-4 measures are not evaluated by the normal-cycle pipeline")
    form = measures.form_of(combo, "SU3").expand()
    top = _pullback(form).terms.get(BALL_COFRAME.top_mask())
    if top is None:
        return TrigPoly()
    inner = top.integrate(PHI, PiMultiple(0), PiMultiple(Fraction(1, 2)))
    return inner * (PI * sphere_volume(3) * (2 * ORIENTATION))


def _t(coeff, a, b):
    """``coeff * sin(rho)^a cos(rho)^b``."""
    return TrigPoly.monomial(RHO, 0, 0, as_scalar(coeff)) * (_sin(RHO) ** a) * (_cos(RHO) ** b)


def printed_ball_values():
    """The eight stated ball values, as trigonometric polynomials in rho."""
    s = S
    return {
        "N10": _t(-PI / s, 3, 2),
        "N20": _t(-PI / s ** 2, 4, 1),
        "Phi2": _t(PI / s ** 2, 4, 1),
        "Psi2": _t(4 * PI / (3 * s ** 2), 3, 2),
        "Phi3": _t(-PI ** 2 / s ** 3, 5, 0),
        "Psi3": _t(PI ** 2 / s ** 3, 4, 1),
        "Delta30": _t(PI ** 2 / s ** 3, 5, 0),
        "Delta31": _t(PI ** 2 / s ** 3, 3, 2),
    }


# -- degree 4: Klain functions on the totally geodesic S^4 -------------------------

# Klain values of the degree-4 globalizations at cos(t) e1 + sin(t) e2 of S^4
KLAIN_S4 = {
    "Delta41": (1, 0),  # sin^2 t  as (sin power, cos power)
    "Delta42": (0, 2),  # cos^2 t
}


def ball4_evaluation(label, upper=RHO):
    """``[m]_lambda(B(r))`` for ``Delta41``/``Delta42`` by integrating Klain values.

    ``upper`` is ``"rho"`` (ball) or a :class:`PiMultiple` (``PiMultiple(1)``: whole S^4).
    """
    a, b = KLAIN_S4[label]
    klain = _sin("t") ** (2 * a) * _cos("t") ** b
    integrand = klain * _sin("t") ** 3 * LAMBDA ** -2
    return integrand.integrate("t", PiMultiple(0), upper) * sphere_volume(3)


def sphere4_values():
    return {lab: ball4_evaluation(lab, PiMultiple(1)).constant_value() for lab in KLAIN_S4}


# -- kernel relations -------------------------------------------------------------

@dataclass(frozen=True)
class KernelReport:
    name: str
    passed: bool
    detail: str


def _solve_trig(target, columns, extra=()):
    """Solve ``target = sum x_j columns[j]`` coefficientwise, with extra linear rows."""
    cols = [dict(c.terms) for c in columns]
    tgt = dict(target.terms)
    for k, (row, rhs) in enumerate(extra):
        for j, v in enumerate(row):
            if v:
                cols[j][("extra", k)] = as_scalar(v)
        if rhs:
            tgt[("extra", k)] = as_scalar(rhs)
    return linalg.solve(cols, tgt)


def kernel_consistency():
    """Check every lambda-dependent kernel relation against ball values.

    Returns a list of :class:`KernelReport`.
    """
    out = []
    printed = printed_ball_values()
    for lab, val in printed.items():
        out.append(KernelReport(f"ball[{lab}]", ball_evaluation(lab) == val, str(val)))
    d4 = ball4_evaluation("Delta41") - ball4_evaluation("Delta42") * 4
    out.append(KernelReport("ball[Delta41-4Delta42]", d4 == _t(-2 * PI ** 2 / LAMBDA ** 2, 4, 1), str(d4)))
    s4 = sphere4_values()
    out.append(KernelReport("S4 values", s4 == {"Delta41": 32 * PI ** 2 / (15 * LAMBDA ** 2),
                                                 "Delta42": 8 * PI ** 2 / (15 * LAMBDA ** 2)}, str(s4)))

    # proportionality to [Delta41 - 4 Delta42] fixed by balls
    for lab in ("N20", "Phi2", "Phib2", "Psi3", "Psib3"):
        x = _solve_trig(ball_evaluation(lab), [d4])
        glob = measures.globalize(lab, "S6")
        expected = glob["mu41"]
        ok = x is not None and x[0] == expected and glob == Combo({"mu41": expected, "mu42": -4 * expected})
        out.append(KernelReport(f"kernel[{lab}]", ok, f"factor {x[0] if x else None}"))

    # degree 3: [m] = a D30 + b D31 + c Phi3 + d Phib3
    d30, d31 = ball_evaluation("Delta30"), ball_evaluation("Delta31")
    p3, pb3 = ball_evaluation("Phi3"), ball_evaluation("Phib3")
    six_ball = ([2, 3, 0, 0], 0)  # the six-ball constraint 2a + 3b = 0
    for lab, extra in (
        ("Psi2", [([0, 0, 0, 1], 0)]),  # weight forbids Phib3
        ("Psib2", [([0, 0, 1, 0], 0)]),
        ("N10", [([0, 0, 1, -1], 0)]),  # real: c = d
        ("N31", []),
    ):
        x = _solve_trig(ball_evaluation(lab), [d30, d31, p3, pb3], [six_ball] + extra)
        glob = measures.globalize(lab, "S6")
        want = [glob["mu30"], glob["mu31"], glob["phi3"], glob["phib3"]]
        out.append(KernelReport(f"kernel[{lab}]", x == want, f"coefficients {x}"))
    return out


# -- intersection bounds ----------------------------------------------------------------

@dataclass(frozen=True)
class BoundsResult:
    space: str
    lower: Scalar
    upper: Scalar
    upper_strict: bool
    integrand: Combo


# Klain values as affine functions of plane invariants.
# S^6, 3-planes: c = cos^2(Kahler angle), x = (Re Upsilon)^2, J = Re Upsilon * Im Upsilon;
# Upsilon^2 = 2x - (1 - c) + 2i J.
KLAIN_S6 = {
    "mu30": Combo({"1": 1, "c": -1}),
    "mu31": Combo({"c": 1}),
    "phi3": Combo({"x": 2, "1": -1, "c": 1, "J": 2 * I}),
    "phib3": Combo({"x": 2, "1": -1, "c": 1, "J": -2 * I}),
}
# S^7: a = |phi|_E|^2 on 3-planes, y = |psi|_F|^2 on 4-planes; nu_k = 5 (.) - mu_k
KLAIN_S7 = {
    "mu3": Combo({"1": 1}),
    "nu3": Combo({"a": 5, "1": -1}),
    "mu4": Combo({"1": 1}),
    "nu4": Combo({"y": 5, "1": -1}),
}

_DEG = {"S6": lambda lab: 3 if lab in ("phi3", "phib3") else int(lab[2]),
        "S7": lambda lab: {"nu3": 3, "nu4": 4}.get(lab) or int(lab[2:])}


def _specialize(combo, values):
    """Substitute numeric plane invariants into an affine Combo."""
    out = ZERO
    for var, c in combo.terms.items():
        out = out + c * (ONE if var == "1" else as_scalar(values[var]))
    return out


def _integrand(space_name, kchi, dim_l, dim_m, klain, l_values):
    deg = _DEG[space_name]
    out = Combo()
    for (a, b), coeff in kchi.terms.items():
        for x, y in ((a, b), (b, a)):
            if deg(x) == dim_l and deg(y) == dim_m:
                out = out + klain[y].scale(coeff * q(1, 2) * _specialize(klain[x], l_values))
    return out


def application_bounds():
    """Bounds on the mean intersection number, divided by ``vol(L) vol(M)``.

    S^6: L Lagrangian (Kahler angle pi/2, Re Upsilon = 0), M any 3-fold.
    S^7: L associative (|phi|_L|^2 = 1), M any 4-fold.
    """
    res = []
    k6 = valuations.kinematic_chi("S6")
    f6 = _integrand("S6", k6, 3, 3, KLAIN_S6, {"c": 0, "x": 0, "J": 0})
    if f6["J"]:
        raise AssertionError("imaginary part survives in the S^6 integrand")
    # region: 0 <= c <= 1, 0 <= x <= 1 - c
    vals = [_specialize(f6, {"c": c, "x": x, "J": 0}) for c, x in ((0, 0), (1, 0), (0, 1))]
    res.append(BoundsResult("S6", _min(vals), _max(vals), True, f6))

    k7 = valuations.kinematic_chi("S7")
    f7 = _integrand("S7", k7, 3, 4, KLAIN_S7, {"a": 1})
    vals = [_specialize(f7, {"y": y}) for y in (0, 1)]
    res.append(BoundsResult("S7", _min(vals), _max(vals), True, f7))
    return res


def _num(x):
    # all values are positive rationals times a power of pi; compare numerically
    from math import pi

    total = 0.0
    for (a, b), c in x.terms().items():
        total += float(c.re) * pi ** a
    return total


def _min(vals):
    return min(vals, key=_num)


def _max(vals):
    return max(vals, key=_num)


def pretty(tp):
    """Human-readable form of a TrigPoly in rho."""
    return repr(tp).replace("rho", "sqrt(lambda) r")
