"""Invariant curvature measures on S^6 (SU(3) labels) and S^7 (G2 labels).

Each basis measure carries its representing 5-form (S^6) or 6-form (S^7);
the volume measures are pure eta-parts and carry no form.  Besides the
registries this module holds

* the Euler-Verdier and antipodal actions (printed tables, and the same
  actions recomputed from the form pullbacks),
* the lambda-parametric globalization maps,
* the restriction from S^7 to the equatorial S^6, both as a stored table and
  recomputed by pulling back along the frame lift and integrating over t.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from . import linalg, rumin, s6_forms, s7_forms
from .exterior import Coframe, FormElement
from .named import NamedPoly
from .scalar import I, LAMBDA, ONE, PI, S, ZERO, Scalar, q, sphere_volume, unit_ball_volume
from .tensor import Combo
from .trig import PiMultiple, TrigPoly

__all__ = [
    "CurvatureMeasure",
    "su3_basis",
    "g2_basis",
    "build_delta",
    "build_N",
    "build_theta7",
    "conj_label",
    "real_part",
    "imag_part",
    "euler_verdier",
    "antipodal",
    "euler_verdier_from_forms",
    "antipodal_from_forms",
    "globalize",
    "recognize_su3",
    "restriction_table",
    "restrict_computed",
    "restriction_kernel",
    "rumin_kernel",
    "dump_json",
]


@dataclass(frozen=True)
class CurvatureMeasure:
    label: str
    group: str  # "SU3" or "G2"
    degree: int
    weight: int  # U(1)-weight for SU3 labels; G2 labels use 0 (conjugate pair +-1)
    parity: int  # Euler-Verdier sign; conjugating actions are tabulated separately
    form: NamedPoly = field(default=None, compare=False, repr=False)
    volume_part: bool = False
    latex: str = ""
    conjugate: str = None


# -- labels ---------------------------------------------------------------------------

_CONJ = {
    "Psi2": "Psib2", "Psib2": "Psi2", "Psi3": "Psib3", "Psib3": "Psi3",
    "Phi2": "Phib2", "Phib2": "Phi2", "Phi3": "Phib3", "Phib3": "Phi3",
    "Phi": "Phib", "Phib": "Phi",
    "phi3": "phib3", "phib3": "phi3",
}


def conj_label(label):
    return _CONJ.get(label, label)


def real_part(label):
    """``Re X = (X + Xbar)/2`` as a Combo of basis labels."""
    return Combo({label: q(1, 2), conj_label(label): q(1, 2)}) if conj_label(label) != label else Combo.of(label)


def imag_part(label):
    """``Im X = (X - Xbar)/(2i)`` as a Combo of basis labels."""
    c = -I * q(1, 2)
    return Combo({label: c, conj_label(label): -c})


def conjugate_combo(c):
    return c.conjugate(conj_label)


# -- SU(3) ------------------------------------------------------------------------

def _c_kq(k, qq):
    return (Scalar.const(factorial(qq) * factorial(3 - k + qq) * factorial(k - 2 * qq)) * unit_ball_volume(6 - k)).inv()


def _mono6(b0, b1, b2, lead):
    m = s6_forms.model()
    out = m[lead]
    for name, e in (("theta0", b0), ("theta1", b1), ("theta2", b2)):
        if e < 0:
            return m.zero()
        out = out * (m[name] ** e)
    return out


def _B(k, qq):
    return _mono6(3 - k + qq, k - 2 * qq - 1, qq, "beta").scale(_c_kq(k, qq))


def _Gamma(k, qq):
    return _mono6(2 - k + qq, k - 2 * qq, qq, "gamma").scale(_c_kq(k, qq) * q(1, 2))


def _check_kq(k, qq):
    if not (max(0, k - 3) <= qq and 2 * qq <= k and k <= 6):
        raise ValueError(f"index out of range: k={k}, q={qq}")


def build_delta(k, qq):
    """The measure Delta_{k,q}; Delta_{6,3} is the volume measure."""
    _check_kq(k, qq)
    label = f"Delta{k}{qq}"
    tex = rf"\Delta_{{{k},{qq}}}"
    if k == 6:
        return CurvatureMeasure(label, "SU3", 6, 0, 1, None, True, tex)
    form = (_Gamma(k, qq).scale(2 * (3 - k + qq)) + _B(k, qq).scale(k - 2 * qq)).scale(q(1, 6 - k))
    return CurvatureMeasure(label, "SU3", k, 0, (-1) ** k, form, False, tex)


def build_N(k, qq):
    _check_kq(k, qq)
    if k == 6:
        raise ValueError("N_{6,3} is not defined")
    form = (_Gamma(k, qq) - _B(k, qq)).scale(q(2 * (3 - k + qq), 6 - k))
    return CurvatureMeasure(f"N{k}{qq}", "SU3", k, 0, (-1) ** k, form, False, rf"N_{{{k},{qq}}}")


def _weighted():
    m = s6_forms.model()
    g, b = m["gamma"], m["beta"]
    t1 = m["theta1"]
    psi2 = (g * t1 * m["chi1"]).scale((2 * PI ** 2).inv())
    psi3 = (b * t1 * m["chi1"]).scale((4 * PI).inv())
    phi2 = (g * m["chi0"] * m["chi2"]).scale((2 * PI ** 2).inv())
    phi3 = (b * m["chi0"] * m["chi2"]).scale(-(4 * PI).inv())
    out = []
    for label, deg, w, par, form, tex in (
        ("Psi2", 2, 1, -1, psi2, r"\Psi_2"),
        ("Phi2", 2, 2, 1, phi2, r"\Phi_2"),
        ("Psi3", 3, 1, 1, psi3, r"\Psi_3"),
        ("Phi3", 3, 2, -1, phi3, r"\Phi_3"),
    ):
        bl = conj_label(label)
        out.append(CurvatureMeasure(label, "SU3", deg, w, par, form, False, tex, bl))
        out.append(CurvatureMeasure(bl, "SU3", deg, -w, par, form.conjugate(), False, rf"\overline{{{tex}}}", label))
    return out


_SU3_ORDER = (
    "Delta00", "Delta10", "N10", "Delta20", "Delta21", "N20", "Psi2", "Psib2", "Phi2", "Phib2",
    "Delta30", "Delta31", "N31", "Psi3", "Psib3", "Phi3", "Phib3",
    "Delta41", "Delta42", "Delta52", "Delta63",
)


@lru_cache(maxsize=None)
def su3_basis():
    """Ordered dict label -> CurvatureMeasure (21 elements)."""
    items = {}
    for k in range(7):
        for qq in range(max(0, k - 3), k // 2 + 1):
            items[f"Delta{k}{qq}"] = build_delta(k, qq)
    for k, qq in ((1, 0), (2, 0), (3, 1)):
        items[f"N{k}{qq}"] = build_N(k, qq)
    for cm in _weighted():
        items[cm.label] = cm
    return {lab: items[lab] for lab in _SU3_ORDER}


# -- G2 -------------------------------------------------------------------------------

def build_theta7(k, p):
    """Theta_{k,p} on S^7 as a named 6-form."""
    if not (max(0, k - 3) <= p and 2 * p <= k <= 6):
        raise ValueError(f"index out of range: k={k}, p={p}")
    m = s7_forms.model()
    a, b = 3 + p - k, k - 2 * p
    norm = Scalar.const(factorial(a) * factorial(b) * factorial(p)) * sphere_volume(6 - k)
    return ((m["theta0"] ** a) * (m["theta1"] ** b) * (m["theta2"] ** p)).scale(norm.inv())


def _theta_range(k):
    return range(max(0, k - 3), k // 2 + 1)


def _delta7_form(k):
    m = s7_forms.model()
    out = m.zero()
    for p in _theta_range(k):
        out = out + build_theta7(k, p)
    return out


_G2_ORDER = ("Delta0", "Delta1", "Delta2", "N2", "Delta3", "N3", "Phi", "Phib",
             "Delta4", "N4", "Delta5", "Delta6", "Delta7")


@lru_cache(maxsize=None)
def g2_basis():
    """Ordered dict label -> CurvatureMeasure (13 elements)."""
    m = s7_forms.model()
    items = {}
    for k in range(7):
        items[f"Delta{k}"] = CurvatureMeasure(f"Delta{k}", "G2", k, 0, (-1) ** k, _delta7_form(k), False, rf"\Delta_{k}")
    items["Delta7"] = CurvatureMeasure("Delta7", "G2", 7, 0, -1, None, True, r"\Delta_7")
    th = build_theta7
    items["N2"] = CurvatureMeasure("N2", "G2", 2, 0, 1, -th(2, 0) + th(2, 1).scale(4), False, "N_2")
    items["N3"] = CurvatureMeasure("N3", "G2", 3, 0, -1, th(3, 0).scale(4) - th(3, 1).scale(q(8, 3)), False, "N_3")
    items["N4"] = CurvatureMeasure("N4", "G2", 4, 0, 1, -th(4, 1) + th(4, 2).scale(4), False, "N_4")
    phi = (m["chi0"] * m["chi3"]).scale(-I / (2 * PI ** 2))
    items["Phi"] = CurvatureMeasure("Phi", "G2", 3, 1, -1, phi, False, r"\Phi", "Phib")
    items["Phib"] = CurvatureMeasure("Phib", "G2", 3, -1, -1, phi.conjugate(), False, r"\overline{\Phi}", "Phi")
    return {lab: items[lab] for lab in _G2_ORDER}


def basis(group):
    return su3_basis() if group == "SU3" else g2_basis()


def form_of(combo, group):
    """Representing form of a combination of eta-free basis measures."""
    b = basis(group)
    model = s6_forms.model() if group == "SU3" else s7_forms.model()
    out = model.zero()
    for lab, c in combo.terms.items():
        if b[lab].volume_part:
            raise ValueError(f"{lab} has a volume part")
        out = out + b[lab].form.scale(c)
    return out


# -- involutions (printed tables) ---------------------------------------------------

def euler_verdier(label, group="SU3"):
    """Printed Euler-Verdier action on a basis label."""
    cm = basis(group)[label]
    if group == "G2" and label in ("Phi", "Phib"):
        return Combo.of(conj_label(label), -1)
    return Combo.of(label, cm.parity)


def antipodal(label):
    """Printed antipodal action on SU(3) labels: fixes weight 0, conjugates the rest."""
    return Combo.of(conj_label(label))


# -- recognition in the S^6 measure span ---------------------------------------------

_ALPHA = "w1"


@lru_cache(maxsize=None)
def _dalpha_columns():
    m = s6_forms.model()
    allowed = ("beta", "gamma", "theta0", "theta1", "theta2", "thetas",
               "chi0", "chi1", "chi2", "chib0", "chib1", "chib2")
    da = m["alpha"].d()
    cols = []
    for mono in m.monomials(3, allowed=allowed):
        f = (da * NamedPoly(m, {mono: ONE})).expand().without(_ALPHA)
        if f:
            cols.append(f.terms)
    return tuple(cols)


@lru_cache(maxsize=None)
def _measure_columns():
    labels = [lab for lab, cm in su3_basis().items() if not cm.volume_part]
    cols = [su3_basis()[lab].form.expand().without(_ALPHA).terms for lab in labels]
    return tuple(labels), tuple(cols)


def recognize_su3(form):
    """Express a 5-form on SS^6 modulo alpha and d(alpha) as a combination of measures.

    ``form`` is a :class:`FormElement` on the S^6 coframe (or a NamedPoly).
    Raises ``ArithmeticError`` when the form is outside the span.
    """
    if isinstance(form, NamedPoly):
        form = form.expand()
    labels, cols = _measure_columns()
    target = form.without(_ALPHA).terms
    x = linalg.solve(list(cols) + list(_dalpha_columns()), target)
    if x is None:
        raise ArithmeticError("form is not an invariant curvature-measure form")
    return Combo({lab: c for lab, c in zip(labels, x)})


def _recognize_g2(form):
    labels = [lab for lab, cm in g2_basis().items() if not cm.volume_part]
    cols = [g2_basis()[lab].form.expand().without("o1").terms for lab in labels]
    x = linalg.solve(cols, form.expand().without("o1").terms)
    if x is None:
        raise ArithmeticError("form is not in the span of the G2 measure forms")
    return Combo({lab: c for lab, c in zip(labels, x)})


def euler_verdier_from_forms(label, group="SU3"):
    """Euler-Verdier action recomputed from the fiberwise antipodal pullback.

    On measures, ``sigma = (-1)^n a^*`` with ``n`` the dimension of the space.
    """
    cm = basis(group)[label]
    if cm.volume_part:
        # vol_n(A cap U) picks up the sign (-1)^n
        return Combo.of(label, 1 if group == "SU3" else -1)
    if group == "SU3":
        return recognize_su3(s6_forms.euler_verdier_pullback(cm.form))
    return _recognize_g2(s7_forms.euler_verdier_pullback7(cm.form)).scale(-1)


def antipodal_from_forms(label):
    """Antipodal action on SU(3) labels from the form pullback.

    The antipodal map reverses the orientation of S^6, so the measure
    transforms with an extra sign relative to the form.
    """
    cm = su3_basis()[label]
    if cm.volume_part:
        return Combo.of(label)
    return recognize_su3(s6_forms.antipodal_pullback(cm.form)).scale(-1)


# -- globalization ----------------------------------------------------------------

def _glob_su3(label):
    lam, s, pi = LAMBDA, S, PI
    d4 = Combo({"mu41": 1, "mu42": -4})
    d3 = Combo({"mu30": 1, "mu31": q(-2, 3)})
    if label.startswith("Delta"):
        return Combo.of("mu" + label[5:])
    table = {
        "N31": Combo(),
        "N20": d4.scale(lam / (2 * pi)),
        "Phi2": d4.scale(-lam / (2 * pi)),
        "Phib2": d4.scale(-lam / (2 * pi)),
        "Psi3": d4.scale(-s / 2),
        "Psib3": d4.scale(-s / 2),
        "N10": (d3 + real_part("phi3")).scale(3 * lam / (2 * pi)),
        "Psi2": (d3 + Combo.of("phi3")).scale(-2 * s / pi),
        "Psib2": (d3 + Combo.of("phib3")).scale(-2 * s / pi),
        "Phi3": Combo.of("phi3"),
        "Phib3": Combo.of("phib3"),
    }
    return table[label]


def _glob_g2(label):
    lam, s, pi = LAMBDA, S, PI
    if label.startswith("Delta"):
        return Combo.of("mu" + label[5:])
    re_phi = Combo.of("nu3", q(1, 4))
    im_phi = Combo.of("nu4", 4 * s / (3 * pi))
    table = {
        "N2": Combo.of("nu4", -3 * lam / (2 * pi)),
        "N3": Combo.of("nu3"),
        "N4": Combo.of("nu4"),
        "Phi": re_phi + im_phi.scale(I),
        "Phib": re_phi - im_phi.scale(I),
    }
    return table[label]


def globalize(item, space="S6"):
    """Globalization of a basis label or a Combo; lambda stays symbolic."""
    f = _glob_su3 if space == "S6" else _glob_g2
    if isinstance(item, str):
        return f(item)
    return item.apply(f)


# -- restriction S^7 -> S^6 ---------------------------------------------------------

def restriction_table():
    """Stored restriction table on the G2 basis (complex labels)."""
    re3 = real_part("Phi3")
    out = {
        "Delta7": Combo(),
        "N2": Combo.of("N20") - real_part("Phi2").scale(2),
        "N3": Combo({"Delta30": q(3, 2), "Delta31": -1, "N31": q(-5, 3)}) - re3.scale(q(5, 2)),
        "N4": Combo({"Delta41": -1, "Delta42": 4}),
    }
    for k in range(7):
        out[f"Delta{k}"] = Combo({f"Delta{k}{qq}": 1 for qq in range(max(0, k - 3), k // 2 + 1)})
    re_phi = Combo({"Delta30": q(3, 8), "Delta31": q(-1, 4), "N31": q(1, 4)}) - re3.scale(q(5, 8))
    im_phi = real_part("Psi3").scale(Scalar.const(8) / (3 * PI))
    out["Phi"] = re_phi + im_phi.scale(I)
    out["Phib"] = re_phi - im_phi.scale(I)
    return {lab: out[lab] for lab in _G2_ORDER}


RES_COFRAME = Coframe("SS6xI", (("dt", "vertical", 0),) + s6_forms.COFRAME6.generators)


def _r(name, coeff=None):
    return RES_COFRAME.gen(name, coeff if coeff is not None else TrigPoly.const(1))


@lru_cache(maxsize=None)
def _frame_images():
    """Pullback of the S^7 coframe along the lift of f(u, t) = cos t e0 + sin t u."""
    sin, cos = TrigPoly.sin("t"), TrigPoly.cos("t")
    r = _r
    return {
        "o1": r("w1", sin),
        "o2": r("w1", cos),
        "o3": r("w1b"),
        "o4": r("w2"),
        "o5": r("w3b", -sin) + r("w2b", cos),
        "o6": r("w3b", -cos) + r("w2b", -sin),
        "o7": r("w3"),
        "f21": r("dt", TrigPoly.const(-1)),
        "f31": r("p1b1", sin),
        "f41": r("p21", sin),
        "f51": r("p3b1", -sin * sin) + r("p2b1", sin * cos),
        "f61": r("p3b1", -sin * cos) + r("p2b1", -sin * sin),
        "f71": r("p31", sin),
    }


def _pullback7(form7):
    images = _frame_images()
    names = s7_forms.COFRAME7.names()
    out = RES_COFRAME.zero()
    for mask, v in form7.terms.items():
        acc = RES_COFRAME.one(TrigPoly.const(v))
        for i, n in enumerate(names):
            if mask >> i & 1:
                acc = acc.wedge(images[n])
                if not acc:
                    break
        out = out + acc
    return out


def _fiber_integrate(form):
    """p_*: integrate the coefficient of ``dt ^ (...)`` over the fiber.

    The fiber is oriented by the connection form ``f21 = -dt``, so t runs
    from pi down to 0.
    """
    terms = {}
    for mask, v in form.terms.items():
        if mask & 1:
            val = v.integrate("t", PiMultiple(1), PiMultiple(0)).constant_value()
            if val:
                terms[mask >> 1] = val
    return FormElement(s6_forms.COFRAME6, terms)


def _boundary_value(form, t_value):
    terms = {}
    for mask, v in form.terms.items():
        if not mask & 1:
            val = v.substitute("t", t_value).constant_value()
            if val:
                terms[mask >> 1] = val
    return FormElement(s6_forms.COFRAME6, terms)


def _eta_part(form):
    """pi_*: difference of the boundary values at t = 0 and t = pi, relative to dvol(S^6)."""
    diff = _boundary_value(form, PiMultiple(0)) - _boundary_value(form, PiMultiple(1))
    if not diff:
        return ZERO
    return diff.top_coefficient(s6_forms.dvol_base().expand())


def restrict_computed(label):
    """Restriction of a G2 basis measure recomputed by fiber integration."""
    cm = g2_basis()[label]
    if cm.volume_part:
        # vol_7 of a set inside S^6 vanishes
        return Combo()
    pulled = _pullback7(cm.form.expand())
    out = recognize_su3(_fiber_integrate(pulled))
    eta = _eta_part(pulled)
    if eta:
        out = out + Combo.of("Delta63", eta)
    return out


def restriction_kernel():
    """Basis of the kernel of the stored restriction map, as Combos of G2 labels."""
    table = restriction_table()
    labels = list(table)
    cols = [table[lab].terms for lab in labels]
    return [Combo({lab: c for lab, c in zip(labels, v)}) for v in linalg.nullspace(cols)]


# -- Rumin certificate over the measure basis ------------------------------------

def _d_vector(label):
    cm = su3_basis()[label]
    D = rumin.rumin_differential(cm.form).D.expand()
    col = dict(D.terms)
    fi = s6_forms.fiber_integral(cm.form)
    if fi:
        col["fiber"] = fi
    return col


@lru_cache(maxsize=None)
def _d_columns(labels):
    return tuple(_d_vector(lab) for lab in labels)


def rumin_kernel(max_degree=3, constant=True):
    """Kernel of ``m -> (D m, fiber integral)`` on eta-free SU(3) measures.

    With ``constant=True`` only combinations with lambda-free coefficients
    are kept (those in the kernel for every lambda); otherwise the kernel is
    taken over the full coefficient field (a fixed generic lambda).
    """
    labels = tuple(lab for lab, cm in su3_basis().items()
                   if not cm.volume_part and cm.degree <= max_degree)
    cols = _d_columns(labels)
    if constant:
        split = []
        for col in cols:
            new = {}
            for key, v in col.items():
                for b, part in v.s_coefficients().items():
                    if part:
                        new[(key, b)] = part
            split.append(new)
        cols = split
    return labels, [Combo({lab: c for lab, c in zip(labels, v)}) for v in linalg.nullspace(list(cols))]


# -- JSON ---------------------------------------------------------------------------------

def dump_json():
    def meta(cm):
        return {"label": cm.label, "degree": cm.degree, "weight": cm.weight,
                "parity": cm.parity, "volume_part": cm.volume_part, "conjugate": cm.conjugate}

    return json.dumps({
        "SU3": [meta(cm) for cm in su3_basis().values()],
        "G2": [meta(cm) for cm in g2_basis().values()],
    }, indent=2, sort_keys=True)
