"""LaTeX and JSON rendering of scalars, forms, label combinations and tensors.

Output is deterministic: terms are emitted in sorted order so that repeated
runs produce identical bytes.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

__all__ = [
    "scalar_latex",
    "named_latex",
    "label_latex",
    "combo_latex",
    "tensor_latex",
    "trig_latex",
    "to_json",
]


def _frac_latex(f, with_one=False):
    f = Fraction(f)
    if f.denominator == 1:
        return str(f.numerator) if (with_one or f.numerator != 1) else ""
    return rf"\frac{{{f.numerator}}}{{{f.denominator}}}"


def _power(base, e):
    return base if e == 1 else f"{base}^{{{e}}}"


def _lambda_power(b):
    # s = sqrt(lambda)
    if b == 1:
        return r"\sqrt{\lambda}"
    e = Fraction(b, 2)
    if e.denominator == 1:
        return _power(r"\lambda", e.numerator)
    return rf"\lambda^{{{e.numerator}/{e.denominator}}}"


def _monomial_latex(c, a, b):
    """``c pi^a s^b`` with rational ``c``; negative powers go to the denominator."""
    c = Fraction(c)
    sign = "-" if c < 0 else ""
    c = abs(c)
    up, down = [], []
    for base, e in (("pi", a), ("s", b)):
        if not e:
            continue
        render = (lambda k: _power(r"\pi", k)) if base == "pi" else _lambda_power
        (up if e > 0 else down).append(render(abs(e)))
    num = str(c.numerator) if (c.numerator != 1 or not up) else ""
    num = num + "".join(up) if num or up else "1"
    if c.denominator == 1 and not down:
        return sign + num
    den = (str(c.denominator) if c.denominator != 1 else "") + "".join(down)
    return rf"{sign}\frac{{{num or '1'}}}{{{den}}}"


def _poly_latex(p):
    from .scalar import _sort_key

    parts = []
    for k in sorted(p, key=_sort_key):
        v = p[k]
        if v.im and v.re:
            body = rf"({_frac_latex(v.re, True)}{'+' if v.im > 0 else '-'}{_frac_latex(abs(v.im))}i)"
            body += _monomial_latex(1, *k).lstrip("1") if k != (0, 0) else ""
        elif v.im:
            m = _monomial_latex(v.im, *k)
            body = {"1": "i", "-1": "-i"}.get(m, m + "i")
        else:
            body = _monomial_latex(v.re, *k)
        parts.append(body)
    out = parts[0] if parts else "0"
    for body in parts[1:]:
        out += " - " + body[1:] if body.startswith("-") else " + " + body
    return out


def scalar_latex(x):
    if not x:
        return "0"
    if x.is_laurent():
        return _poly_latex(x.terms())
    return rf"\frac{{{_poly_latex(x.numerator())}}}{{{_poly_latex(x.denominator())}}}"


def _needs_parens(x):
    if not x.is_laurent():
        return False  # rendered as a single \frac
    terms = x.terms()
    return len(terms) > 1 or any(v.re and v.im for v in terms.values())


def _coeff_prefix(c):
    """LaTeX prefix for a coefficient multiplying a symbol."""
    tex = scalar_latex(c)
    if tex == "1":
        return ""
    if tex == "-1":
        return "-"
    if _needs_parens(c):
        return rf"\left({tex}\right)"
    return tex


_LABEL_RULES = [
    (re.compile(r"^mu(\d)(\d)$"), r"\mu^\lambda_{{{0},{1}}}"),
    (re.compile(r"^mu(\d)$"), r"\mu^\lambda_{{{0}}}"),
    (re.compile(r"^nu(\d)$"), r"\nu^\lambda_{{{0}}}"),
    (re.compile(r"^phi(\d)$"), r"\phi^\lambda_{{{0}}}"),
    (re.compile(r"^phib(\d)$"), r"\overline{{\phi}}^\lambda_{{{0}}}"),
    (re.compile(r"^Delta(\d)(\d)$"), r"\Delta_{{{0},{1}}}"),
    (re.compile(r"^Delta(\d)$"), r"\Delta_{{{0}}}"),
    (re.compile(r"^N(\d)(\d)$"), r"N_{{{0},{1}}}"),
    (re.compile(r"^N(\d)$"), r"N_{{{0}}}"),
    (re.compile(r"^(Psi|Phi)b(\d)$"), r"\overline{{\{0}}}_{{{1}}}"),
    (re.compile(r"^(Psi|Phi)(\d)$"), r"\{0}_{{{1}}}"),
    (re.compile(r"^Phib$"), r"\overline{{\Phi}}"),
    (re.compile(r"^Phi$"), r"\Phi"),
    (re.compile(r"^Theta(\d)(\d)$"), r"\Theta_{{{0},{1}}}"),
]


def label_latex(label):
    for pat, fmt in _LABEL_RULES:
        m = pat.match(label)
        if m:
            return fmt.format(*m.groups())
    return rf"\mathrm{{{label}}}"


def _join(terms):
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def combo_latex(combo):
    return _join([f"{_coeff_prefix(c)}{label_latex(k)}" for k, c in sorted(combo.terms.items())])


def tensor_latex(tensor):
    """Symmetric tensors use ``\\odot``, ordinary ones ``\\otimes``."""
    from .tensor import SymTensor

    op = r"\odot" if isinstance(tensor, SymTensor) else r"\otimes"
    return _join([f"{_coeff_prefix(c)}{label_latex(a)}{op} {label_latex(b)}"
                  for (a, b), c in sorted(tensor.terms.items())])


def named_latex(poly):
    model = poly.model
    gens = model.generators
    terms = []
    for mono in sorted(poly.terms, key=lambda k: [model.order[g] for g in k]):
        body = r"\wedge ".join(gens[g].latex for g in mono) or "1"
        terms.append(f"{_coeff_prefix(poly.terms[mono])}{body}")
    return _join(terms)


def trig_latex(tp, rename=None):
    """A TrigPoly; ``rename`` maps variable names to LaTeX (default: rho -> sqrt(lambda) r)."""
    rename = rename or {"rho": r"\sqrt{\lambda}\,r"}
    terms = []
    for key in sorted(tp.terms):
        factors = []
        for var, a, b in key:
            v = rename.get(var, var)
            if a:
                factors.append(_power(rf"\sin({v})", a))
            if b:
                factors.append(_power(rf"\cos({v})", b))
        terms.append(f"{_coeff_prefix(tp.terms[key])}{''.join(factors) or '1'}")
    return _join(terms)


def to_json(obj):
    """Canonical JSON text for objects with a ``to_json`` method or plain data."""
    def default(o):
        if hasattr(o, "to_json"):
            return o.to_json()
        raise TypeError(f"cannot serialize {type(o).__name__}")

    return json.dumps(obj, default=default, indent=2, sort_keys=True)
