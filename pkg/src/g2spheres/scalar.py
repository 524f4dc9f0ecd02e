"""Exact scalars in the field Q(i)(pi, s) with s = sqrt(lambda).

A :class:`Scalar` is stored as a Laurent polynomial numerator in ``(pi, s)``
over the Gaussian rationals, divided by a polynomial denominator that is
monic (graded-lex), primitive and divisible by neither ``pi`` nor ``s``.
For the overwhelmingly common case the denominator is ``1`` and all
arithmetic stays on the Laurent fast path; genuine polynomial denominators
are reduced with a bivariate gcd over Q(i).
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import total_ordering
from math import factorial

__all__ = [
    "GaussianRational",
    "Scalar",
    "EvaluationError",
    "PI",
    "S",
    "LAMBDA",
    "I",
    "ONE",
    "ZERO",
    "as_scalar",
    "unit_ball_volume",
    "sphere_volume",
]


class EvaluationError(ArithmeticError):
    """Substitution hit a pole."""


@total_ordering
class GaussianRational:
    """An element ``re + i*im`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        return cls(Fraction(x), Fraction(0))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.re == other.re and self.im == other.im

    def __lt__(self, other):
        # total order used only for canonical sorting
        return (self.re, self.im) < (other.re, other.im)

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __add__(self, other):
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        if not self.im and not other.im:
            return GaussianRational(self.re * other.re, Fraction(0))
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of 0 in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * other.inverse()

    def is_one(self):
        return self.re == 1 and not self.im

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        return f"({self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}*i)"


_G0 = GaussianRational(0, 0)
_G1 = GaussianRational(1, 0)


# --- polynomial helpers on dicts {(a, b): GaussianRational} -----------------

def _padd(p, q):
    r = dict(p)
    for k, v in q.items():
        w = r.get(k)
        if w is None:
            r[k] = v
        else:
            w = w + v
            if w:
                r[k] = w
            else:
                del r[k]
    return r


def _pscale(p, c, shift=(0, 0)):
    da, db = shift
    return {(a + da, b + db): v * c for (a, b), v in p.items()}


def _pmul(p, q):
    if len(p) == 1:
        (k, v), = p.items()
        return _pscale(q, v, k)
    if len(q) == 1:
        (k, v), = q.items()
        return _pscale(p, v, k)
    r = {}
    for (a1, b1), v1 in p.items():
        for (a2, b2), v2 in q.items():
            k = (a1 + a2, b1 + b2)
            w = r.get(k)
            r[k] = v1 * v2 if w is None else w + v1 * v2
    return {k: v for k, v in r.items() if v}


def _min_exponents(p):
    return min(a for a, _ in p), min(b for _, b in p)


def _leading(p):
    # graded-lex on (pi, s)
    return max(p, key=lambda k: (k[0] + k[1], k[0], k[1]))


def _to_sympy(p):
    import sympy

    x, y = sympy.symbols("pi_ s_")
    expr = sum(
        (sympy.Rational(v.re.numerator, v.re.denominator)
         + sympy.I * sympy.Rational(v.im.numerator, v.im.denominator)) * x**a * y**b
        for (a, b), v in p.items()
    )
    return sympy.Poly(expr, x, y, domain="QQ_I"), (x, y)


def _from_sympy(poly):
    import sympy

    out = {}
    for (a, b), c in poly.terms():
        re_, im_ = sympy.sympify(c).as_real_imag()
        out[(int(a), int(b))] = GaussianRational(
            Fraction(int(re_.p), int(re_.q)), Fraction(int(im_.p), int(im_.q))
        )
    return out


def _poly_divexact(p, q):
    P, _ = _to_sympy(p)
    Q, _ = _to_sympy(q)
    quo, rem = P.div(Q)
    if not rem.is_zero:
        raise ArithmeticError("inexact polynomial division")
    return _from_sympy(quo)


def _poly_gcd(p, q):
    P, _ = _to_sympy(p)
    Q, _ = _to_sympy(q)
    return _from_sympy(P.gcd(Q))


_ONE_POLY = {(0, 0): _G1}


class Scalar:
    """Element of Q(i)(pi, s).  Immutable; equality is structural."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num=None, den=None, _normalized=False):
        if num is None:
            num = {}
        if den is None:
            den = _ONE_POLY
        if _normalized:
            self._num = num
            self._den = den
        else:
            self._num, self._den = _normalize(num, den)
        self._hash = None

    # -- construction ------------------------------------------------------
    @classmethod
    def const(cls, c):
        c = GaussianRational.coerce(c)
        return cls({(0, 0): c} if c else {}, _ONE_POLY, _normalized=True)

    @classmethod
    def monomial(cls, c=1, pi=0, s=0):
        c = GaussianRational.coerce(c)
        return cls({(pi, s): c} if c else {}, _ONE_POLY, _normalized=True)

    # -- inspection --------------------------------------------------------
    def is_zero(self):
        return not self._num

    def __bool__(self):
        return bool(self._num)

    def is_constant(self):
        return self.is_laurent() and all(k == (0, 0) for k in self._num)

    def is_laurent(self):
        """True when the denominator is 1 (numerator may carry negative powers)."""
        return len(self._den) == 1

    def constant_value(self):
        """The Gaussian rational value of a constant scalar."""
        if not self._num:
            return _G0
        if len(self._num) != 1 or (0, 0) not in self._num or not self.is_laurent():
            raise ValueError(f"{self} is not a constant")
        return self._num[(0, 0)]

    def numerator(self):
        """Polynomial numerator ``{(a, b): GaussianRational}`` with nonnegative exponents."""
        if not self._num:
            return {}
        ma, mb = _min_exponents(self._num)
        da, db = min(ma, 0), min(mb, 0)
        return {(a - da, b - db): v for (a, b), v in self._num.items()}

    def denominator(self):
        if not self._num:
            return dict(_ONE_POLY)
        ma, mb = _min_exponents(self._num)
        da, db = -min(ma, 0), -min(mb, 0)
        return {(a + da, b + db): v for (a, b), v in self._den.items()}

    def terms(self):
        """Laurent terms of the numerator when the denominator is trivial."""
        if not self.is_laurent():
            raise ValueError("scalar has a non-monomial denominator")
        return dict(self._num)

    def s_coefficients(self):
        """Split ``x = sum_b c_b s^b`` with ``c_b`` free of ``s``.

        Requires a denominator free of ``s``.
        """
        if any(b for _, b in self._den):
            raise ValueError("denominator depends on s")
        out = {}
        for (a, b), v in self._num.items():
            out.setdefault(b, {})[(a, 0)] = v
        return {b: Scalar(p, self._den) for b, p in out.items()}

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = as_scalar(other)
        if not other._num:
            return self
        if not self._num:
            return other
        if self._den is _ONE_POLY and other._den is _ONE_POLY:
            return Scalar(_padd(self._num, other._num), _ONE_POLY, _normalized=True)
        if self._den == other._den:
            return Scalar(_padd(self._num, other._num), self._den)
        num = _padd(_pmul(self._num, other._den), _pmul(other._num, self._den))
        return Scalar(num, _pmul(self._den, other._den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar({k: -v for k, v in self._num.items()}, self._den, _normalized=True)

    def __sub__(self, other):
        return self + (-as_scalar(other))

    def __rsub__(self, other):
        return as_scalar(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        if not self._num or not other._num:
            return ZERO
        if self._den is _ONE_POLY and other._den is _ONE_POLY:
            return Scalar(_pmul(self._num, other._num), _ONE_POLY, _normalized=True)
        return Scalar(_pmul(self._num, other._num), _pmul(self._den, other._den))

    __rmul__ = __mul__

    def inv(self):
        if not self._num:
            raise ZeroDivisionError("inversion of the zero scalar")
        if len(self._num) == 1:
            ((a, b), v), = self._num.items()
            inv_c = v.inverse()
            den = _pscale(self._den, inv_c, (-a, -b))
            if len(den) == 1:
                return Scalar(den, _ONE_POLY, _normalized=True)
            return Scalar(den, _ONE_POLY)
        return Scalar(dict(self._den), dict(self._num))

    def __truediv__(self, other):
        return self * as_scalar(other).inv()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inv()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self):
        return Scalar(
            {k: v.conjugate() for k, v in self._num.items()},
            {k: v.conjugate() for k, v in self._den.items()},
        )

    @property
    def real(self):
        return (self + self.conjugate()) * HALF

    @property
    def imag(self):
        return (self - self.conjugate()) * Scalar.const(GaussianRational(0, Fraction(-1, 2)))

    def substitute(self, s_value):
        """Replace ``s`` by a rational value; ``pi`` stays symbolic."""
        v = Fraction(s_value)
        num = _subst(self._num, v)
        den = _subst(self._den, v)
        if not den:
            raise EvaluationError(f"pole at s = {v} (denominator vanishes)")
        return Scalar(num, den)

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self._num.items()), frozenset(self._den.items())))
        return self._hash

    # -- text / json -------------------------------------------------------
    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        num = _poly_str(self._num)
        if self.is_laurent():
            return num
        return f"({num}) / ({_poly_str(self._den)})"

    def to_json(self):
        return {"num": _poly_json(self._num), "den": _poly_json(self._den)}

    @classmethod
    def from_json(cls, obj):
        return cls(_poly_from_json(obj["num"]), _poly_from_json(obj["den"]))

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def loads(cls, text):
        return cls.from_json(json.loads(text))

    @classmethod
    def parse(cls, text):
        """Inverse of ``str``."""
        text = text.strip()
        m = re.fullmatch(r"\((.*)\) / \((.*)\)", text)
        if m:
            return cls(_poly_parse(m.group(1)), _poly_parse(m.group(2)))
        return cls(_poly_parse(text))

    def latex(self):
        from .emit import scalar_latex

        return scalar_latex(self)


def _subst(p, v):
    out = {}
    for (a, b), c in p.items():
        if b < 0:
            if v == 0:
                raise EvaluationError("pole at s = 0")
            f = Fraction(1) / v ** (-b)
        else:
            f = v**b
        if not f:
            continue
        k = (a, 0)
        w = out.get(k)
        val = c * GaussianRational(f, 0)
        out[k] = val if w is None else w + val
    return {k: c for k, c in out.items() if c}


def _normalize(num, den):
    num = {k: v for k, v in num.items() if v}
    if not num:
        return {}, _ONE_POLY
    den = {k: v for k, v in den.items() if v}
    if not den:
        raise ZeroDivisionError("zero denominator")
    if len(den) == 1:
        ((a, b), v), = den.items()
        return _pscale(num, v.inverse(), (-a, -b)), _ONE_POLY
    # shift both to polynomials, cancel the gcd, move monomial content into num
    ma, mb = _min_exponents(num)
    num = {(a - ma, b - mb): v for (a, b), v in num.items()}
    shift_a, shift_b = ma, mb
    da, db = _min_exponents(den)
    if da or db:
        den = {(a - da, b - db): v for (a, b), v in den.items()}
        shift_a -= da
        shift_b -= db
    if len(num) > 1:
        g = _poly_gcd(num, den)
        if len(g) > 1:
            num = _poly_divexact(num, g)
            den = _poly_divexact(den, g)
    else:
        g = _poly_gcd(num, den)
        if len(g) > 1:  # impossible for a monomial num vs primitive den, kept for safety
            num = _poly_divexact(num, g)
            den = _poly_divexact(den, g)
    if len(den) == 1:
        ((a, b), v), = den.items()
        return _pscale(num, v.inverse(), (shift_a - a, shift_b - b)), _ONE_POLY
    lc = den[_leading(den)]
    inv_lc = lc.inverse()
    num = _pscale(num, inv_lc, (shift_a, shift_b))
    den = _pscale(den, inv_lc)
    return num, den


# -- serialization helpers ----------------------------------------------------

def _frac_str(f):
    return str(f)


def _coeff_str(c):
    if not c.im:
        return _frac_str(c.re)
    if not c.re:
        return f"{_frac_str(c.im)}*i"
    return f"({_frac_str(c.re)}{'+' if c.im > 0 else '-'}{_frac_str(abs(c.im))}*i)"


def _sort_key(k):
    a, b = k
    return (-(a + b), -a, -b)


def _poly_str(p):
    if not p:
        return "0"
    parts = []
    for k in sorted(p, key=_sort_key):
        a, b = k
        c = p[k]
        sign = "+"
        if not c.im and c.re < 0:
            sign, c = "-", -c
        factors = [_coeff_str(c)]
        if a:
            factors.append(f"pi^{a}")
        if b:
            factors.append(f"s^{b}")
        parts.append((sign, " * ".join(factors)))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(
    r"(?P<coef>\([^)]*\)|[0-9/]+(?:\*i)?|[-0-9/]+\*i)"
    r"(?: \* pi\^(?P<a>-?\d+))?(?: \* s\^(?P<b>-?\d+))?"
)


def _parse_coeff(text):
    text = text.strip()
    if text.startswith("("):
        inner = text[1:-1]
        m = re.fullmatch(r"(-?[0-9/]+)([+-])([0-9/]+)\*i", inner)
        re_, sgn, im_ = m.groups()
        im = Fraction(im_) * (1 if sgn == "+" else -1)
        return GaussianRational(Fraction(re_), im)
    if text.endswith("*i"):
        return GaussianRational(0, Fraction(text[:-2]))
    return GaussianRational(Fraction(text), 0)


def _poly_parse(text):
    text = text.strip()
    if text == "0":
        return {}
    # split on top-level " + " / " - "
    tokens = []
    depth = 0
    start = 0
    signs = [1]
    i = 0
    if text.startswith("-"):
        signs = [-1]
        text = text[1:]
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and text.startswith(" + ", i) or depth == 0 and text.startswith(" - ", i):
            tokens.append(text[start:i])
            signs.append(1 if text[i + 1] == "+" else -1)
            i += 3
            start = i
            continue
        i += 1
    tokens.append(text[start:])
    out = {}
    for sign, tok in zip(signs, tokens):
        m = _TERM.fullmatch(tok.strip())
        if not m:
            raise ValueError(f"cannot parse scalar term {tok!r}")
        c = _parse_coeff(m.group("coef"))
        if sign < 0:
            c = -c
        k = (int(m.group("a") or 0), int(m.group("b") or 0))
        out[k] = out.get(k, _G0) + c
    return {k: v for k, v in out.items() if v}


def _poly_json(p):
    return [[str(v.re), str(v.im), a, b] for (a, b), v in sorted(p.items(), key=lambda kv: _sort_key(kv[0]))]


def _poly_from_json(terms):
    return {(int(a), int(b)): GaussianRational(Fraction(re_), Fraction(im_)) for re_, im_, a, b in terms}


def as_scalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction, GaussianRational, complex)):
        return Scalar.const(x)
    raise TypeError(f"cannot convert {type(x).__name__} to Scalar")


ZERO = Scalar({}, _ONE_POLY, _normalized=True)
ONE = Scalar.const(1)
HALF = Scalar.const(Fraction(1, 2))
I = Scalar.const(GaussianRational(0, 1))
PI = Scalar.monomial(1, pi=1)
S = Scalar.monomial(1, s=1)
LAMBDA = Scalar.monomial(1, s=2)


def q(num, den=1):
    """Rational scalar shorthand."""
    return Scalar.const(Fraction(num, den))


# Gamma(k/2 + 1) for k <= 7: ball volume omega_k = pi^(k/2) / Gamma(k/2 + 1).
# Odd k carry a sqrt(pi) in Gamma that cancels against pi^(k/2).
_BALL = {
    0: (Fraction(1), 0),
    1: (Fraction(2), 0),
    2: (Fraction(1), 1),
    3: (Fraction(4, 3), 1),
    4: (Fraction(1, 2), 2),
    5: (Fraction(8, 15), 2),
    6: (Fraction(1, 6), 3),
    7: (Fraction(16, 105), 3),
}


def unit_ball_volume(k):
    """omega_k, the volume of the k-dimensional unit ball (0 <= k <= 7)."""
    if k not in _BALL:
        raise ValueError(f"unit_ball_volume defined for 0 <= k <= 7, got {k}")
    c, a = _BALL[k]
    return Scalar.monomial(c, pi=a)


def sphere_volume(k):
    """alpha_k = vol(S^k) = (k + 1) * omega_{k+1} (0 <= k <= 7)."""
    if not 0 <= k <= 7:
        raise ValueError(f"sphere_volume defined for 0 <= k <= 7, got {k}")
    if k == 7:
        # omega_8 = pi^4 / 24
        return Scalar.monomial(Fraction(1, 3), pi=4)
    return Scalar.const(k + 1) * unit_ball_volume(k + 1)


def binomial_half(num, den, j):
    """Generalized binomial coefficient C(num/den, j) as a Fraction."""
    x = Fraction(num, den)
    out = Fraction(1)
    for i in range(j):
        out *= x - i
    return out / factorial(j)
