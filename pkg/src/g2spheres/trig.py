"""Trigonometric polynomials with exact Scalar coefficients.

A :class:`TrigPoly` is a finite sum ``c * prod_x sin(x)^a cos(x)^b`` over
named angle variables.  The canonical form keeps ``a`` in ``{0, 1}`` by
rewriting ``sin^2 = 1 - cos^2``, so structural equality is equality of
functions.  Definite integrals are exact; limits are either numeric
multiples of ``pi`` or another angle variable.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .scalar import ONE, PI, ZERO, Scalar, as_scalar

__all__ = ["TrigPoly", "PiMultiple"]


class PiMultiple:
    """The real number ``m * pi`` for rational ``m`` (used as an integration limit)."""

    __slots__ = ("m",)

    def __init__(self, m):
        self.m = Fraction(m)

    def sin_cos(self):
        # only multiples of pi/2 are supported
        k = self.m * 2
        if k.denominator != 1:
            raise ValueError(f"limit {self.m}*pi is not a multiple of pi/2")
        k = int(k) % 4
        return [(0, 1), (1, 0), (0, -1), (-1, 0)][k]

    def __repr__(self):
        return f"{self.m}*pi"


def _mono_mul(k1, k2):
    """Multiply two monomial keys; returns a list of (key, int coefficient)."""
    exps = {}
    for var, a, b in k1:
        exps[var] = [a, b]
    for var, a, b in k2:
        e = exps.setdefault(var, [0, 0])
        e[0] += a
        e[1] += b
    return _canon(exps)


def _canon(exps):
    # expand sin^(2j) = (1 - cos^2)^j per variable
    out = [((), 1)]
    for var in sorted(exps):
        a, b = exps[var]
        j, a0 = divmod(a, 2)
        pieces = []
        for i in range(j + 1):
            c = comb(j, i) * (-1) ** i
            pieces.append(((var, a0, b + 2 * i), c))
        nxt = []
        for key, c in out:
            for (v, aa, bb), c2 in pieces:
                if aa == 0 and bb == 0:
                    nxt.append((key, c * c2))
                else:
                    nxt.append((key + ((v, aa, bb),), c * c2))
        out = nxt
    return out


class TrigPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def const(cls, c):
        c = as_scalar(c)
        return cls({(): c} if c else {})

    @classmethod
    def monomial(cls, var, a=0, b=0, coeff=ONE):
        exps = {var: [a, b]}
        out = {}
        for key, c in _canon(exps):
            out[key] = out.get(key, ZERO) + as_scalar(coeff) * c
        return cls(out)

    @classmethod
    def sin(cls, var):
        return cls.monomial(var, 1, 0)

    @classmethod
    def cos(cls, var):
        return cls.monomial(var, 0, 1)

    # -- ring --------------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, TrigPoly):
            return other
        return TrigPoly.const(other)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k)
            w = v if w is None else w + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return TrigPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TrigPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TrigPoly):
            try:
                c = as_scalar(other)
            except TypeError:
                return NotImplemented
            if not c:
                return TrigPoly()
            return TrigPoly({k: v * c for k, v in self.terms.items()})
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                v = v1 * v2
                if len(k1) == 0:
                    prods = [(k2, 1)]
                elif len(k2) == 0:
                    prods = [(k1, 1)]
                else:
                    prods = _mono_mul(k1, k2)
                for k, c in prods:
                    w = out.get(k)
                    add = v if c == 1 else v * c
                    out[k] = add if w is None else w + add
        return TrigPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = TrigPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TrigPoly):
            try:
                other = self._coerce(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def conjugate(self):
        return TrigPoly({k: v.conjugate() for k, v in self.terms.items()})

    def variables(self):
        return {var for k in self.terms for var, _, _ in k}

    def is_constant(self):
        return all(k == () for k in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.terms.get((), ZERO)

    def map_scalars(self, f):
        return TrigPoly({k: f(v) for k, v in self.terms.items()})

    # -- calculus ----------------------------------------------------------------
    def _split(self, var):
        """Group terms by the exponent pair of ``var``: {(a, b): TrigPoly in other vars}."""
        groups = {}
        for key, v in self.terms.items():
            ab = (0, 0)
            rest = []
            for item in key:
                if item[0] == var:
                    ab = (item[1], item[2])
                else:
                    rest.append(item)
            g = groups.setdefault(ab, {})
            g[tuple(rest)] = g.get(tuple(rest), ZERO) + v
        return {ab: TrigPoly(g) for ab, g in groups.items()}

    def derivative(self, var):
        out = TrigPoly()
        for (a, b), rest in self._split(var).items():
            piece = TrigPoly()
            if a:
                piece = piece + TrigPoly.monomial(var, a - 1, b + 1, a)
            if b:
                piece = piece - TrigPoly.monomial(var, a + 1, b - 1, b)
            out = out + piece * rest
        return out

    def substitute(self, var, value):
        """Evaluate ``var`` at a :class:`PiMultiple` or rename it to another variable."""
        out = TrigPoly()
        for (a, b), rest in self._split(var).items():
            if isinstance(value, str):
                piece = TrigPoly.monomial(value, a, b)
            else:
                sv, cv = value.sin_cos()
                piece = TrigPoly.const(sv ** a * cv ** b)
            out = out + piece * rest
        return out

    def integrate(self, var, lower, upper):
        """Exact definite integral over ``var`` from ``lower`` to ``upper``.

        Limits are :class:`PiMultiple` values or variable names.  Even powers
        of cosine produce a linear term, which is allowed only between
        numeric limits.
        """
        out = TrigPoly()
        for (a, b), rest in self._split(var).items():
            out = out + _integrate_monomial(var, a, b, lower, upper) * rest
        return out

    # -- display -----------------------------------------------------------------
    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            f = [f"({self.terms[key]})"]
            for var, a, b in key:
                if a:
                    f.append(f"sin({var})")
                if b:
                    f.append(f"cos({var})^{b}" if b > 1 else f"cos({var})")
            parts.append("*".join(f))
        return " + ".join(parts)


def _antiderivative(var, a, b):
    """Antiderivative of sin^a cos^b (a in {0,1}) as a TrigPoly, or None if it has a linear term."""
    if a == 1:
        return TrigPoly.monomial(var, 0, b + 1, Scalar.const(Fraction(-1, b + 1)))
    if b % 2 == 1:
        k = (b - 1) // 2
        out = TrigPoly()
        for j in range(k + 1):
            c = Fraction(comb(k, j) * (-1) ** j, 2 * j + 1)
            out = out + TrigPoly.monomial(var, 2 * j + 1, 1 - 1, Scalar.const(c))
        return out
    return None


def _integrate_monomial(var, a, b, lower, upper):
    F = _antiderivative(var, a, b)
    if F is not None:
        return F.substitute(var, upper) - F.substitute(var, lower)
    # a == 0, b even: cos^b = 2^-b sum_j C(b, j) cos((b - 2j) x)
    if isinstance(lower, str) or isinstance(upper, str):
        raise ValueError("integral of an even cosine power needs numeric limits")
    total = ZERO
    for j in range(b + 1):
        n = b - 2 * j
        c = Fraction(comb(b, j), 2 ** b)
        if n == 0:
            total = total + Scalar.const(c * (upper.m - lower.m)) * PI
        else:
            s_up = PiMultiple(upper.m * abs(n)).sin_cos()[0]
            s_lo = PiMultiple(lower.m * abs(n)).sin_cos()[0]
            total = total + Scalar.const(c * Fraction(s_up - s_lo, abs(n)))
    return TrigPoly.const(total)
