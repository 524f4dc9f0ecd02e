"""Polynomials in named invariant forms.

A :class:`NamedPoly` is a Scalar-weighted sum of wedge monomials in the named
generators of a :class:`FormModel`.  Monomials are stored as tuples sorted by
the model's generator order; odd generators anticommute and square to zero,
even ones commute.  The model knows how to expand every generator on its
coframe, and optionally carries a formal exterior derivative table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exterior import FormElement
from .scalar import I, ONE, ZERO, Scalar, as_scalar, q

__all__ = ["Generator", "FormModel", "NamedPoly"]


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    bidegree: tuple
    weight: int
    latex: str
    conjugate: str = None  # name of the conjugate generator (None: real)


class FormModel:
    """Named generators over a coframe, plus expansion and derivative data."""

    def __init__(self, name, coframe, generators, expansions):
        self.name = name
        self.coframe = coframe
        self.generators = {g.name: g for g in generators}
        self.order = {g.name: i for i, g in enumerate(generators)}
        self._expansions = dict(expansions)
        self._monomial_cache = {(): coframe.one()}
        self.d_table = None
        # complex generator -> (real part name, imaginary part name)
        self.split = {}

    # -- construction helpers --------------------------------------------------
    def gen(self, name, coeff=ONE):
        if name not in self.generators:
            raise KeyError(f"unknown generator {name!r} in model {self.name}")
        return NamedPoly(self, {(name,): as_scalar(coeff)})

    def const(self, c):
        return NamedPoly(self, {(): as_scalar(c)} if c else {})

    def zero(self):
        return NamedPoly(self, {})

    def __getitem__(self, name):
        return self.gen(name)

    # -- monomial arithmetic ---------------------------------------------------
    def sort_monomial(self, names):
        """Sort a tuple of generator names, returning ``(sign, sorted)``; sign 0 kills it."""
        items = list(names)
        sign = 1
        order = self.order
        gens = self.generators
        # insertion sort tracking odd transpositions
        for i in range(1, len(items)):
            j = i
            while j > 0 and order[items[j - 1]] > order[items[j]]:
                if gens[items[j - 1]].degree & 1 and gens[items[j]].degree & 1:
                    sign = -sign
                items[j - 1], items[j] = items[j], items[j - 1]
                j -= 1
        for a, b in zip(items, items[1:]):
            if a == b and gens[a].degree & 1:
                return 0, ()
        return sign, tuple(items)

    def expand_monomial(self, mono):
        cached = self._monomial_cache.get(mono)
        if cached is not None:
            return cached
        head = self.expand_monomial(mono[:-1])
        out = head.wedge(self._expansions[mono[-1]])
        self._monomial_cache[mono] = out
        return out

    def expansion(self, name):
        return self._expansions[name]

    def monomial_degree(self, mono):
        return sum(self.generators[g].degree for g in mono)

    def monomial_bidegree(self, mono):
        h = sum(self.generators[g].bidegree[0] for g in mono)
        v = sum(self.generators[g].bidegree[1] for g in mono)
        return h, v

    def monomial_weight(self, mono):
        return sum(self.generators[g].weight for g in mono)

    def monomials(self, degree, allowed=None):
        """All sorted monomials of a given degree in the allowed generators."""
        names = [g for g in self.order if allowed is None or g in allowed]
        names.sort(key=self.order.get)
        out = []

        def rec(start, remaining, acc):
            if remaining == 0:
                out.append(tuple(acc))
                return
            for i in range(start, len(names)):
                g = self.generators[names[i]]
                if g.degree > remaining:
                    continue
                nxt = i + 1 if g.degree & 1 else i
                acc.append(g.name)
                rec(nxt, remaining - g.degree, acc)
                acc.pop()

        rec(0, degree, [])
        return out


class NamedPoly:
    """Immutable polynomial in named generators with Scalar coefficients."""

    __slots__ = ("model", "terms")

    def __init__(self, model, terms=None):
        self.model = model
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, NamedPoly):
            return other
        return self.model.const(as_scalar(other))

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
        return NamedPoly(self.model, out)

    __radd__ = __add__

    def __neg__(self):
        return NamedPoly(self.model, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = as_scalar(c)
        if not c:
            return NamedPoly(self.model, {})
        return NamedPoly(self.model, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NamedPoly):
            return self.wedge(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        return self.scale(as_scalar(c).inv())

    def wedge(self, other):
        other = self._coerce(other)
        out = {}
        m = self.model
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                sg, mono = m.sort_monomial(ka + kb)
                if not sg:
                    continue
                v = va * vb
                if sg < 0:
                    v = -v
                w = out.get(mono)
                out[mono] = v if w is None else w + v
        return NamedPoly(m, out)

    __xor__ = wedge

    def __pow__(self, n):
        out = self.model.const(1)
        for _ in range(n):
            out = out.wedge(self)
        return out

    def __eq__(self, other):
        if not isinstance(other, NamedPoly):
            try:
                other = self._coerce(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- structure -------------------------------------------------------------
    def degree(self):
        ds = {self.model.monomial_degree(k) for k in self.terms}
        if len(ds) > 1:
            raise ValueError("mixed-degree polynomial")
        return ds.pop() if ds else None

    def weights(self):
        return {self.model.monomial_weight(k) for k in self.terms}

    def filter(self, pred):
        return NamedPoly(self.model, {k: v for k, v in self.terms.items() if pred(k)})

    def substitute(self, images):
        """Replace generators by NamedPoly images (an algebra homomorphism)."""
        m = self.model
        out = m.zero()
        for mono, c in self.terms.items():
            acc = m.const(c)
            for g in mono:
                acc = acc.wedge(images[g] if g in images else m.gen(g))
            out = out + acc
        return out

    def conjugate(self):
        m = self.model
        out = {}
        for mono, c in self.terms.items():
            swapped = tuple(m.generators[g].conjugate or g for g in mono)
            sg, mono2 = m.sort_monomial(swapped)
            v = c.conjugate()
            if sg < 0:
                v = -v
            w = out.get(mono2)
            out[mono2] = v if w is None else w + v
        return NamedPoly(m, out)

    def real_form(self):
        """Rewrite every complex generator as ``R + iI`` (conjugates as ``R - iI``)."""
        m = self.model
        images = {}
        for z, (re_, im_) in m.split.items():
            images[z] = m.gen(re_) + m.gen(im_).scale(I)
            zb = m.generators[z].conjugate
            images[zb] = m.gen(re_) - m.gen(im_).scale(I)
        return self.substitute(images)

    def complex_form(self):
        """Rewrite every split generator via ``R = (z + zb)/2`` and ``I = (z - zb)/(2i)``."""
        m = self.model
        images = {}
        for z, (re_, im_) in m.split.items():
            zb = m.generators[z].conjugate
            images[re_] = (m.gen(z) + m.gen(zb)).scale(q(1, 2))
            images[im_] = (m.gen(z) - m.gen(zb)).scale(-I * q(1, 2))
        return self.substitute(images)

    def expand(self):
        """Expansion on the coframe, a :class:`FormElement`."""
        m = self.model
        out = m.coframe.zero()
        acc = {}
        for mono, c in self.terms.items():
            f = m.expand_monomial(mono)
            for k, v in f.terms.items():
                w = acc.get(k)
                acc[k] = v * c if w is None else w + v * c
        return FormElement(m.coframe, acc) if acc else out

    def d(self):
        """Formal exterior derivative via the model's table (graded Leibniz rule)."""
        m = self.model
        if m.d_table is None:
            raise NotImplementedError(f"model {m.name} has no derivative table")
        out = m.zero()
        for mono, c in self.terms.items():
            sign = 1
            for i, g in enumerate(mono):
                dg = m.d_table[g]
                if dg:
                    left = NamedPoly(m, {mono[:i]: ONE})
                    right = NamedPoly(m, {mono[i + 1:]: ONE})
                    piece = left.wedge(dg).wedge(right).scale(c if sign > 0 else -c)
                    out = out + piece
                if m.generators[g].degree & 1:
                    sign = -sign
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda k: [self.model.order[g] for g in k]):
            parts.append(f"({self.terms[mono]})*{'^'.join(mono) or '1'}")
        return " + ".join(parts)

    def latex(self):
        from .emit import named_latex

        return named_latex(self)
