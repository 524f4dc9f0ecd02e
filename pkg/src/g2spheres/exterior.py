"""Sparse exterior algebra over a fixed ordered coframe.

Terms are keyed by bitmasks over the coframe (bit ``i`` set means generator
``i`` is present, always in increasing order).  Coefficients only need ring
operations, so both :class:`~g2spheres.scalar.Scalar` and trigonometric
polynomials can be used.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = ["Coframe", "FormElement", "CoframeMismatch", "solve_linear"]


class CoframeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Coframe:
    """Ordered 1-form generators: ``(name, kind, weight)`` triples."""

    name: str
    generators: tuple
    _index: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        names = [g[0] for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("coframe generator names must be unique")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __len__(self):
        return len(self.generators)

    def index(self, name):
        return self._index[name]

    def names(self):
        return [g[0] for g in self.generators]

    def horizontal_mask(self):
        return sum(1 << i for i, g in enumerate(self.generators) if g[1] == "horizontal")

    def gen(self, name, coeff=ONE):
        return FormElement(self, {1 << self._index[name]: coeff})

    def one(self, coeff=ONE):
        return FormElement(self, {0: coeff})

    def zero(self):
        return FormElement(self, {})

    def top_mask(self):
        return (1 << len(self.generators)) - 1


def _popcount(x):
    return bin(x).count("1")


def merge_sign(a, b):
    """Sign of ``e_a ^ e_b`` relative to ``e_(a|b)``, or 0 if they overlap."""
    if a & b:
        return 0
    # count pairs (i in a, j in b) with i > j
    n = 0
    while b:
        low = b & -b
        n += _popcount(a & ~((low << 1) - 1))
        b ^= low
    return -1 if n & 1 else 1


class FormElement:
    """A sparse element of the exterior algebra of a :class:`Coframe`."""

    __slots__ = ("coframe", "terms")

    def __init__(self, coframe, terms=None):
        self.coframe = coframe
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    # -- structure -----------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return {_popcount(k) for k in self.terms}

    def degree(self):
        d = self.degrees()
        if len(d) > 1:
            raise ValueError("mixed-degree form")
        return d.pop() if d else None

    def bidegree_of(self, mask):
        h = _popcount(mask & self.coframe.horizontal_mask())
        return h, _popcount(mask) - h

    def weight_of(self, mask):
        return sum(g[2] for i, g in enumerate(self.coframe.generators) if mask >> i & 1)

    def _check(self, other):
        if other.coframe is not self.coframe and other.coframe != self.coframe:
            raise CoframeMismatch(f"{self.coframe.name} vs {other.coframe.name}")

    # -- algebra -------------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, FormElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k)
            w = v if w is None else w + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return FormElement(self.coframe, out)

    def __neg__(self):
        return FormElement(self.coframe, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return FormElement(self.coframe, {})
        return FormElement(self.coframe, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, c):
        if isinstance(c, FormElement):
            return self.wedge(c)
        return self.scale(c)

    def __rmul__(self, c):
        return self.scale(c)

    def wedge(self, other):
        self._check(other)
        out = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                sg = merge_sign(ka, kb)
                if not sg:
                    continue
                v = va * vb
                if sg < 0:
                    v = -v
                k = ka | kb
                w = out.get(k)
                out[k] = v if w is None else w + v
        return FormElement(self.coframe, out)

    __xor__ = wedge

    def __eq__(self, other):
        if not isinstance(other, FormElement):
            return NotImplemented
        return self.coframe == other.coframe and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_coefficients(self, f):
        return FormElement(self.coframe, {k: f(v) for k, v in self.terms.items()})

    # -- projections -----------------------------------------------------------
    def grade_part(self, horizontal, vertical):
        hm = self.coframe.horizontal_mask()
        return FormElement(self.coframe, {
            k: v for k, v in self.terms.items()
            if _popcount(k & hm) == horizontal and _popcount(k & ~hm) == vertical
        })

    def containing(self, name):
        bit = 1 << self.coframe.index(name)
        return FormElement(self.coframe, {k: v for k, v in self.terms.items() if k & bit})

    def without(self, name):
        bit = 1 << self.coframe.index(name)
        return FormElement(self.coframe, {k: v for k, v in self.terms.items() if not k & bit})

    def top_coefficient(self, reference):
        """Ratio ``self / reference`` for single-term references."""
        if len(reference.terms) != 1:
            raise ValueError("reference must be a single nonzero term")
        (k, v), = reference.terms.items()
        if set(self.terms) - {k}:
            raise ValueError("form is not proportional to the reference")
        return self.terms.get(k, ZERO) / v

    # -- display ---------------------------------------------------------------
    def mask_names(self, mask):
        return [g[0] for i, g in enumerate(self.coframe.generators) if mask >> i & 1]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            parts.append(f"({self.terms[k]})*{'^'.join(self.mask_names(k)) or '1'}")
        return " + ".join(parts)


def solve_linear(targets, candidates):
    """Express each target as a combination of candidates.

    Returns a list of coefficient lists, or ``None`` when some target lies
    outside the span.  Zero targets give the all-zero combination.
    """
    cols = [c.terms for c in candidates]
    out = []
    for t in targets:
        x = linalg.solve(cols, t.terms)
        if x is None:
            return None
        out.append(x)
    return out


def span_rank(forms):
    return linalg.rank([f.terms for f in forms if f])
