"""Labelled linear combinations and bilinear tensors with Scalar coefficients.

``Combo`` is a vector over string labels (measures or valuations).
``SymTensor`` stores symmetric tensors by their coefficients on
``a (.) b = (a x b + b x a) / 2``, keyed by the sorted label pair.
``Tensor2`` is an ordinary (left, right) tensor.
"""

from __future__ import annotations

from .scalar import ZERO, Scalar, as_scalar, q

__all__ = ["Combo", "SymTensor", "Tensor2"]


def _clean(d):
    return {k: v for k, v in d.items() if v}


class Combo:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = _clean({k: as_scalar(v) for k, v in (terms or {}).items()})

    @classmethod
    def of(cls, label, coeff=1):
        return cls({label: coeff})

    def __bool__(self):
        return bool(self.terms)

    def __getitem__(self, label):
        return self.terms.get(label, ZERO)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def labels(self):
        return set(self.terms)

    def __add__(self, other):
        if not isinstance(other, Combo):
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return Combo(out)

    def __neg__(self):
        return Combo({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_scalar(c)
        return Combo({k: v * c for k, v in self.terms.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self.scale(as_scalar(c).inv())

    def __eq__(self, other):
        if not isinstance(other, Combo):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def apply(self, mapping):
        """Linear extension of ``label -> Combo``."""
        out = Combo()
        for k, v in self.terms.items():
            out = out + mapping(k).scale(v)
        return out

    def map_scalars(self, f):
        return Combo({k: f(v) for k, v in self.terms.items()})

    def substitute_s(self, value):
        return self.map_scalars(lambda c: c.substitute(value))

    def conjugate(self, conj_label):
        return Combo({conj_label(k): v.conjugate() for k, v in self.terms.items()})

    def to_json(self):
        return {k: str(v) for k, v in sorted(self.terms.items())}

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({v})*{k}" for k, v in sorted(self.terms.items()))


def _key(a, b):
    return (a, b) if a <= b else (b, a)


class SymTensor:
    """Symmetric tensor stored by coefficients on ``a (.) b``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for (a, b), v in (terms or {}).items():
            k = _key(a, b)
            out[k] = out.get(k, ZERO) + as_scalar(v)
        self.terms = _clean(out)

    @classmethod
    def odot(cls, x, y, coeff=1):
        """``coeff * x (.) y`` for Combos ``x``, ``y`` (bilinear)."""
        if isinstance(x, str):
            x = Combo.of(x)
        if isinstance(y, str):
            y = Combo.of(y)
        c = as_scalar(coeff)
        out = {}
        for a, va in x.terms.items():
            for b, vb in y.terms.items():
                k = _key(a, b)
                out[k] = out.get(k, ZERO) + c * va * vb
        return cls(out)

    @classmethod
    def from_matrix(cls, entries):
        """From a symmetric matrix ``{(a, b): k_ab}`` of the tensor ``sum k_ab a x b``."""
        out = {}
        for (a, b), v in entries.items():
            k = _key(a, b)
            out[k] = out.get(k, ZERO) + as_scalar(v)
        return cls(out)

    def __bool__(self):
        return bool(self.terms)

    def __getitem__(self, pair):
        return self.terms.get(_key(*pair), ZERO)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return SymTensor(out)

    def __neg__(self):
        return SymTensor({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_scalar(c)
        return SymTensor({k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, SymTensor):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def to_tensor2(self):
        half = q(1, 2)
        out = {}
        for (a, b), v in self.terms.items():
            if a == b:
                out[(a, a)] = out.get((a, a), ZERO) + v
            else:
                out[(a, b)] = out.get((a, b), ZERO) + v * half
                out[(b, a)] = out.get((b, a), ZERO) + v * half
        return Tensor2(out)

    def apply_both(self, mapping):
        """``(f x f)`` applied to the tensor, ``f`` given on labels as Combos."""
        out = SymTensor()
        for (a, b), v in self.terms.items():
            out = out + SymTensor.odot(mapping(a), mapping(b), v)
        return out

    def substitute_s(self, value):
        return SymTensor({k: v.substitute(value) for k, v in self.terms.items()})

    def labels(self):
        return {x for k in self.terms for x in k}

    def to_json(self):
        return [{"left": a, "right": b, "coeff": str(v)} for (a, b), v in sorted(self.terms.items())]

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({v})*{a}.{b}" for (a, b), v in sorted(self.terms.items()))


class Tensor2:
    """Ordinary two-factor tensor ``sum c (left x right)``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = _clean({k: as_scalar(v) for k, v in (terms or {}).items()})

    @classmethod
    def outer(cls, x, y, coeff=1):
        if isinstance(x, str):
            x = Combo.of(x)
        if isinstance(y, str):
            y = Combo.of(y)
        c = as_scalar(coeff)
        out = {}
        for a, va in x.terms.items():
            for b, vb in y.terms.items():
                out[(a, b)] = out.get((a, b), ZERO) + c * va * vb
        return cls(out)

    def __bool__(self):
        return bool(self.terms)

    def __getitem__(self, pair):
        return self.terms.get(pair, ZERO)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return Tensor2(out)

    def __neg__(self):
        return Tensor2({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_scalar(c)
        return Tensor2({k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Tensor2):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def apply_left(self, mapping):
        out = Tensor2()
        for (a, b), v in self.terms.items():
            out = out + Tensor2.outer(mapping(a), b, v)
        return out

    def apply_right(self, mapping):
        out = Tensor2()
        for (a, b), v in self.terms.items():
            out = out + Tensor2.outer(a, mapping(b), v)
        return out

    def to_json(self):
        return [{"left": a, "right": b, "coeff": str(v)} for (a, b), v in sorted(self.terms.items())]

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({v})*{a}x{b}" for (a, b), v in sorted(self.terms.items()))
