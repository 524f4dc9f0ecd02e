"""The algebras of invariant valuations on S^6_lambda and S^7_lambda.

Both algebras are presented abstractly (``RingPresentation``) and realised
in the curvature-measure basis through a lambda-dependent change of basis:

* S^6: ``C[t, u, phi3, phib3] / I`` with ``t -> t_l - (3 lambda / 8) t_l^3``,
  ``u -> u_l = (2/pi) mu21``, ``phi3 -> phi3``;
* S^7: ``C[t, u] / (t^2 u, u^2 + t^6)`` with ``t -> t_l``,
  ``u -> (2/pi^2) nu3``.

Valuations are stored as coordinates over the normal monomial basis of the
presentation; ``Valuation.mu()`` gives the coordinates over the basis of
globalized measures (``mu_{k,q}``, ``phi3``, ``phib3`` on S^6 and
``mu_k``, ``nu3``, ``nu4`` on S^7).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import linalg
from .scalar import LAMBDA, ONE, PI, ZERO, Scalar, as_scalar, binomial_half, q, sphere_volume, unit_ball_volume
from .tensor import Combo, SymTensor, Tensor2

__all__ = [
    "RingPresentation",
    "Valuation",
    "ValuationSpace",
    "space",
    "ring_s6",
    "ring_s7",
    "tau",
    "phi_power",
    "t_lambda_power",
    "t_lambda_series",
    "PRINTED_T_POWERS_S6",
    "PRINTED_TU_S6",
    "PRINTED_U2_S6",
    "eval_on_sphere",
    "pd",
    "pd_matrix",
    "pd_via_forms",
    "kinematic_chi",
    "kinematic",
    "so_block_inverse",
    "restrict_valuation",
    "flat_t_action",
    "t_action_on_measures",
    "g2_module_action",
    "dump_json",
]


# -- polynomials over named generators ---------------------------------------------
# A polynomial is a dict {exponent tuple: Scalar}.

def _padd(p, r, c=ONE):
    out = dict(p)
    for k, v in r.items():
        w = out.get(k, ZERO) + v * c
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def _pmul(p, r):
    out = {}
    for k1, v1 in p.items():
        for k2, v2 in r.items():
            k = tuple(a + b for a, b in zip(k1, k2))
            w = out.get(k, ZERO) + v1 * v2
            if w:
                out[k] = w
            else:
                out.pop(k, None)
    return out


@dataclass(frozen=True)
class RingPresentation:
    """Graded quotient ring ``C[gens] / (ideal)`` with a chosen normal basis."""

    name: str
    gens: tuple
    degrees: tuple
    ideal: tuple  # tuple of polynomials, each a tuple of (exps, Scalar) pairs
    normal_basis: tuple

    def degree(self, exps):
        return sum(a * d for a, d in zip(exps, self.degrees))

    def gen(self, name):
        e = [0] * len(self.gens)
        e[self.gens.index(name)] = 1
        return {tuple(e): ONE}

    def monomials(self, d):
        out = []

        def rec(i, remaining, acc):
            if i == len(self.gens):
                if remaining == 0:
                    out.append(tuple(acc))
                return
            for a in range(remaining // self.degrees[i] + 1):
                rec(i + 1, remaining - a * self.degrees[i], acc + [a])

        rec(0, d, [])
        return out

    def ideal_polys(self):
        return [dict(g) for g in self.ideal]

    def label(self, exps):
        parts = []
        for name, a in zip(self.gens, exps):
            if a == 1:
                parts.append(name)
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "*".join(parts) or "1"

    def parse_label(self, label):
        e = [0] * len(self.gens)
        if label != "1":
            for part in label.split("*"):
                name, _, a = part.partition("^")
                e[self.gens.index(name)] += int(a) if a else 1
        return tuple(e)

    @lru_cache(maxsize=None)
    def _ideal_columns(self, d):
        cols = []
        for g in self.ideal_polys():
            dg = self.degree(next(iter(g)))
            if dg > d:
                continue
            for m in self.monomials(d - dg):
                cols.append(_pmul({m: ONE}, g))
        return tuple(cols)

    def ideal_rank(self, d):
        return linalg.rank([dict(c) for c in self._ideal_columns(d)]) if self._ideal_columns(d) else 0

    @lru_cache(maxsize=None)
    def reduce_monomial(self, exps):
        """Normal form of one monomial, as {normal basis exps: Scalar}."""
        d = self.degree(exps)
        basis_d = [b for b in self.normal_basis if self.degree(b) == d]
        cols = list(self._ideal_columns(d)) + [{b: ONE} for b in basis_d]
        x = linalg.solve(cols, {exps: ONE})
        if x is None:
            raise ArithmeticError(f"monomial {self.label(exps)} not reducible: normal basis incomplete")
        n = len(cols) - len(basis_d)
        return {b: c for b, c in zip(basis_d, x[n:]) if c}

    def normal_form(self, poly):
        out = {}
        for exps, c in poly.items():
            for b, v in self.reduce_monomial(exps).items():
                out = _padd(out, {b: v}, c)
        return out

    def check_dimensions(self, max_degree):
        """Per degree: monomials - rank(ideal part) == number of normal basis elements."""
        report = {}
        for d in range(max_degree + 1):
            n_mono = len(self.monomials(d))
            expected = sum(1 for b in self.normal_basis if self.degree(b) == d)
            report[d] = (n_mono - self.ideal_rank(d), expected)
        return report


def _poly(*pairs):
    return tuple((tuple(e), as_scalar(c)) for e, c in pairs)


@lru_cache(maxsize=None)
def ring_s6():
    # generators t, u, phi3, phib3 of degrees 1, 2, 3, 3
    f4 = _poly(((4, 0, 0, 0), 1), ((2, 1, 0, 0), -6), ((0, 2, 0, 0), 1))
    f5 = _poly(((5, 0, 0, 0), 1), ((3, 1, 0, 0), -10), ((1, 2, 0, 0), 5))
    ideal = (
        f4, f5,
        _poly(((1, 0, 1, 0), 1)), _poly(((1, 0, 0, 1), 1)),
        _poly(((0, 1, 1, 0), 1)), _poly(((0, 1, 0, 1), 1)),
        _poly(((0, 0, 2, 0), 1)), _poly(((0, 0, 0, 2), 1)),
        _poly(((0, 0, 1, 1), 1), ((6, 0, 0, 0), PI ** 4 / 8)),
    )
    basis = tuple(tuple(e) for e in (
        (0, 0, 0, 0), (1, 0, 0, 0), (2, 0, 0, 0), (0, 1, 0, 0), (3, 0, 0, 0), (1, 1, 0, 0),
        (0, 0, 1, 0), (0, 0, 0, 1), (4, 0, 0, 0), (2, 1, 0, 0), (5, 0, 0, 0), (6, 0, 0, 0),
    ))
    return RingPresentation("V6", ("t", "u", "phi3", "phib3"), (1, 2, 3, 3), ideal, basis)


@lru_cache(maxsize=None)
def ring_s7():
    ideal = (_poly(((2, 1), 1)), _poly(((0, 2), 1), ((6, 0), 1)))
    basis = tuple(tuple(e) for e in (
        (0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (4, 0), (1, 1), (5, 0), (6, 0), (7, 0),
    ))
    return RingPresentation("V7", ("t", "u"), (1, 3), ideal, basis)


# -- the measure basis and the t_lambda series ----------------------------------------

MU_S6 = ("mu00", "mu10", "mu20", "mu21", "mu30", "mu31", "phi3", "phib3",
         "mu41", "mu42", "mu52", "mu63")
MU_S7 = ("mu0", "mu1", "mu2", "mu3", "nu3", "mu4", "nu4", "mu5", "mu6", "mu7")

_DIM = {"S6": 6, "S7": 7}


def _mu_k(space_name, k):
    """Globalization of Delta_k (all q summed) as a Combo."""
    if space_name == "S7":
        return Combo.of(f"mu{k}")
    return Combo({f"mu{k}{qq}": 1 for qq in range(max(0, k - 3), k // 2 + 1)})


def tau(space_name, k):
    """``tau_k = (k! omega_k / pi^k) [Delta_k]``; zero beyond the dimension."""
    if k > _DIM[space_name]:
        return Combo()
    return _mu_k(space_name, k).scale(Scalar.const(factorial(k)) * unit_ball_volume(k) * PI ** (-k))


def phi_power(space_name, k):
    """``phi^k = sum_j (lambda/4)^j tau_{k+2j}``, truncated at the dimension."""
    n = _DIM[space_name]
    out = Combo()
    for j in range((n - k) // 2 + 1):
        out = out + tau(space_name, k + 2 * j).scale((LAMBDA / 4) ** j)
    return out


def t_lambda_series(k, n):
    """Coefficients c_m of ``t_l^k = sum_m c_m lambda^m phi^(k+2m)`` with ``k + 2m <= n``."""
    out = {}
    for m in range((n - k) // 2 + 1):
        # coefficient of x^m in (1 - x)^(-k/2), x = lambda phi^2 / 4
        c = binomial_half(-k, 2, m) * (-1) ** m * Fraction(1, 4 ** m)
        out[m] = Scalar.const(c) * LAMBDA ** m
    return out


def t_lambda_power(space_name, k):
    """``t_lambda^k`` in the measure basis, from the truncated series in phi."""
    n = _DIM[space_name]
    if k > n:
        return Combo()
    out = Combo()
    for m, c in t_lambda_series(k, n).items():
        out = out + phi_power(space_name, k + 2 * m).scale(c)
    return out


def _c(d):
    return Combo({k: as_scalar(v) for k, v in d.items()})


_L = LAMBDA

# printed power table of t_lambda on S^6 (k = 0 is the Euler characteristic)
PRINTED_T_POWERS_S6 = {
    0: _c({"mu00": 1, "mu20": _L / (2 * PI), "mu21": _L / (2 * PI),
           "mu41": 3 * _L ** 2 / (4 * PI ** 2), "mu42": 3 * _L ** 2 / (4 * PI ** 2),
           "mu63": 15 * _L ** 3 / (8 * PI ** 3)}),
    1: _c({"mu10": 2 / PI, "mu30": 3 * _L / PI ** 2, "mu31": 3 * _L / PI ** 2,
           "mu52": 15 * _L ** 2 / (2 * PI ** 3)}),
    2: _c({"mu20": 2 / PI, "mu21": 2 / PI, "mu41": 6 * _L / PI ** 2, "mu42": 6 * _L / PI ** 2,
           "mu63": 45 * _L ** 2 / (2 * PI ** 3)}),
    3: _c({"mu30": 8 / PI ** 2, "mu31": 8 / PI ** 2, "mu52": 40 * _L / PI ** 3}),
    4: _c({"mu41": 12 / PI ** 2, "mu42": 12 / PI ** 2, "mu63": 90 * _L / PI ** 3}),
    5: _c({"mu52": 64 / PI ** 3}),
    6: _c({"mu63": 120 / PI ** 3}),
}

# printed t_lambda^k u_lambda, k = 0..4
PRINTED_TU_S6 = {
    0: _c({"mu21": 2 / PI}),
    1: _c({"mu31": 8 / (3 * PI ** 2), "mu52": 8 * _L / (5 * PI ** 3)}),
    2: _c({"mu41": 2 / PI ** 2, "mu42": 4 / PI ** 2, "mu63": 6 * _L / PI ** 3}),
    3: _c({"mu52": 64 / (5 * PI ** 3)}),
    4: _c({"mu63": 24 / PI ** 3}),
}

# printed t_lambda^k u_lambda^2, k = 0..2
PRINTED_U2_S6 = {
    0: _c({"mu42": 12 / PI ** 2, "mu63": 18 * _L / PI ** 3}),
    1: _c({"mu52": 64 / (5 * PI ** 3)}),
    2: _c({"mu63": 24 / PI ** 3}),
}


def _lambda_monomial_s6(j, b):
    """``t_l^j u_l^b`` in the measure basis (b <= 2); degree > 6 is zero."""
    if j + 2 * b > 6:
        return Combo()
    if b == 0:
        return t_lambda_power("S6", j)
    if b == 1:
        return PRINTED_TU_S6[j]
    if b == 2:
        return PRINTED_U2_S6[j]
    raise ValueError("u_lambda^3 and higher are not tabulated")


def _t_image_s6():
    """Image of the abstract t as a polynomial in t_l: ``t_l - (3 lambda / 8) t_l^3``."""
    return {1: ONE, 3: -3 * LAMBDA / 8}


def _abstract_to_mu_s6(poly):
    """Map an abstract polynomial in (t, u, phi3, phib3) to the measure basis."""
    timg = _t_image_s6()
    out = Combo()
    for (a, b, p, pb), c in poly.items():
        if p or pb:
            if a or b or p + pb > 1:
                raise ValueError("only the bare phi3 / phib3 monomials are mapped directly")
            out = out + Combo.of("phi3" if p else "phib3", c)
            continue
        # expand (t_l - 3 lambda/8 t_l^3)^a as a polynomial in t_l
        tp = {0: ONE}
        for _ in range(a):
            nxt = {}
            for e1, v1 in tp.items():
                for e2, v2 in timg.items():
                    if e1 + e2 + 2 * b <= 6:
                        nxt[e1 + e2] = nxt.get(e1 + e2, ZERO) + v1 * v2
            tp = nxt
        for j, v in tp.items():
            if v:
                out = out + _lambda_monomial_s6(j, b).scale(c * v)
    return out


def _abstract_to_mu_s7(poly):
    out = Combo()
    for (a, b), c in poly.items():
        if b == 0:
            out = out + t_lambda_power("S7", a).scale(c)
        elif b == 1 and a == 0:
            out = out + Combo.of("nu3", 2 / PI ** 2).scale(c)
        elif b == 1 and a == 1:
            out = out + _t_lambda_times_nu("nu3").scale(2 / PI ** 2 * c)
        else:
            raise ValueError("monomial outside the normal basis")
    return out


def _t_lambda_times_nu(label):
    """``t_l * nu`` from ``phi nu3 = -(3/8) nu4``, ``phi nu4 = 0``."""
    phi_nu = {"nu3": Combo.of("nu4", q(-3, 8)), "nu4": Combo()}
    out = Combo()
    for m, c in t_lambda_series(1, 7).items():
        x = Combo.of(label)
        for _ in range(1 + 2 * m):
            x = x.apply(lambda lab: phi_nu[lab])
        out = out + x.scale(c)
    return out


# -- valuation spaces ---------------------------------------------------------------

@dataclass(frozen=True)
class ValuationSpace:
    name: str
    ring: RingPresentation
    mu_labels: tuple
    top: str
    volume: Scalar

    @property
    def dim(self):
        return _DIM[self.name]

    def to_mu_map(self):
        return _to_mu(self.name)

    def from_mu_map(self):
        return _from_mu(self.name)


@lru_cache(maxsize=None)
def space(name):
    if name == "S6":
        return ValuationSpace("S6", ring_s6(), MU_S6, "mu63", sphere_volume(6) * LAMBDA ** -3)
    if name == "S7":
        return ValuationSpace("S7", ring_s7(), MU_S7, "mu7", sphere_volume(7) * Scalar.monomial(1, s=-7))
    raise ValueError(f"unknown space {name!r}")


@lru_cache(maxsize=None)
def _to_mu(name):
    sp = space(name)
    f = _abstract_to_mu_s6 if name == "S6" else _abstract_to_mu_s7
    return {b: f({b: ONE}) for b in sp.ring.normal_basis}


@lru_cache(maxsize=None)
def _from_mu(name):
    sp = space(name)
    basis = sp.ring.normal_basis
    images = _to_mu(name)
    mat = [[images[b][lab] for b in basis] for lab in sp.mu_labels]
    inv = linalg.inverse(mat)
    # inv[i][j]: coordinate of basis[i] in mu_labels[j]
    return {lab: {basis[i]: inv[i][j] for i in range(len(basis)) if inv[i][j]}
            for j, lab in enumerate(sp.mu_labels)}


class Valuation:
    """Element of the valuation algebra, stored over the normal monomial basis."""

    __slots__ = ("space", "coords")

    def __init__(self, space_name, coords=None):
        self.space = space_name
        self.coords = {k: as_scalar(v) for k, v in (coords or {}).items() if v}

    # constructors
    @classmethod
    def one(cls, space_name):
        return cls(space_name, {space(space_name).ring.normal_basis[0]: ONE})

    @classmethod
    def gen(cls, space_name, name):
        return cls(space_name, space(space_name).ring.gen(name))

    @classmethod
    def from_mu(cls, space_name, combo):
        if isinstance(combo, str):
            combo = Combo.of(combo)
        table = _from_mu(space_name)
        out = {}
        for lab, c in combo.terms.items():
            out = _padd(out, table[lab], c)
        return cls(space_name, out)

    @classmethod
    def t_lambda(cls, space_name):
        """``t_lambda = (2/pi) mu_1`` restricted to the sphere."""
        return cls.from_mu(space_name, t_lambda_power(space_name, 1))

    @classmethod
    def u_lambda(cls, space_name):
        if space_name == "S6":
            return cls.from_mu("S6", Combo.of("mu21", 2 / PI))
        return cls.from_mu("S7", Combo.of("nu3", 2 / PI ** 2))

    @classmethod
    def chi(cls, space_name):
        return cls.one(space_name)

    # arithmetic
    def _check(self, other):
        if self.space != other.space:
            raise ValueError("valuations live on different spaces")

    def __add__(self, other):
        self._check(other)
        return Valuation(self.space, _padd(self.coords, other.coords))

    def __neg__(self):
        return Valuation(self.space, {k: -v for k, v in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_scalar(c)
        return Valuation(self.space, {k: v * c for k, v in self.coords.items()})

    def __mul__(self, other):
        if not isinstance(other, Valuation):
            return self.scale(other)
        self._check(other)
        ring = space(self.space).ring
        return Valuation(self.space, ring.normal_form(_pmul(self.coords, other.coords)))

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, n):
        out = Valuation.one(self.space)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Valuation):
            return NotImplemented
        return self.space == other.space and self.coords == other.coords

    def __hash__(self):
        return hash((self.space, frozenset(self.coords.items())))

    def __bool__(self):
        return bool(self.coords)

    def mu(self):
        """Coordinates over the measure basis."""
        table = _to_mu(self.space)
        out = Combo()
        for b, c in self.coords.items():
            out = out + table[b].scale(c)
        return out

    def labelled(self):
        ring = space(self.space).ring
        return Combo({ring.label(b): c for b, c in self.coords.items()})

    def substitute_s(self, value):
        return Valuation(self.space, {k: v.substitute(value) for k, v in self.coords.items()})

    def __repr__(self):
        return f"Valuation({self.space}: {self.labelled()!r})"


# -- evaluation, Poincare duality and the principal kinematic formula -----------

def eval_on_sphere(v):
    """Value on the whole sphere: volume times the top measure coefficient."""
    sp = space(v.space)
    return sp.volume * v.mu()[sp.top]


def pd(a, b):
    """Alesker-Poincare pairing: top coefficient of the product."""
    return (a * b).mu()[space(a.space).top]


@lru_cache(maxsize=None)
def pd_matrix(space_name, labels=None):
    """Pairing matrix over the measure basis (or a subset of its labels)."""
    sp = space(space_name)
    labels = labels or sp.mu_labels
    vals = [Valuation.from_mu(space_name, lab) for lab in labels]
    return tuple(tuple(pd(x, y) for y in vals) for x in vals), tuple(labels)


def _inverse_tensor(space_name, labels):
    mat, labels = pd_matrix(space_name, labels)
    inv = linalg.inverse([list(r) for r in mat])
    entries = {}
    for i, a in enumerate(labels):
        for j, b in enumerate(labels):
            if inv[i][j]:
                entries[(a, b)] = inv[i][j]
    return SymTensor.from_matrix(entries)


def kinematic_chi(space_name):
    """``k(chi) = pd^{-1}`` as a symmetric tensor over the measure basis."""
    return _inverse_tensor(space_name, None)


def so_block_inverse(space_name="S7"):
    """Inverse of the pairing restricted to the intrinsic volumes (the SO(n+1) part)."""
    labels = tuple(lab for lab in space(space_name).mu_labels if lab.startswith("mu"))
    return _inverse_tensor(space_name, labels)


def kinematic(v):
    """``k(v) = (chi x v) k(chi)`` as an ordinary tensor over the measure basis."""
    k = kinematic_chi(v.space).to_tensor2()

    def times_v(label):
        return (Valuation.from_mu(v.space, label) * v).mu()

    return k.apply_right(times_v)


def pd_via_forms(a, b):
    """Pairing on S^6 from forms: ``pi^3 * top_ratio(omega_a ^ a^* D omega_b)``.

    Both valuations must be eta-free, i.e. have no ``mu63`` component.
    """
    from . import measures, rumin, s6_forms

    def form(v):
        combo = v.mu()
        if combo["mu63"]:
            raise ValueError("pd_via_forms needs representatives without volume part")
        labels = Combo({_measure_label(lab): c for lab, c in combo.terms.items()})
        return measures.form_of(labels, "SU3")

    wa, wb = form(a), form(b)
    if not wa or not wb:
        return ZERO
    Db = rumin.rumin_differential(wb).D
    top = wa * s6_forms.euler_verdier_pullback(Db)
    return PI ** 3 * s6_forms.top_ratio(top)


def _measure_label(val_label):
    if val_label == "phi3":
        return "Phi3"
    if val_label == "phib3":
        return "Phib3"
    return "Delta" + val_label[2:]


# -- restriction S^7 -> S^6 on valuations --------------------------------------------

# flat restriction of nu3' and nu4' to C^3; lambda-free by construction
_R_NU = {
    "nu3": _c({"mu30": q(3, 2), "mu31": -1, "phi3": q(-5, 4), "phib3": q(-5, 4)}),
    "nu4": _c({"mu41": -1, "mu42": 4}),
}


def restrict_valuation(combo):
    """Restriction r: V^7 -> V^6 on measure-basis coordinates."""
    if isinstance(combo, Valuation):
        combo = combo.mu()

    def r(label):
        if label in _R_NU:
            return _R_NU[label]
        k = int(label[2:])
        return Combo() if k == 7 else _mu_k("S6", k)

    return combo.apply(r)


# -- module structure on curvature measures ---------------------------------------

def flat_t_action(label, group="G2"):
    """Flat ``t . m`` on curvature measures.

    G2: the full table.  SU3: only the SO(6)-invariant sums ``Delta_k`` are
    supported (labels ``"Delta<k>"``), using ``t Delta_j = (2 w_{j-1}/w_j) Delta_{j+1}``.
    """
    n = 7 if group == "G2" else 6
    if label.startswith("Delta") and len(label) == 6:
        j = int(label[5:])
        if j >= n:
            return Combo()
        w_prev = unit_ball_volume(j - 1) if j >= 1 else PI.inv()
        return Combo.of(f"Delta{j + 1}", 2 * w_prev / unit_ball_volume(j))
    if group != "G2":
        raise ValueError(f"flat t-action not tabulated for {label}")
    table = {
        "N2": _c({"Phi": 4 / (5 * PI), "Phib": 4 / (5 * PI), "N3": -2 / (5 * PI)}),
        "N3": _c({"N4": q(-3, 8)}),
        "Phi": _c({"N4": q(-3, 32)}),
        "Phib": _c({"N4": q(-3, 32)}),
    }
    return table.get(label, Combo())


def _nu3p_action(label):
    table = {
        "Delta0": _c({"Phi": 2, "Phib": 2}),
        "Delta1": _c({"N4": -3 * PI / 16}),
        "N3": _c({"Delta6": -30 * PI}),
        "Phi": _c({"Delta6": -15 * PI / 2}),
        "Phib": _c({"Delta6": -15 * PI / 2}),
        "N4": _c({"Delta7": 512}),
    }
    return table.get(label, Combo())


def g2_module_action(gen, item):
    """Flat action of ``t`` or ``nu3'`` (``"nu3p"``) on G2 measures."""
    f = {"t": lambda lab: flat_t_action(lab, "G2"), "nu3p": _nu3p_action}[gen]
    if isinstance(item, str):
        return f(item)
    return item.apply(f)


def t_action_on_measures(item, group="G2"):
    """``t_lambda . m = (t + lambda/8 t^3 + 3 lambda^2/128 t^5 + ...) . m``."""
    n = 7 if group == "G2" else 6
    if isinstance(item, str):
        item = Combo.of(item)
    out = Combo()
    for m, c in t_lambda_series(1, n).items():
        x = item
        for _ in range(1 + 2 * m):
            x = x.apply(lambda lab: flat_t_action(lab, group))
        out = out + x.scale(c)
    return out


# -- JSON ----------------------------------------------------------------------------

def dump_json(space_name):
    sp = space(space_name)
    ring = sp.ring
    return json.dumps({
        "space": space_name,
        "generators": list(ring.gens),
        "degrees": list(ring.degrees),
        "normal_basis": [ring.label(b) for b in ring.normal_basis],
        "to_mu": {ring.label(b): c.to_json() for b, c in _to_mu(space_name).items()},
    }, indent=2, sort_keys=True)
