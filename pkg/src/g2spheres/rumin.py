"""Rumin differential of invariant 5-forms on the sphere bundle of S^6.

For an invariant 5-form ``w`` we look for a 4-form ``xi`` with
``dw + dalpha ^ xi = 0 (mod alpha)``; then ``Dw = d(w + alpha ^ xi)`` is a
multiple of the contact form ``alpha``.  The solution ``xi`` is found by exact
elimination over the alpha-free invariant 4-forms, and ``Dw`` does not depend
on which solution is taken.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import linalg, s6_forms
from .named import NamedPoly
from .scalar import ZERO

__all__ = [
    "RuminResult",
    "rumin_differential",
    "xi_candidates",
    "weight_bidegree_audit",
    "glob_zero_certificate",
    "is_alpha_multiple",
]

# alpha-free generators in complex form; the real/imaginary split is redundant
_XI_GENERATORS = (
    "beta", "gamma", "theta0", "theta1", "theta2", "thetas",
    "chi0", "chi1", "chi2", "chib0", "chib1", "chib2",
)

CONTACT = "w1"


@dataclass(frozen=True)
class RuminResult:
    xi: NamedPoly
    D: NamedPoly
    nullity: int  # dimension of the space of admissible xi corrections


@lru_cache(maxsize=None)
def xi_candidates():
    """Alpha-free invariant 4-form monomials."""
    return tuple(s6_forms.model().monomials(4, allowed=_XI_GENERATORS))


@lru_cache(maxsize=None)
def _columns():
    m = s6_forms.model()
    dalpha = m["alpha"].d()
    cols = []
    for mono in xi_candidates():
        f = (dalpha * NamedPoly(m, {mono: m.const(1).terms[()]})).expand()
        cols.append(f.without(CONTACT).terms)
    return tuple(cols)


@lru_cache(maxsize=None)
def _kernel():
    return tuple(tuple(v) for v in linalg.nullspace(list(_columns())))


def is_alpha_multiple(form):
    """True when every coframe term of ``form`` contains the contact direction."""
    return not form.without(CONTACT)


def _combine(coeffs):
    m = s6_forms.model()
    terms = {}
    for mono, c in zip(xi_candidates(), coeffs):
        if c:
            terms[mono] = c
    return NamedPoly(m, terms)


def rumin_differential(omega, correction=None):
    """Return ``(xi, D omega)``; ``correction`` adds a kernel vector to ``xi``."""
    m = s6_forms.model()
    if not omega:
        return RuminResult(m.zero(), m.zero(), len(_kernel()))
    d_omega = omega.d()
    target = (-d_omega).expand().without(CONTACT).terms
    x = linalg.solve(list(_columns()), target)
    if x is None:
        raise ArithmeticError("no xi solves the Rumin system; the form is not invariant")
    if correction is not None:
        x = [a + b for a, b in zip(x, correction)]
    xi = _combine(x)
    D = (omega + m["alpha"] * xi).d()
    if not is_alpha_multiple(D.expand()):
        raise ArithmeticError("Rumin differential is not a multiple of alpha")
    return RuminResult(xi, D, len(_kernel()))


def rumin_kernel_vectors():
    """Basis of xi-ambiguities: combinations with ``dalpha ^ xi = 0 (mod alpha)``."""
    return [list(v) for v in _kernel()]


def weight_bidegree_audit(omega):
    """Decompose ``D omega = rho1 + s rho2 + s^2 rho3`` and report bidegrees and weights.

    ``omega`` must be homogeneous.  Returns a dict keyed by the power of ``s``
    with the sets of ``(bidegree, weight)`` pairs that occur.
    """
    D = rumin_differential(omega).D.complex_form()
    m = D.model
    report = {}
    for mono, c in D.terms.items():
        for b, part in c.s_coefficients().items():
            if not part:
                continue
            # check the term survives on the coframe
            report.setdefault(b, set()).add((m.monomial_bidegree(mono), m.monomial_weight(mono)))
    # drop monomials that vanish identically on expansion
    clean = {}
    for b in report:
        piece = NamedPoly(m, {mono: c.s_coefficients().get(b, ZERO) for mono, c in D.terms.items()})
        keep = set()
        for mono, c in piece.terms.items():
            if NamedPoly(m, {mono: c}).expand():
                keep.add((m.monomial_bidegree(mono), m.monomial_weight(mono)))
        if keep:
            clean[b] = keep
    return clean


def glob_zero_certificate(omega):
    """Bernig-Broecker criterion with vanishing volume part.

    ``[omega, 0]`` globalizes to zero iff ``D omega = 0`` and the fiber
    integral of ``omega`` vanishes.
    """
    if not omega:
        return True
    if s6_forms.fiber_integral(omega):
        return False
    return not rumin_differential(omega).D.expand()
