"""The S^7 model: Spin(7)-invariant forms on the sphere bundle of S^7_lambda.

The structure constants come from the octonionic 3-form

    phi = e123 + e145 + e167 + e246 - e257 - e347 - e356

and its dual 4-form psi.  Forms live on the coframe ``o1..o7`` (solder) and
``f21..f71`` (connection), evaluated at one point of the G2-frame bundle.
No exterior derivative is needed on this side: everything on S^7 is reached
by wedge products, the involution and restriction to S^6.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from .exterior import Coframe
from .named import FormModel, Generator, NamedPoly
from .scalar import I, ONE, Scalar, q

__all__ = [
    "PHI_TERMS",
    "PSI_TERMS",
    "COFRAME7",
    "epsilon",
    "model",
    "expand7",
    "euler_verdier_coframe7",
    "euler_verdier_pullback7",
]

PHI_TERMS = {
    (1, 2, 3): 1, (1, 4, 5): 1, (1, 6, 7): 1, (2, 4, 6): 1,
    (2, 5, 7): -1, (3, 4, 7): -1, (3, 5, 6): -1,
}
PSI_TERMS = {
    (4, 5, 6, 7): 1, (2, 3, 6, 7): 1, (2, 3, 4, 5): 1, (1, 3, 5, 7): 1,
    (1, 3, 4, 6): -1, (1, 2, 5, 6): -1, (1, 2, 4, 7): -1,
}


def _perm_sign(seq):
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def epsilon(*idx):
    """Totally antisymmetric symbol with 3 or 4 indices in 1..7."""
    if any(not 1 <= i <= 7 for i in idx):
        raise ValueError(f"index out of range: {idx}")
    if len(idx) not in (3, 4):
        raise ValueError("epsilon takes three or four indices")
    if len(set(idx)) < len(idx):
        return 0
    key = tuple(sorted(idx))
    table = PHI_TERMS if len(idx) == 3 else PSI_TERMS
    return table.get(key, 0) * _perm_sign(idx)


COFRAME7 = Coframe("SS7", tuple(
    [(f"o{i}", "horizontal", 0) for i in range(1, 8)]
    + [(f"f{i}1", "vertical", 0) for i in range(2, 8)]
))


def _o(i):
    return COFRAME7.gen(f"o{i}")


def _f(i):
    return COFRAME7.gen(f"f{i}1")


def _coframe_definitions():
    cf = COFRAME7
    rng = range(2, 8)
    half = q(1, 2)
    theta0, theta1, theta2, thetas = cf.zero(), cf.zero(), cf.zero(), cf.zero()
    for j in rng:
        thetas = thetas + (_o(j) ^ _f(j))
        for k in rng:
            e = epsilon(1, j, k)
            if not e:
                continue
            theta0 = theta0 + (_f(j) ^ _f(k)).scale(half * e)
            theta1 = theta1 + (_o(j) ^ _f(k)).scale(Scalar.const(e))
            theta2 = theta2 + (_o(j) ^ _o(k)).scale(half * e)
    defs = {"alpha": _o(1), "theta0": theta0, "theta1": theta1, "theta2": theta2, "thetas": thetas}

    # chi_k: k solder factors followed by 3 - k connection factors
    norms = {0: q(1, 6), 1: q(1, 2), 2: q(1, 2), 3: q(1, 6)}
    for k in range(4):
        re_, im_ = cf.zero(), cf.zero()
        for i, j, l in permutations(rng, 3):
            e3, e4 = epsilon(i, j, l), epsilon(1, i, j, l)
            if not (e3 or e4):
                continue
            factors = [_o(x) if n < k else _f(x) for n, x in enumerate((i, j, l))]
            mono = factors[0] ^ factors[1] ^ factors[2]
            if e3:
                re_ = re_ + mono.scale(Scalar.const(e3))
            if e4:
                im_ = im_ + mono.scale(Scalar.const(e4))
        re_, im_ = re_.scale(norms[k]), im_.scale(norms[k])
        defs[f"chi{k}R"] = re_
        defs[f"chi{k}I"] = im_
        defs[f"chi{k}"] = re_ + im_.scale(I)
        defs[f"chib{k}"] = re_ - im_.scale(I)
    return defs


def _generators():
    gens = [
        Generator("alpha", 1, (1, 0), 0, r"\alpha"),
        Generator("theta0", 2, (0, 2), 0, r"\theta_0"),
        Generator("theta1", 2, (1, 1), 0, r"\theta_1"),
        Generator("theta2", 2, (2, 0), 0, r"\theta_2"),
        Generator("thetas", 2, (1, 1), 0, r"\theta_s"),
    ]
    for k in range(4):
        gens.append(Generator(f"chi{k}", 3, (k, 3 - k), 1, rf"\chi_{k}", conjugate=f"chib{k}"))
    for k in range(4):
        gens.append(Generator(f"chib{k}", 3, (k, 3 - k), -1, rf"\overline{{\chi_{k}}}", conjugate=f"chi{k}"))
    for k in range(4):
        gens.append(Generator(f"chi{k}R", 3, (k, 3 - k), None, rf"\chi_{{{k},R}}"))
        gens.append(Generator(f"chi{k}I", 3, (k, 3 - k), None, rf"\chi_{{{k},I}}"))
    return gens


@lru_cache(maxsize=None)
def model():
    """The S^7 form model (built once)."""
    m = FormModel("S7", COFRAME7, _generators(), _coframe_definitions())
    m.split = {f"chi{k}": (f"chi{k}R", f"chi{k}I") for k in range(4)}
    return m


def gen(name):
    return model().gen(name)


def expand7(p):
    return p.expand()


# -- Euler-Verdier -------------------------------------------------------------------

def euler_verdier_coframe7():
    """Lift of the fiberwise antipodal map on the G2-frame bundle."""
    out = {}
    for i in range(1, 8):
        out[f"o{i}"] = _o(i).scale(Scalar.const((-1) ** i))
    for i in range(2, 8):
        out[f"f{i}1"] = _f(i).scale(Scalar.const((-1) ** (i + 1)))
    return out


def _named_images_ev(m):
    images = {"alpha": -m["alpha"], "thetas": -m["thetas"]}
    for i in range(3):
        images[f"theta{i}"] = m[f"theta{i}"].scale((-1) ** (i + 1))
    for i in range(4):
        sg = (-1) ** (i + 1)
        images[f"chi{i}"] = m[f"chib{i}"].scale(sg)
        images[f"chib{i}"] = m[f"chi{i}"].scale(sg)
        images[f"chi{i}R"] = m[f"chi{i}R"].scale(sg)
        images[f"chi{i}I"] = m[f"chi{i}I"].scale(-sg)
    return images


def euler_verdier_pullback7(p):
    """Pullback of a named S^7 polynomial under the fiberwise antipodal map."""
    return p.substitute(_named_images_ev(p.model))


def theta_monomials(degree):
    """Monomials of the given form degree in theta0, theta1, theta2, thetas."""
    m = model()
    return [NamedPoly(m, {mono: ONE}) for mono in m.monomials(degree, allowed=("theta0", "theta1", "theta2", "thetas"))]
