"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from g2spheres.scalar import GaussianRational, Scalar

small_fracs = st.fractions(min_value=-6, max_value=6, max_denominator=6)


@st.composite
def gaussians(draw, nonzero=False):
    re = draw(small_fracs)
    im = draw(st.one_of(st.just(Fraction(0)), small_fracs))
    g = GaussianRational(re, im)
    if nonzero and not (re or im):
        g = GaussianRational(1)
    return g


@st.composite
def laurent_scalars(draw, max_terms=3, nonzero=False):
    out = Scalar.const(0)
    for _ in range(draw(st.integers(0, max_terms))):
        c = draw(gaussians())
        a = draw(st.integers(-2, 2))
        b = draw(st.integers(-2, 3))
        out = out + Scalar.monomial(c, pi=a, s=b)
    if nonzero and not out:
        out = Scalar.monomial(draw(gaussians(nonzero=True)), pi=draw(st.integers(-1, 1)))
    return out


@st.composite
def scalars(draw, nonzero=False):
    """Laurent scalars, occasionally divided by a small binomial."""
    x = draw(laurent_scalars(nonzero=nonzero))
    if draw(st.booleans()):
        den = Scalar.monomial(1, pi=draw(st.integers(0, 1)), s=draw(st.integers(1, 2)))
        den = den + Scalar.const(draw(st.integers(1, 3)))
        x = x / den
    return x
