import pytest
from hypothesis import given, strategies as st

from g2spheres.exterior import Coframe, CoframeMismatch, solve_linear, span_rank
from g2spheres.scalar import ONE, PI, S, q

CF = Coframe("toy", (("a", "horizontal", 1), ("b", "horizontal", -1), ("c", "vertical", 0), ("e", "vertical", 2)))


@st.composite
def forms(draw, degree=None):
    out = CF.zero()
    for _ in range(draw(st.integers(0, 3))):
        names = draw(st.lists(st.sampled_from(CF.names()), unique=True,
                              min_size=degree or 0, max_size=degree or 4))
        term = CF.one(q(draw(st.integers(-3, 3))) + PI * draw(st.integers(0, 1)))
        for n in names:
            term = term.wedge(CF.gen(n))
        out = out + term
    return out


@given(forms(), forms(), forms())
def test_wedge_associative_and_distributive(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(forms(degree=1), forms(degree=2), forms(degree=3))
def test_graded_commutativity(x, y, z):
    assert x * y == y * x
    assert x * z == -(z * x)
    assert x * x == CF.zero()


def test_bidegree_and_weight():
    f = CF.gen("a") * CF.gen("c") * CF.gen("e")
    (mask,) = f.terms
    assert f.bidegree_of(mask) == (1, 2)
    assert f.weight_of(mask) == 3
    assert f.grade_part(1, 2) == f
    assert not f.grade_part(2, 1)


def test_mismatched_coframes_rejected():
    other = Coframe("other", (("a", "horizontal", 0),))
    with pytest.raises(CoframeMismatch):
        CF.gen("a") + other.gen("a")


def test_duplicate_generator_names_rejected():
    with pytest.raises(ValueError):
        Coframe("bad", (("a", "horizontal", 0), ("a", "vertical", 0)))


def test_solve_linear_and_rank():
    a, b = CF.gen("a"), CF.gen("b")
    target = a.scale(q(2)) + b.scale(S)
    (x,) = solve_linear([target], [a, b, a + b])
    assert a.scale(x[0]) + b.scale(x[1]) + (a + b).scale(x[2]) == target
    assert solve_linear([CF.gen("c")], [a, b]) is None
    assert span_rank([a, b, a + b, CF.zero()]) == 2


def test_top_coefficient():
    top = CF.gen("a") * CF.gen("b") * CF.gen("c") * CF.gen("e")
    assert (CF.gen("b") * CF.gen("a") * CF.gen("c") * CF.gen("e")).top_coefficient(top) == -ONE
