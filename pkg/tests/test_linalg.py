import pytest
from hypothesis import given, settings, strategies as st

from g2spheres import linalg
from g2spheres.scalar import ONE, PI, ZERO, Scalar, q
from strategies import small_fracs


@settings(max_examples=20)
@given(st.lists(small_fracs, min_size=9, max_size=9))
def test_inverse_round_trip(vals):
    m = [[Scalar.const(vals[3 * i + j]) for j in range(3)] for i in range(3)]
    # a symbolic diagonal keeps the matrix invertible
    for i in range(3):
        m[i][i] = m[i][i] + PI * (i + 1)
    inv = linalg.inverse(m)
    assert linalg.matmul(m, inv) == linalg.identity(3)
    assert linalg.matmul(inv, m) == linalg.identity(3)


def test_singular_inverse_raises():
    with pytest.raises(Exception):
        linalg.inverse([[ONE, q(2)], [q(2), q(4)]])


def test_solve_and_nullspace():
    cols = [{0: ONE}, {1: ONE}, {0: ONE, 1: ONE}]
    x = linalg.solve(cols, {0: q(2), 1: q(3)})
    assert x is not None
    total = {}
    for j, c in enumerate(cols):
        for k, v in c.items():
            total[k] = total.get(k, ZERO) + x[j] * v
    assert total[0] == q(2) and total[1] == q(3)
    assert len(linalg.nullspace(cols)) == 1


def test_rank():
    rows = [{0: ONE, 1: PI}, {0: q(2), 1: PI * 2}, {1: ONE}]
    assert linalg.rank(rows) == 2
