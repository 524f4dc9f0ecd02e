"""Exact dense/sparse linear algebra over :class:`~g2spheres.scalar.Scalar`.

Rows are sparse dicts ``{column: Scalar}``.  Pivots prefer constants so that
systems whose matrix is rational and whose right-hand side carries ``s``
stay on the Laurent fast path.
"""

from __future__ import annotations

from .scalar import ONE, ZERO, Scalar


def _pivot_rank(x):
    # cheap "simplicity" score: constants first, then Laurent monomials
    if x.is_constant():
        return 0
    if x.is_laurent():
        return len(x.terms())
    return 1000


def row_reduce(rows, ncols=None):
    """Reduced row echelon form of sparse rows.

    Returns ``(rref_rows, pivots)`` where ``pivots[i]`` is the pivot column of
    ``rref_rows[i]``.  Rows are dicts; the input is not modified.  With
    ``ncols`` given, columns ``>= ncols`` (augmented parts) are used as pivots
    only once the coefficient block is exhausted.
    """
    work = [dict(r) for r in rows if r]
    done = []
    pivots = []
    while work:
        # choose the simplest pivot entry across remaining rows
        best = None
        for ri, row in enumerate(work):
            for c, v in row.items():
                key = (ncols is not None and c >= ncols, _pivot_rank(v), c)
                if best is None or key < best[0]:
                    best = (key, ri, c)
        _, ri, col = best
        prow = work.pop(ri)
        inv = prow[col].inv()
        prow = {c: v * inv for c, v in prow.items()}
        prow[col] = ONE
        new_work = []
        for row in work:
            f = row.get(col)
            if f is not None:
                row = _axpy(row, prow, -f)
            if row:
                new_work.append(row)
        work = new_work
        for k, row in enumerate(done):
            f = row.get(col)
            if f is not None:
                done[k] = _axpy(row, prow, -f)
        done.append(prow)
        pivots.append(col)
    return done, pivots


def _axpy(row, prow, f):
    out = dict(row)
    for c, v in prow.items():
        w = out.get(c)
        w = v * f if w is None else w + v * f
        if w:
            out[c] = w
        else:
            out.pop(c, None)
    return out


def rank(rows):
    return len(row_reduce(rows)[0])


def solve(columns, target):
    """Find ``x`` with ``sum_j x_j * columns[j] = target``.

    ``columns`` and ``target`` are sparse dicts over a common key set.
    Returns the list ``x`` (free variables set to zero) or ``None`` if the
    system is inconsistent.
    """
    keys = {}
    for col in columns:
        for k in col:
            keys.setdefault(k, len(keys))
    for k in target:
        if k not in keys:
            return None
    n = len(columns)
    # equations: one per key; unknowns 0..n-1, RHS at column n
    eqs = {}
    for j, col in enumerate(columns):
        for k, v in col.items():
            eqs.setdefault(k, {})[j] = v
    for k, v in target.items():
        eqs.setdefault(k, {})[n] = v
    rref, piv = row_reduce(list(eqs.values()), ncols=n)
    x = [ZERO] * n
    for row, p in zip(rref, piv):
        if p == n:
            return None
        x[p] = row.get(n, ZERO)
    return x


def nullspace(columns):
    """Basis of ``{x : sum_j x_j * columns[j] = 0}`` as lists of Scalars."""
    n = len(columns)
    eqs = {}
    for j, col in enumerate(columns):
        for k, v in col.items():
            eqs.setdefault(k, {})[j] = v
    rref, piv = row_reduce(list(eqs.values()))
    free = [j for j in range(n) if j not in set(piv)]
    basis = []
    for f in free:
        x = [ZERO] * n
        x[f] = ONE
        for row, p in zip(rref, piv):
            v = row.get(f)
            if v is not None:
                x[p] = -v
        basis.append(x)
    return basis


def inverse(matrix):
    """Inverse of a square matrix given as a list of lists of Scalars."""
    n = len(matrix)
    rows = []
    for i, r in enumerate(matrix):
        row = {j: v for j, v in enumerate(r) if v}
        row[n + i] = ONE
        rows.append(row)
    rref, piv = row_reduce(rows, ncols=n)
    if len(piv) != n or any(p >= n for p in piv):
        raise ZeroDivisionError("singular matrix")
    out = [None] * n
    for row, p in zip(rref, piv):
        out[p] = [row.get(n + j, ZERO) for j in range(n)]
    return out


def matmul(a, b):
    n, m, k = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        r = []
        for j in range(k):
            acc = ZERO
            for t in range(m):
                if a[i][t] and b[t][j]:
                    acc = acc + a[i][t] * b[t][j]
            r.append(acc)
        out.append(r)
    return out


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def as_matrix(rows):
    return [[x if isinstance(x, Scalar) else Scalar.const(x) for x in r] for r in rows]
