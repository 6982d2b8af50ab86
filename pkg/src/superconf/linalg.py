"""Exact linear algebra over Fraction (or any exact field type).

Matrices are lists of rows.  Sparse routines take rows as dicts
{column: value}; they are used for kernels of mode operators where the
matrices are large but very sparse.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a, b):
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]


def transpose(a):
    return [list(r) for r in zip(*a)]


def inverse(a: Sequence[Sequence]) -> list[list]:
    """Gauss-Jordan inverse; raises ValueError when singular."""
    n = len(a)
    m = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def sparse_rref(rows: list[dict], zero=Fraction(0)) -> tuple[list[dict], list[int]]:
    """Reduced row echelon form of sparse rows; returns (rows, pivot columns)."""
    pivots: dict[int, dict] = {}
    order: list[int] = []
    for row in rows:
        r = {c: v for c, v in row.items() if v != 0}
        # eliminate existing pivots
        changed = True
        while r and changed:
            changed = False
            for c in sorted(r):
                if c in pivots:
                    f = r[c]
                    for cc, vv in pivots[c].items():
                        nv = r.get(cc, zero) - f * vv
                        if nv == 0:
                            r.pop(cc, None)
                        else:
                            r[cc] = nv
                    changed = True
                    break
        if not r:
            continue
        c0 = min(r)
        inv = 1 / r[c0]
        r = {c: v * inv for c, v in r.items()}
        # back-substitute into existing pivot rows
        for pc, prow in pivots.items():
            if c0 in prow:
                f = prow[c0]
                for cc, vv in r.items():
                    nv = prow.get(cc, zero) - f * vv
                    if nv == 0:
                        prow.pop(cc, None)
                    else:
                        prow[cc] = nv
        pivots[c0] = r
        order.append(c0)
    cols = sorted(pivots)
    return [pivots[c] for c in cols], cols


def sparse_nullspace(rows: list[dict], ncols: int, zero=Fraction(0), one=Fraction(1)) -> list[dict]:
    """Basis of {x : row . x = 0 for every row} as sparse vectors."""
    red, piv = sparse_rref(rows, zero)
    pivset = set(piv)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = {free: one}
        for c, row in zip(piv, red):
            v = row.get(free)
            if v is not None and v != 0:
                vec[c] = -v
        basis.append(vec)
    return basis


def rank(rows: list[list]) -> int:
    sparse = [{j: v for j, v in enumerate(r) if v != 0} for r in rows]
    return len(sparse_rref(sparse)[1])


def nullspace(rows: list[list], ncols: int) -> list[list]:
    sparse = [{j: v for j, v in enumerate(r) if v != 0} for r in rows]
    out = []
    for vec in sparse_nullspace(sparse, ncols):
        out.append([vec.get(j, Fraction(0)) for j in range(ncols)])
    return out
