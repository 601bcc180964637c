"""Exact linear algebra over Q and Q(i)."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence

from .arith import GaussRat


def _int_row(row: Sequence) -> list:
    den = 1
    for x in row:
        if type(x) is Fraction and x.denominator != 1:
            den = lcm(den, x.denominator)
    if den == 1:
        return [int(x) for x in row]
    return [int(x * den) for x in row]


def _primitive(row: list) -> list:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def reduced_pivots(rows: Iterable[Sequence], ncols: int) -> dict:
    """Fraction-free Gauss-Jordan elimination.

    Returns ``{pivot_col: int_row}`` where every row is primitive and zero in
    every other pivot column, so the rows are the reduced row-echelon form up
    to positive scaling.
    """
    pivots: dict = {}
    seen = set()
    for raw in rows:
        if len(pivots) == ncols:
            break
        r = _primitive(_int_row(raw))
        if not any(r):
            continue
        t = tuple(r)
        if t in seen:
            continue
        seen.add(t)
        for col, prow in pivots.items():
            a = r[col]
            if a:
                p = prow[col]
                r = _primitive([p * x - a * y for x, y in zip(r, prow)])
        lead = next((c for c, x in enumerate(r) if x), None)
        if lead is None:
            continue
        if r[lead] < 0:
            r = [-x for x in r]
        for col in list(pivots):
            prow = pivots[col]
            a = prow[lead]
            if a:
                nr = _primitive([r[lead] * y - a * x for x, y in zip(r, prow)])
                if nr[col] < 0:
                    nr = [-x for x in nr]
                pivots[col] = nr
        pivots[lead] = r
    return pivots


def nullspace(rows: Iterable[Sequence], ncols: int) -> list:
    """Kernel basis as primitive integer vectors with positive leading entry.

    One vector per free column of the RREF, in increasing column order.
    """
    pivots = reduced_pivots(rows, ncols)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for c, prow in pivots.items():
            if prow[f]:
                vec[c] = Fraction(-prow[f], prow[c])
        basis.append(primitive_int_vector(vec))
    return basis


def primitive_int_vector(vec: Sequence) -> list:
    den = 1
    for x in vec:
        den = lcm(den, Fraction(x).denominator)
    ints = _primitive([int(Fraction(x) * den) for x in vec])
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return ints


def rank(vectors: Iterable[Sequence], ncols: int | None = None) -> int:
    vectors = list(vectors)
    if not vectors:
        return 0
    if ncols is None:
        ncols = len(vectors[0])
    return len(reduced_pivots(vectors, ncols))


def express(basis: Sequence[Sequence], target: Sequence):
    """Coordinates of ``target`` in the span of ``basis`` (over Q), or None."""
    if not basis:
        return [] if not any(target) else None
    k = len(basis)
    m = len(target)
    # columns: basis vectors, last column -target; find kernel vector with last entry 1
    rows = [[Fraction(basis[i][r]) for i in range(k)] + [-Fraction(target[r])] for r in range(m)]
    for v in nullspace(rows, k + 1):
        if v[k]:
            return [Fraction(x, v[k]) for x in v[:k]]
    return None


def gauss_det(mat: Sequence[Sequence[GaussRat]]) -> GaussRat:
    """Determinant over Q(i) by Gaussian elimination."""
    a = [list(row) for row in mat]
    n = len(a)
    det = GaussRat(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return GaussRat(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        piv = a[c][c]
        det = det * piv
        inv = piv.inverse()
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def principal_minors(mat: Sequence[Sequence[GaussRat]]):
    """Yield ``(indices, det)`` for every principal minor, smallest first."""
    n = len(mat)
    for size in range(1, n + 1):
        for idx in combinations(range(n), size):
            sub = [[mat[i][j] for j in idx] for i in idx]
            yield idx, gauss_det(sub)


def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return [[sum((a[i][k] * b[k][j] for k in range(m)), GaussRat()) for j in range(p)] for i in range(n)]


def identity(n: int):
    return [[GaussRat(1 if i == j else 0) for j in range(n)] for i in range(n)]
