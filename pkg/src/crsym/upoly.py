"""Univariate polynomials over Q(i), characteristic polynomials and Sturm counts."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .arith import GaussRat
from .linalg import mat_mul


class UPoly:
    """Dense univariate polynomial, coefficients low degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Sequence):
        c = [GaussRat.coerce(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.c = c

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def lead(self) -> GaussRat:
        return self.c[-1]

    def __eq__(self, other):
        return isinstance(other, UPoly) and self.c == other.c

    def __repr__(self):
        return f"UPoly({[str(x) for x in self.c]})"

    def __add__(self, other):
        k = max(len(self.c), len(other.c))
        z = GaussRat()
        return UPoly([(self.c[i] if i < len(self.c) else z) + (other.c[i] if i < len(other.c) else z) for i in range(k)])

    def __neg__(self):
        return UPoly([-x for x in self.c])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            return UPoly([x * other for x in self.c])
        if self.is_zero() or other.is_zero():
            return UPoly([])
        out = [GaussRat()] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            for j, b in enumerate(other.c):
                out[i + j] = out[i + j] + a * b
        return UPoly(out)

    __rmul__ = __mul__

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        q = [GaussRat()] * max(len(rem) - len(other.c) + 1, 0)
        inv = other.lead().inverse()
        while len(rem) >= len(other.c) and rem:
            shift = len(rem) - len(other.c)
            f = rem[-1] * inv
            q[shift] = f
            for i, b in enumerate(other.c):
                rem[i + shift] = rem[i + shift] - f * b
            rem.pop()
            while rem and not rem[-1]:
                rem.pop()
        return UPoly(q), UPoly(rem)

    def monic(self):
        return self * self.lead().inverse()

    def derivative(self):
        return UPoly([x * i for i, x in enumerate(self.c)][1:])

    def __call__(self, x):
        acc = GaussRat()
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def at_matrix(self, A):
        n = len(A)
        acc = [[GaussRat()] * n for _ in range(n)]
        for a in reversed(self.c):
            acc = mat_mul(acc, A)
            acc = [[acc[i][j] + (a if i == j else GaussRat()) for j in range(n)] for i in range(n)]
        return acc

    def is_real(self) -> bool:
        return all(not x.im for x in self.c)


def poly_gcd(a: UPoly, b: UPoly) -> UPoly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


def squarefree_part(p: UPoly) -> UPoly:
    g = poly_gcd(p, p.derivative())
    return p.divmod(g)[0].monic()


def char_poly(A) -> UPoly:
    """det(t I - A) by Faddeev-LeVerrier."""
    n = len(A)
    coeffs = [GaussRat()] * (n + 1)
    coeffs[n] = GaussRat(1)
    M = [[GaussRat()] * n for _ in range(n)]
    for k in range(1, n + 1):
        AM = mat_mul(A, M)
        M = [[AM[i][j] + (coeffs[n - k + 1] if i == j else GaussRat()) for j in range(n)] for i in range(n)]
        AM = mat_mul(A, M)
        tr = sum((AM[i][i] for i in range(n)), GaussRat())
        coeffs[n - k] = tr * Fraction(-1, k)
    return UPoly(coeffs)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def sturm_sequence(p: UPoly) -> list:
    if not p.is_real():
        raise ValueError("Sturm sequences need real coefficients")
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        r = seq[-2].divmod(seq[-1])[1]
        if r.is_zero():
            break
        seq.append(-r)
    return [s for s in seq if not s.is_zero()]


def count_real_roots(p: UPoly) -> int:
    """Number of distinct real roots of a real polynomial."""
    if p.degree <= 0:
        return 0
    seq = sturm_sequence(p)

    def changes(signs):
        s = [x for x in signs if x]
        return sum(1 for a, b in zip(s, s[1:]) if a != b)

    at_pos = [_sign(q.lead().re) for q in seq]
    at_neg = [_sign(q.lead().re) * (-1) ** q.degree for q in seq]
    return changes(at_neg) - changes(at_pos)
