"""Exact scalars and multi-index helpers.

Rationals are :class:`fractions.Fraction`; Gaussian rationals are
:class:`GaussRat`, a pair of fractions closed under the field operations.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Rat = Fraction
MultiIndex = tuple  # tuple[int, ...]

Scalar = Union[int, Fraction, "GaussRat"]


class DimensionError(ValueError):
    """Raised when multi-indices or weight vectors have mismatched lengths."""


def rat(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def rat_str(q: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is one."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class GaussRat:
    """Element of Q(i), stored as two reduced fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, x) -> "GaussRat":
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex numbers are not exact")
        return cls(rat(x), 0)

    # -- predicates --------------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def __eq__(self, other):
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, GaussRat):
            return GaussRat(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussRat(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, GaussRat):
            return GaussRat(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussRat(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, GaussRat):
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b:
                if not d:
                    return GaussRat(a * c, 0)
                return GaussRat(a * c, a * d)
            if not d:
                return GaussRat(a * c, b * c)
            return GaussRat(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return GaussRat(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def conj(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussRat":
        n = self.abs2()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussRat(self.re / n, -self.im / n)

    def __truediv__(self, other):
        other = GaussRat.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussRat.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = GaussRat(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    # -- text / json -------------------------------------------------------
    def __repr__(self):
        return f"GaussRat({rat_str(self.re)!r}, {rat_str(self.im)!r})"

    def __str__(self):
        return gauss_str(self)

    def to_json(self) -> dict:
        return {"re": rat_str(self.re), "im": rat_str(self.im)}

    @classmethod
    def from_json(cls, obj: dict) -> "GaussRat":
        return cls(rat(obj.get("re", "0")), rat(obj.get("im", "0")))


I = GaussRat(0, 1)
ONE = GaussRat(1, 0)
ZERO = GaussRat(0, 0)


def gauss_str(c: GaussRat) -> str:
    """Text form parsable by the expression grammar: ``1/2``, ``-3 i``, ``1/2 + 3/4 i``."""
    if not c.im:
        return rat_str(c.re)
    im_abs = abs(c.im)
    im_txt = "i" if im_abs == 1 else f"{rat_str(im_abs)} i"
    if not c.re:
        return ("-" if c.im < 0 else "") + im_txt
    sign = "-" if c.im < 0 else "+"
    return f"{rat_str(c.re)} {sign} {im_txt}"


def weighted_length(alpha: Sequence[int], mu: Sequence[Fraction]) -> Fraction:
    """Sum of ``alpha_j * mu_j``."""
    if len(alpha) != len(mu):
        raise DimensionError(f"multi-index of length {len(alpha)} vs weights of length {len(mu)}")
    total = Fraction(0)
    for a, m in zip(alpha, mu):
        if a:
            total += a * m
    return total


def pair_weighted_length(alpha: Sequence[int], beta: Sequence[int], mu: Sequence[Fraction]) -> Fraction:
    if len(alpha) != len(beta):
        raise DimensionError("holomorphic and antiholomorphic multi-indices differ in length")
    return weighted_length(alpha, mu) + weighted_length(beta, mu)


def mi_add(a: Sequence[int], b: Sequence[int]) -> MultiIndex:
    if len(a) != len(b):
        raise DimensionError("multi-index length mismatch")
    return tuple(x + y for x, y in zip(a, b))


def mi_sub(a: Sequence[int], b: Sequence[int]) -> MultiIndex:
    if len(a) != len(b):
        raise DimensionError("multi-index length mismatch")
    out = tuple(x - y for x, y in zip(a, b))
    if any(x < 0 for x in out):
        raise ValueError(f"{tuple(a)} - {tuple(b)} has a negative entry")
    return out


def unit(n: int, j: int) -> MultiIndex:
    return tuple(1 if k == j else 0 for k in range(n))


def multi_indices(mu: Sequence[Fraction], target: Fraction) -> list[MultiIndex]:
    """All alpha >= 0 with weighted length exactly ``target`` (weights must be positive)."""
    target = Fraction(target)
    n = len(mu)
    if target < 0:
        return []
    out: list[MultiIndex] = []

    def rec(j: int, remaining: Fraction, prefix: list[int]):
        if j == n:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        k = 0
        while k * mu[j] <= remaining:
            prefix.append(k)
            rec(j + 1, remaining - k * mu[j], prefix)
            prefix.pop()
            k += 1

    rec(0, target, [])
    return sorted(out)


def lcm_denominators(values: Iterable[Fraction]) -> int:
    from math import lcm

    out = 1
    for v in values:
        out = lcm(out, Fraction(v).denominator)
    return out
