"""Sparse exact polynomials in (z, zb), (z, w) and (z, zb, u).

All three kinds store a dict from a flat exponent tuple to a nonzero
:class:`~crsym.arith.GaussRat`.  Layouts:

* :class:`RealPoly`  -- ``alpha + beta`` (length 2n), real-valued
* :class:`HoloPoly`  -- ``alpha + (m,)`` (length n+1), ``m`` the power of w
* :class:`MixedPoly` -- ``alpha + beta + (k,)`` (length 2n+1), ``k`` the power of u

Variable indices in the Python API are 0-based (``j = 0`` is ``z1``);
text output uses the 1-based names ``z1``, ``zb1``.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterator, Mapping, Sequence

from .arith import (
    ONE,
    DimensionError,
    GaussRat,
    gauss_str,
    pair_weighted_length,
    weighted_length,
)


class NotRealError(ValueError):
    """A RealPoly was built from coefficients violating A[a,b] = conj(A[b,a])."""


class DecompositionError(ValueError):
    pass


def _coerce(c) -> GaussRat:
    return c if type(c) is GaussRat else GaussRat.coerce(c)


class _Poly:
    __slots__ = ("n", "_terms", "_hash")
    _extra = 0  # trailing non-z slots in the key
    _pairs = 1  # 1 for (z), 2 for (z, zb)

    def __init__(self, n: int, terms: Mapping[tuple, object] | None = None):
        self.n = n
        klen = self._pairs * n + self._extra
        clean = {}
        for key, c in (terms or {}).items():
            key = tuple(int(e) for e in key)
            if len(key) != klen:
                raise DimensionError(f"{type(self).__name__} key {key} has length {len(key)}, expected {klen}")
            if any(e < 0 for e in key):
                raise ValueError(f"negative exponent in {key}")
            c = _coerce(c)
            if c:
                clean[key] = clean.get(key, GaussRat()) + c
        self._terms = {k: v for k, v in clean.items() if v}
        self._hash = None
        self._check()

    def _check(self):
        pass

    @classmethod
    def _raw(cls, n: int, terms: dict):
        obj = object.__new__(cls)
        obj.n = n
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, n: int):
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c=1):
        c = _coerce(c)
        klen = cls._pairs * n + cls._extra
        return cls(n, {(0,) * klen: c})

    # -- container protocol -------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, key) -> GaussRat:
        return self._terms.get(tuple(key), GaussRat())

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            if not other:
                return not self._terms
            return self == type(self).constant(self.n, other)
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.n, frozenset(self._terms.items())))
        return self._hash

    # -- ring operations ----------------------------------------------------
    def _same(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.n != self.n:
            raise DimensionError(f"variable counts differ: {self.n} vs {other.n}")

    def _lift(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            return type(self).constant(self.n, other)
        return other

    def __add__(self, other):
        other = self._lift(other)
        self._same(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s:
                    out[k] = s
                else:
                    del out[k]
        return type(self)._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = _coerce(c)
        if not c:
            return type(self).zero(self.n)
        return type(self)._raw(self.n, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            return self.scale(other)
        self._same(other)
        out: dict = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                s = out.get(k)
                out[k] = c1 * c2 if s is None else s + c1 * c2
        return type(self)._raw(self.n, {k: v for k, v in out.items() if v})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = type(self).constant(self.n, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def _diff_slot(self, pos: int, cls=None):
        cls = cls or type(self)
        out = {}
        for k, c in self._terms.items():
            e = k[pos]
            if e:
                nk = k[:pos] + (e - 1,) + k[pos + 1:]
                out[nk] = c * e
        return cls._raw(self.n, out)

    def shift(self, key):
        """Multiply by the monomial with exponent tuple ``key``."""
        return type(self)._raw(self.n, {tuple(a + b for a, b in zip(k, key)): c for k, c in self._terms.items()})

    # -- text ---------------------------------------------------------------
    def _var_names(self) -> list[str]:
        raise NotImplementedError

    def _sort_key(self, key):
        return (sum(key),) + tuple(key)

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: self._sort_key(kv[0]))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        names = self._var_names()
        parts = []
        for key, c in self.sorted_items():
            mono = []
            for name, e in zip(names, key):
                if e == 1:
                    mono.append(name)
                elif e:
                    mono.append(f"{name}^{e}")
            if c == ONE and mono:
                parts.append(" ".join(mono))
            else:
                parts.append(" ".join([f"({gauss_str(c)})"] + mono))
        return " + ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, {self.to_text()!r})"

    def max_abs_coefficient(self) -> float:
        return max((abs(complex(c)) for c in self._terms.values()), default=0.0)


class MixedPoly(_Poly):
    """Polynomial in z, zb and the real variable u."""

    __slots__ = ()
    _pairs = 2
    _extra = 1

    @classmethod
    def from_terms(cls, n: int, terms: Mapping[tuple, object]) -> "MixedPoly":
        return cls(n, {tuple(a) + tuple(b) + (k,): c for (a, b, k), c in terms.items()})

    def split(self, key):
        n = self.n
        return key[:n], key[n:2 * n], key[2 * n]

    def monomials(self) -> Iterator[tuple]:
        for key, c in self.sorted_items():
            yield self.split(key), c

    def _var_names(self):
        return [f"z{j + 1}" for j in range(self.n)] + [f"zb{j + 1}" for j in range(self.n)] + ["u"]

    def _sort_key(self, key):
        return (sum(key),) + tuple(key)

    def conj(self) -> "MixedPoly":
        """Complex conjugate, u being real."""
        n = self.n
        return MixedPoly._raw(n, {k[n:2 * n] + k[:n] + k[2 * n:]: c.conj() for k, c in self._terms.items()})

    def is_real(self) -> bool:
        return self == self.conj()

    def real_part(self) -> "MixedPoly":
        return (self + self.conj()).scale(Fraction(1, 2))

    def u_free(self) -> bool:
        return all(k[-1] == 0 for k in self._terms)

    def to_real(self) -> "RealPoly":
        if not self.u_free():
            raise ValueError("polynomial depends on u")
        n = self.n
        return RealPoly(n, {k[:2 * n]: c for k, c in self._terms.items()})

    def evaluate(self, z: Sequence, u=0):
        """Evaluate at a point of C^n (zb taken as conj(z)) and real u.

        Exact when the inputs are GaussRat, floating for Python complex.
        """
        exact = all(isinstance(x, GaussRat) for x in z)
        zb = [x.conj() if exact else complex(x).conjugate() for x in z]
        vals = list(z) + zb + [u]
        total = GaussRat() if exact else 0j
        for key, c in self._terms.items():
            t = c if exact else complex(c)
            for v, e in zip(vals, key):
                if e:
                    t = t * v ** e
            total = total + t
        return total


class RealPoly(_Poly):
    """Real-valued polynomial sum A[a,b] z^a zb^b with A[a,b] = conj(A[b,a])."""

    __slots__ = ()
    _pairs = 2
    _extra = 0

    def _check(self):
        n = self.n
        for k, c in self._terms.items():
            mirror = k[n:] + k[:n]
            if self._terms.get(mirror, GaussRat()) != c.conj():
                raise NotRealError(f"coefficient of {_mono_text(n, k)} is not conjugate to its mirror")

    @classmethod
    def from_terms(cls, n: int, terms: Mapping[tuple, object]) -> "RealPoly":
        return cls(n, {tuple(a) + tuple(b): c for (a, b), c in terms.items()})

    @classmethod
    def abs2_var(cls, n: int, j: int, power: int = 1) -> "RealPoly":
        """|z_j|^(2 power)."""
        key = [0] * (2 * n)
        key[j] = key[n + j] = power
        return cls._raw(n, {tuple(key): ONE})

    def split(self, key):
        return key[:self.n], key[self.n:]

    def monomials(self) -> Iterator[tuple]:
        for key, c in self.sorted_items():
            yield self.split(key), c

    def _var_names(self):
        return [f"z{j + 1}" for j in range(self.n)] + [f"zb{j + 1}" for j in range(self.n)]

    def scale(self, c):
        c = _coerce(c)
        if c.im:
            raise NotRealError("RealPoly can only be scaled by real rationals")
        return super().scale(c)

    def conj(self) -> "RealPoly":
        return self

    def to_mixed(self) -> MixedPoly:
        return MixedPoly._raw(self.n, {k + (0,): c for k, c in self._terms.items()})

    def evaluate(self, z: Sequence):
        return self.to_mixed().evaluate(z)


class HoloPoly(_Poly):
    """Holomorphic polynomial in z and w."""

    __slots__ = ()
    _pairs = 1
    _extra = 1

    @classmethod
    def from_terms(cls, n: int, terms: Mapping[tuple, object]) -> "HoloPoly":
        return cls(n, {tuple(a) + (m,): c for (a, m), c in terms.items()})

    @classmethod
    def var(cls, n: int, j: int) -> "HoloPoly":
        key = [0] * (n + 1)
        key[j] = 1
        return cls._raw(n, {tuple(key): ONE})

    @classmethod
    def w(cls, n: int) -> "HoloPoly":
        return cls._raw(n, {(0,) * n + (1,): ONE})

    @classmethod
    def monomial(cls, n: int, alpha: Sequence[int], m: int = 0, c=1) -> "HoloPoly":
        return cls(n, {tuple(alpha) + (m,): c})

    def split(self, key):
        return key[:self.n], key[self.n]

    def monomials(self) -> Iterator[tuple]:
        for key, c in self.sorted_items():
            yield self.split(key), c

    def _var_names(self):
        return [f"z{j + 1}" for j in range(self.n)] + ["w"]

    def diff(self, j: int) -> "HoloPoly":
        """d/dz_j (0-based)."""
        return self._diff_slot(j)

    def diff_w(self) -> "HoloPoly":
        return self._diff_slot(self.n)

    def w_free(self) -> bool:
        return all(k[-1] == 0 for k in self._terms)

    def weighted_degrees(self, mu: Sequence[Fraction]) -> set:
        return {weighted_length(k[:self.n], mu) + k[self.n] for k in self._terms}

    def to_mixed(self) -> MixedPoly:
        if not self.w_free():
            raise ValueError("use substitute_w for polynomials involving w")
        n = self.n
        return MixedPoly._raw(n, {k[:n] + (0,) * n + (0,): c for k, c in self._terms.items()})

    def conj_mixed(self) -> MixedPoly:
        """conj(h) as a polynomial in zb (w-free input only)."""
        return self.to_mixed().conj()

    def evaluate(self, z: Sequence, w=0):
        exact = all(isinstance(x, GaussRat) for x in z) and isinstance(w, GaussRat)
        vals = list(z) + [w]
        total = GaussRat() if exact else 0j
        for key, c in self._terms.items():
            t = c if exact else complex(c)
            for v, e in zip(vals, key):
                if e:
                    t = t * v ** e
            total = total + t
        return total


def _mono_text(n: int, key) -> str:
    names = [f"z{j + 1}" for j in range(n)] + [f"zb{j + 1}" for j in range(n)] + ["u"]
    parts = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, key) if e]
    return " ".join(parts) or "1"


# ---------------------------------------------------------------------------
# operations


def wirtinger(p: RealPoly | MixedPoly, j: int, conjugated: bool = False) -> MixedPoly:
    """Formal d/dz_j (or d/dzb_j when ``conjugated``).

    The derivative of a real polynomial is generally not real, so the result
    is always a MixedPoly.
    """
    if isinstance(p, RealPoly):
        p = p.to_mixed()
    if not 0 <= j < p.n:
        raise IndexError(f"variable index {j} out of range for n={p.n}")
    return p._diff_slot(p.n + j if conjugated else j)


def weighted_degree_terms(p: RealPoly, mu: Sequence[Fraction]) -> dict:
    """Split ``p`` into weighted-homogeneous parts keyed by weighted degree."""
    if len(mu) != p.n:
        raise DimensionError("weight vector length does not match polynomial")
    buckets: dict = {}
    n = p.n
    for k, c in p.items():
        d = pair_weighted_length(k[:n], k[n:], mu)
        buckets.setdefault(d, {})[k] = c
    return {d: type(p)._raw(n, t) for d, t in sorted(buckets.items())}


def is_pluriharmonic_free(p: RealPoly | MixedPoly) -> bool:
    """True iff every term contains both some z and some zb."""
    return not pluriharmonic_terms(p)


def pluriharmonic_terms(p: RealPoly | MixedPoly) -> list:
    n = p.n
    bad = []
    for k, _ in p.sorted_items():
        if not any(k[:n]) or not any(k[n:2 * n]):
            bad.append(k)
    return bad


_SUBST_CACHE: dict = {}


def _w_power(P: RealPoly, m: int) -> MixedPoly:
    """(u + i P)^m, memoised on (P, m)."""
    key = (P, m)
    hit = _SUBST_CACHE.get(key)
    if hit is not None:
        return hit
    n = P.n
    if m == 0:
        out = MixedPoly.constant(n, 1)
    else:
        base = MixedPoly._raw(n, {(0,) * (2 * n) + (1,): ONE}) + P.to_mixed().scale(GaussRat(0, 1))
        out = _w_power(P, m - 1) * base
    if len(_SUBST_CACHE) > 4096:
        _SUBST_CACHE.clear()
    _SUBST_CACHE[key] = out
    return out


def substitute_w(h: HoloPoly, P: RealPoly) -> MixedPoly:
    """Restrict h(z, w) to the model by w = u + i P(z, zb)."""
    if h.n != P.n:
        raise DimensionError("holomorphic polynomial and model differ in n")
    n = h.n
    by_m: dict = {}
    for k, c in h.items():
        by_m.setdefault(k[n], {})[k[:n] + (0,) * n + (0,)] = c
    out = MixedPoly.zero(n)
    for m, terms in by_m.items():
        out = out + MixedPoly._raw(n, terms) * _w_power(P, m)
    return out


def xl_decompose(P: RealPoly, l: int) -> list:
    """Write P = sum_j x_l^j P_j with x_l = Re z_l and each P_j free of z_l.

    Returns ``[P_0, ..., P_m]`` (RealPolys in the same n, not involving z_l),
    empty for P = 0.  Raises DecompositionError if P depends on z_l other
    than through its real part.

    With s = z_l + zb_l and t = z_l, every term z_l^a zb_l^b expands to
    t^a (s - t)^b; expressibility means all t-dependence cancels.
    """
    n = P.n
    if not 0 <= l < n:
        raise IndexError(f"variable index {l} out of range for n={n}")
    acc: dict = {}
    for k, c in P.items():
        a, b = k[l], k[n + l]
        rest = list(k)
        rest[l] = rest[n + l] = 0
        rest = tuple(rest)
        for r in range(b + 1):
            # zb^b = sum_r C(b,r) s^r (-t)^(b-r)
            coef = c * (comb(b, r) * (-1) ** (b - r))
            key = (a + b - r, r, rest)
            s = acc.get(key)
            acc[key] = coef if s is None else s + coef
    parts: dict = {}
    for (t_exp, s_exp, rest), c in acc.items():
        if not c:
            continue
        if t_exp:
            raise DecompositionError(f"P depends on z{l + 1} beyond its real part")
        parts.setdefault(s_exp, {})[rest] = c * (2 ** s_exp)
    if not parts:
        return []
    m = max(parts)
    return [RealPoly(n, parts.get(j, {})) for j in range(m + 1)]
