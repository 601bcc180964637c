"""Holomorphic polynomial vector fields on C^{n+1}.

A field ``X = sum_j f_j d/dz_j + g d/dw`` is an infinitesimal automorphism of
``M = {Im w = P}`` when ``2 Re X (Im w - P)`` vanishes on M.  We take the real
field attached to X to be ``X + conj(X)`` and ``Im w = (w - conj(w)) / 2i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import GaussRat, weighted_length
from .ring import HoloPoly, MixedPoly, RealPoly, substitute_w, wirtinger

_HALF_OVER_I = GaussRat(0, Fraction(-1, 2))  # 1 / (2i)


class InhomogeneousError(ValueError):
    def __init__(self, degrees):
        self.degrees = sorted(degrees)
        super().__init__("field is not weighted homogeneous; degrees " + ", ".join(str(d) for d in self.degrees))


class VField:
    __slots__ = ("n", "f", "g")

    def __init__(self, f: Sequence[HoloPoly], g: HoloPoly):
        self.f = tuple(f)
        self.g = g
        self.n = g.n
        if len(self.f) != self.n or any(c.n != self.n for c in self.f):
            raise ValueError("coefficient count does not match n")

    @classmethod
    def zero(cls, n: int) -> "VField":
        return cls([HoloPoly.zero(n)] * n, HoloPoly.zero(n))

    @classmethod
    def from_slots(cls, n: int, slots: dict) -> "VField":
        """``slots`` maps 0..n-1 (d/dz_j) and n (d/dw) to HoloPoly."""
        z = HoloPoly.zero(n)
        return cls([slots.get(j, z) for j in range(n)], slots.get(n, z))

    def coefficients(self) -> tuple:
        return self.f + (self.g,)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coefficients())

    __bool__ = lambda self: not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, VField):
            return NotImplemented
        return self.coefficients() == other.coefficients()

    def __hash__(self):
        return hash(self.coefficients())

    def __add__(self, other: "VField") -> "VField":
        return VField([a + b for a, b in zip(self.f, other.f)], self.g + other.g)

    def __sub__(self, other: "VField") -> "VField":
        return VField([a - b for a, b in zip(self.f, other.f)], self.g - other.g)

    def __neg__(self):
        return VField([-a for a in self.f], -self.g)

    def scale(self, c) -> "VField":
        return VField([a.scale(c) for a in self.f], self.g.scale(c))

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def apply(self, h: HoloPoly) -> HoloPoly:
        """X(h) for a holomorphic polynomial h(z, w)."""
        out = self.g * h.diff_w()
        for j, fj in enumerate(self.f):
            if fj:
                out = out + fj * h.diff(j)
        return out

    def to_text(self) -> str:
        names = [f"d/dz{j + 1}" for j in range(self.n)] + ["d/dw"]
        parts = [f"({c.to_text()}) {name}" for c, name in zip(self.coefficients(), names) if c]
        return " + ".join(parts) or "0"

    __str__ = to_text

    def __repr__(self):
        return f"VField({self.to_text()!r})"

    def vector(self, index: dict) -> list:
        """Real coordinates with respect to ``index``: {(slot, key): col}; real part at col, imag at col+1."""
        out = [Fraction(0)] * (2 * len(index))
        for slot, c in enumerate(self.coefficients()):
            for key, v in c.items():
                col = index[(slot, key)]
                out[2 * col] = v.re
                out[2 * col + 1] = v.im
        return out


@dataclass(frozen=True)
class GradedVField:
    field: VField
    degree: Fraction

    def to_text(self) -> str:
        return self.field.to_text()


def bracket(X: VField, Y: VField) -> VField:
    """[X, Y] with components X(Y_v) - Y(X_v)."""
    if X.n != Y.n:
        raise ValueError("fields live on different spaces")
    coeffs = [X.apply(b) - Y.apply(a) for a, b in zip(X.coefficients(), Y.coefficients())]
    return VField(coeffs[:-1], coeffs[-1])


def is_rigid(X: VField) -> bool:
    """No coefficient involves w, i.e. [X, d/dw] = 0."""
    return all(c.w_free() for c in X.coefficients())


def graded_degree(X: VField, mu: Sequence[Fraction]) -> Fraction | None:
    """Weighted degree of X, ``None`` for the zero field; raises InhomogeneousError if mixed."""
    degs = set()
    n = X.n
    for j, c in enumerate(X.coefficients()):
        shift = mu[j] if j < n else 1
        for key, _ in c.items():
            degs.add(weighted_length(key[:n], mu) + key[n] - shift)
    if not degs:
        return None
    if len(degs) > 1:
        raise InhomogeneousError(degs)
    return degs.pop()


# ---------------------------------------------------------------------------
# tangency


def _p_gradient(model) -> list:
    cache = getattr(model, "_grad_cache", None)
    if cache is None:
        cache = [wirtinger(model.P, j) for j in range(model.n)]
        object.__setattr__(model, "_grad_cache", cache)
    return cache


def holomorphic_residual(X: VField, model) -> MixedPoly:
    """T = X(Im w - P) restricted to M: g/(2i) - sum_j f_j dP/dz_j with w = u + iP."""
    if X.n != model.n:
        raise ValueError("field and model differ in n")
    grad = _p_gradient(model)
    out = substitute_w(X.g, model.P).scale(_HALF_OVER_I)
    for j, fj in enumerate(X.f):
        if fj:
            out = out - substitute_w(fj, model.P) * grad[j]
    return out


def tangency(X: VField, model) -> MixedPoly:
    """(X + conj X)(Im w - P) on M; zero exactly when X is an infinitesimal automorphism."""
    T = holomorphic_residual(X, model)
    return T + T.conj()


def numeric_residual(X: VField, P: RealPoly, z: Sequence[complex], u: float) -> float:
    """Float evaluation of 2 Re X(Im w - P) at the point (z, u + iP(z)) of M.

    Works from the field's coefficients and P directly, without the symbolic
    substitution used by :func:`tangency`.
    """
    n = X.n
    Pval = P.evaluate(z).real
    w = complex(u, Pval)
    dP = [wirtinger(P, j).evaluate(z) for j in range(n)]
    T = X.g.evaluate(z, w) / 2j
    for j in range(n):
        T -= X.f[j].evaluate(z, w) * dP[j]
    return 2 * T.real


# ---------------------------------------------------------------------------
# explicit symmetries


def _z(n, j):
    return HoloPoly.var(n, j)


def _w(n):
    return HoloPoly.w(n)


def translation_w(n: int) -> VField:
    """W = d/dw."""
    return VField.from_slots(n, {n: HoloPoly.constant(n, 1)})


def euler_field(mu: Sequence[Fraction]) -> VField:
    """E = w d/dw + sum mu_j z_j d/dz_j."""
    n = len(mu)
    return VField.from_slots(n, {**{j: _z(n, j).scale(mu[j]) for j in range(n)}, n: _w(n)})


def imaginary_euler_field(mu: Sequence[Fraction]) -> VField:
    """i sum mu_j z_j d/dz_j."""
    n = len(mu)
    return VField.from_slots(n, {j: _z(n, j).scale(GaussRat(0, mu[j])) for j in range(n)})


def third_symmetry(mu: Sequence[Fraction]) -> VField:
    """(1/2) w^2 d/dw + sum mu_j w z_j d/dz_j.

    The d/dz coefficient is forced by [d/dw, X] being a multiple of the
    Euler field; with it the field is tangent to every balanced model.
    """
    n = len(mu)
    w = _w(n)
    slots = {j: (w * _z(n, j)).scale(mu[j]) for j in range(n)}
    slots[n] = (w * w).scale(Fraction(1, 2))
    return VField.from_slots(n, slots)


def half_weight_field(mu: Sequence[Fraction], j: int, a: GaussRat) -> VField:
    """a d/dz_j + 2i conj(a) z_j d/dw (needs mu_j = 1/2)."""
    n = len(mu)
    a = GaussRat.coerce(a)
    return VField.from_slots(n, {j: HoloPoly.constant(n, a), n: _z(n, j).scale(GaussRat(0, 2) * a.conj())})


def integrated_half_weight_field(mu: Sequence[Fraction], j: int, a: GaussRat) -> VField:
    """a w d/dz_j + 4i conj(a) z_j sum_k mu_k z_k d/dz_k + 2i conj(a) z_j w d/dw.

    Degree 1/2 partner of :func:`half_weight_field`, valid on models of the
    form sum_{k<=kappa} |z_k|^2 + Q with Q balanced.
    """
    n = len(mu)
    a = GaussRat.coerce(a)
    c = GaussRat(0, 4) * a.conj()
    zj = _z(n, j)
    slots = {k: (zj * _z(n, k)).scale(c * mu[k]) for k in range(n)}
    slots[j] = slots[j] + _w(n).scale(a)
    slots[n] = (zj * _w(n)).scale(GaussRat(0, 2) * a.conj())
    return VField.from_slots(n, slots)


def known_fields(model) -> dict:
    """Named explicit symmetries instantiated for ``model``.

    The half-weight families are materialised for a = 1 and a = i; the
    integrated ones only when P has the leading block sum |z_j|^2.
    """
    from .model import HALF, leading_block

    mu = model.mu
    n = model.n
    out = {
        "W": translation_w(n),
        "E": euler_field(mu),
        "E_imag": imaginary_euler_field(mu),
        "third": third_symmetry(mu),
    }
    block = leading_block(model)
    for j in range(n):
        if mu[j] != HALF:
            continue
        for tag, a in (("1", GaussRat(1)), ("i", GaussRat(0, 1))):
            out[f"half_z{j + 1}_a{tag}"] = half_weight_field(mu, j, a)
    if block:
        for j in range(block):
            for tag, a in (("1", GaussRat(1)), ("i", GaussRat(0, 1))):
                out[f"half_int_z{j + 1}_a{tag}"] = integrated_half_weight_field(mu, j, a)
    return out
