"""Degreewise computation of the symmetry algebra of a model.

For each admissible weighted degree d the candidate fields form a finite
dimensional space (every coefficient weighted homogeneous of the right
degree).  Tangency is real-linear in the coefficients, so it becomes an
exact linear system over Q whose kernel is the degree-d component.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import floor, gcd, lcm
from typing import Sequence

from .arith import GaussRat, multi_indices, rat_str
from .fields import GradedVField, VField, _p_gradient, tangency
from .linalg import nullspace
from .ring import HoloPoly, MixedPoly, _w_power

_HALF_OVER_I = GaussRat(0, Fraction(-1, 2))


class SolverError(RuntimeError):
    """An internal consistency check failed."""


# ---------------------------------------------------------------------------
# degrees


def degree_menu(mu: Sequence[Fraction]) -> list:
    """{-1} u {-mu_j} u {0} u E u {1}, E the nonnegative integer combinations of mu in (0, 1)."""
    mu = [Fraction(m) for m in mu]
    combos = {Fraction(0)}
    frontier = [Fraction(0)]
    while frontier:
        nxt = []
        for c in frontier:
            for m in mu:
                s = c + m
                if s < 1 and s not in combos:
                    combos.add(s)
                    nxt.append(s)
        frontier = nxt
    degs = {Fraction(-1), Fraction(0), Fraction(1)} | {-m for m in mu} | combos
    return sorted(degs)


def lattice_step(mu: Sequence[Fraction]) -> Fraction:
    """Generator of the subgroup of Q spanned by mu and 1."""
    den = reduce(lcm, (Fraction(m).denominator for m in mu), 1)
    num = reduce(gcd, (int(Fraction(m) * den) for m in mu), den)
    return Fraction(num, den)


def extended_menu(mu: Sequence[Fraction], lower=-1, upper=1) -> list:
    """Every degree k * step in [lower, upper]; a superset of every possible field degree."""
    step = lattice_step(mu)
    lo = -floor(-Fraction(lower) / step)
    hi = floor(Fraction(upper) / step)
    return [k * step for k in range(lo, hi + 1)]


# ---------------------------------------------------------------------------
# ansatz and linear system


def ansatz(model, d) -> dict:
    """Candidate monomials per slot: ``{slot: [(alpha, m), ...]}``.

    Slot j < n is the d/dz_j coefficient (degree d + mu_j), slot n is the
    d/dw coefficient (degree d + 1).  Each monomial is z^alpha w^m.
    """
    mu = model.mu
    n = model.n
    d = Fraction(d)
    out = {}
    for slot in range(n + 1):
        target = d + (mu[slot] if slot < n else 1)
        monos = []
        if target >= 0:
            for m in range(int(floor(target)) + 1):
                for alpha in multi_indices(mu, target - m):
                    monos.append((alpha, m))
        out[slot] = sorted(monos, key=lambda am: (sum(am[0]) + am[1], am[0], am[1]))
    return out


@dataclass
class LinearSystem:
    unknowns: list  # (slot, alpha, m, part) with part "re" | "im"
    rows: list  # lists of Fraction
    provenance: list  # (alpha, beta, k, part) per row

    @property
    def ncols(self) -> int:
        return len(self.unknowns)


def _monomial_residual(model, slot: int, alpha, m: int) -> MixedPoly:
    """Holomorphic residual T for the field z^alpha w^m in ``slot`` (coefficient 1)."""
    n = model.n
    wp = _w_power(model.P, m)
    key = tuple(alpha) + (0,) * n + (0,)
    if slot == n:
        return wp.shift(key).scale(_HALF_OVER_I)
    return -(wp * _p_gradient(model)[slot]).shift(key)


def _collect(columns: list, nrows_hint=None):
    """Turn per-unknown residual polynomials into rows (real and imaginary parts)."""
    keys = sorted({k for col in columns for k in col.terms}, key=lambda k: (sum(k),) + k)
    rows = []
    prov = []
    for k in keys:
        re_row = [col.coeff(k).re for col in columns]
        im_row = [col.coeff(k).im for col in columns]
        if any(re_row):
            rows.append(re_row)
            prov.append((k, "re"))
        if any(im_row):
            rows.append(im_row)
            prov.append((k, "im"))
    return rows, prov


def build_system(model, d, *, holomorphic: bool = False, rigid_only: bool = False) -> LinearSystem:
    """Linear system for tangency at degree ``d``.

    ``holomorphic=True`` imposes the full complex condition T = 0 (used for
    holomorphic nondegeneracy) instead of T + conj(T) = 0.
    """
    slots = ansatz(model, d)
    unknowns = []
    columns = []
    I = GaussRat(0, 1)
    for slot in range(model.n + 1):
        for alpha, m in slots[slot]:
            if rigid_only and m:
                continue
            T = _monomial_residual(model, slot, alpha, m)
            Ti = T.scale(I)
            if holomorphic:
                columns += [T, Ti]
            else:
                columns += [T + T.conj(), Ti + Ti.conj()]
            unknowns += [(slot, alpha, m, "re"), (slot, alpha, m, "im")]
    rows, prov = _collect(columns)
    n = model.n
    provenance = [((k[:n], k[n:2 * n], k[2 * n]), part) for k, part in prov]
    return LinearSystem(unknowns, rows, provenance)


def field_from_vector(model, unknowns: list, vec: Sequence) -> VField:
    n = model.n
    acc: dict = {}
    for (slot, alpha, m, part), x in zip(unknowns, vec):
        if not x:
            continue
        c = GaussRat(x, 0) if part == "re" else GaussRat(0, x)
        acc.setdefault(slot, {})
        key = tuple(alpha) + (m,)
        acc[slot][key] = acc[slot].get(key, GaussRat()) + c
    return VField.from_slots(n, {s: HoloPoly(n, t) for s, t in acc.items()})


def kernel_fields(model, d, **kw) -> list:
    system = build_system(model, d, **kw)
    if not system.unknowns:
        return []
    return [field_from_vector(model, system.unknowns, v) for v in nullspace(system.rows, system.ncols)]


def complex_tangency_kernel(model, d) -> list:
    """Fields of degree d with X(Im w - P) = 0 identically on M."""
    return kernel_fields(model, d, holomorphic=True)


def solve_graded(model, d, *, verify: bool = True) -> list:
    """Real basis of the degree-``d`` symmetries, each checked against :func:`tangency`."""
    d = Fraction(d)
    basis = kernel_fields(model, d)
    if verify:
        for X in basis:
            if not tangency(X, model).is_zero():
                raise SolverError(f"kernel field at degree {d} fails tangency: {X}")
    return [GradedVField(X, d) for X in basis]


# ---------------------------------------------------------------------------
# full grading


@dataclass
class Component:
    degree: Fraction
    basis: list  # GradedVField
    rigid_dim: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {
            "degree": rat_str(self.degree),
            "dim": self.dim,
            "rigid_dim": self.rigid_dim,
            "basis": [b.field.to_text() for b in self.basis],
        }


@dataclass
class GradingReport:
    model: object
    components: dict  # degree -> Component, in menu order
    off_menu: dict = field(default_factory=dict)  # degree -> dim, debug mode only

    def dim(self, d) -> int:
        c = self.components.get(Fraction(d))
        return c.dim if c else 0

    def dims(self) -> dict:
        return {d: c.dim for d, c in self.components.items()}

    def nonzero_dims(self) -> dict:
        return {d: c.dim for d, c in self.components.items() if c.dim}

    @property
    def total_dim(self) -> int:
        return sum(c.dim for c in self.components.values())

    def intermediate(self) -> list:
        return [c for d, c in self.components.items() if 0 < d < 1]

    @property
    def has_gc(self) -> bool:
        return any(c.rigid_dim for c in self.intermediate())

    @property
    def has_gn(self) -> bool:
        return any(c.dim > c.rigid_dim for c in self.intermediate())

    @property
    def gn_weights(self) -> list:
        return [c.degree for c in self.intermediate() if c.dim > c.rigid_dim]

    def basis(self, d) -> list:
        c = self.components.get(Fraction(d))
        return [b.field for b in c.basis] if c else []

    def all_fields(self):
        for d, c in self.components.items():
            for b in c.basis:
                yield d, b.field

    def to_json(self) -> dict:
        out = {
            "degrees": [c.to_json() for c in self.components.values()],
            "total_dim": self.total_dim,
            "flags": {
                "has_gc": self.has_gc,
                "has_gn": self.has_gn,
                "gn_weights": [rat_str(w) for w in self.gn_weights],
            },
        }
        if self.off_menu:
            out["off_menu"] = {rat_str(d): k for d, k in self.off_menu.items()}
        return out


def full_grading(model, *, debug_extended_menu: bool = False) -> GradingReport:
    comps = {}
    for d in degree_menu(model.mu):
        basis = solve_graded(model, d)
        rigid = 0
        if basis:
            rigid = len(kernel_fields(model, d, rigid_only=True))
        comps[d] = Component(d, basis, rigid)
    off = {}
    if debug_extended_menu:
        for d in extended_menu(model.mu):
            if d not in comps:
                k = len(solve_graded(model, d))
                if k:
                    off[d] = k
    return GradingReport(model, comps, off)
