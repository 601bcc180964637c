"""Structure verdicts on a computed grading.

Rotations (weight-zero fields with the Euler direction removed) are checked
for vanishing real and nilpotent parts by exact tests on their linear part:
squarefree characteristic polynomial vanishing at A (semisimplicity) and a
Sturm count on char(i t) (purely imaginary spectrum).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import GaussRat
from .fields import VField, euler_field, graded_degree
from .linalg import express, reduced_pivots
from .model import HALF, balance_info, holomorphic_nondegeneracy, pseudoconvexity
from .ring import DecompositionError, HoloPoly, xl_decompose
from .solver import SolverError
from .upoly import UPoly, char_poly, count_real_roots, squarefree_part


@dataclass
class LinearPart:
    A: list  # n x n GaussRat; X contains sum_{j,k} A[j][k] z_k d/dz_j
    c: GaussRat  # coefficient of w d/dw
    nonlinear_remainder: bool


@dataclass(frozen=True)
class RotationVerdict:
    semisimple: bool
    purely_imaginary: bool

    @property
    def real_part_zero(self) -> bool:
        return self.semisimple and self.purely_imaginary

    def to_json(self) -> dict:
        return {
            "semisimple": self.semisimple,
            "purely_imaginary": self.purely_imaginary,
            "real_part_zero": self.real_part_zero,
        }


def linear_part(X: VField, mu=None) -> LinearPart:
    """Split a weight-zero field into z-linear part, w d/dw part and a remainder flag."""
    n = X.n
    if mu is not None:
        d = graded_degree(X, mu)
        if d not in (None, 0):
            raise ValueError(f"linear_part needs a degree-0 field, got degree {d}")
    A = [[GaussRat() for _ in range(n)] for _ in range(n)]
    remainder = False
    for j, fj in enumerate(X.f):
        for key, c in fj.items():
            alpha, m = key[:n], key[n]
            if m == 0 and sum(alpha) == 1:
                A[j][alpha.index(1)] = c
            else:
                remainder = True
    c = GaussRat()
    for key, v in X.g.items():
        if key == (0,) * n + (1,):
            c = v
        else:
            remainder = True
    return LinearPart(A, c, remainder)


def rotation_check(A) -> RotationVerdict:
    """Exact semisimplicity and imaginary-spectrum test for a square matrix over Q(i).

    A is diagonalisable iff the squarefree part of its characteristic
    polynomial annihilates it (that part is then the minimal polynomial).
    The spectrum is purely imaginary iff q(t) = char(i t), made monic, has
    real coefficients and only real roots.
    """
    n = len(A)
    if n == 0:
        return RotationVerdict(True, True)
    chi = char_poly(A)
    sqf = squarefree_part(chi)
    at_a = sqf.at_matrix(A)
    semisimple = all(not x for row in at_a for x in row)
    i = GaussRat(0, 1)
    q = UPoly([c * i ** k for k, c in enumerate(chi.c)]).monic()
    imaginary = False
    if q.is_real():
        s = squarefree_part(q)
        imaginary = count_real_roots(s) == s.degree
    return RotationVerdict(semisimple, imaginary)


@dataclass
class G0Classification:
    euler_coords: list  # coordinates of E in the degree-0 basis
    rotations: list  # VField, Euler direction removed, canonical basis
    verdicts: list  # (label, RotationVerdict | None)
    violations: list = field(default_factory=list)
    unsupported: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _index_for(fields) -> dict:
    keys = set()
    for X in fields:
        for slot, c in enumerate(X.coefficients()):
            for key, _ in c.items():
                keys.add((slot, key))
    return {k: i for i, k in enumerate(sorted(keys))}


def _field_from_real(index: dict, n: int, vec) -> VField:
    slots: dict = {}
    for (slot, key), col in index.items():
        c = GaussRat(vec[2 * col], vec[2 * col + 1])
        if c:
            slots.setdefault(slot, {})[key] = c
    return VField.from_slots(n, {s: HoloPoly(n, t) for s, t in slots.items()})


def classify_g0(basis, model) -> G0Classification:
    fields = [b.field if hasattr(b, "field") else b for b in basis]
    n = model.n
    E = euler_field(model.mu)
    index = _index_for(fields + [E])
    vecs = [X.vector(index) for X in fields]
    coords = express(vecs, E.vector(index))
    if coords is None:
        raise SolverError("Euler field is not in the computed degree-0 component")
    violations = []
    reduced = []
    for X in fields:
        c = linear_part(X).c
        if c.im:
            violations.append(f"non-real w d/dw coefficient in {X}")
            continue
        reduced.append((X - E.scale(c.re)).vector(index))
    rows = reduced_pivots(reduced, 2 * len(index))
    rotations = [_field_from_real(index, n, rows[k]) for k in sorted(rows)]
    verdicts = []
    unsupported = []
    candidates = list(rotations)
    if len(rotations) > 1:
        combo = VField.zero(n)
        for k, R in enumerate(rotations):
            combo = combo + R.scale(k + 1)
        candidates.append(combo)
    for R in candidates:
        lp = linear_part(R)
        if lp.nonlinear_remainder:
            unsupported.append(R.to_text())
            verdicts.append((R.to_text(), None))
            continue
        v = rotation_check(lp.A)
        verdicts.append((R.to_text(), v))
        if not v.real_part_zero:
            violations.append(f"rotation with real or nilpotent part: {R}")
    return G0Classification([Fraction(x) for x in coords], rotations, verdicts, violations, unsupported)


def gn_dichotomy(model) -> list:
    """Per variable: ``form_6_3`` (x^2 + x P1 + P0), ``form_6_4`` (x P1 + P0) or ``none``."""
    out = []
    for l in range(model.n):
        try:
            parts = xl_decompose(model.P, l)
        except DecompositionError:
            out.append("none")
            continue
        m = len(parts) - 1
        if m == 1:
            out.append("form_6_4")
        elif m == 2 and _is_nonzero_constant(parts[2]):
            out.append("form_6_3")
        else:
            out.append("none")
    return out


def _is_nonzero_constant(p) -> bool:
    return len(p) == 1 and not any(next(iter(p.terms)))


@dataclass
class StructureVerdict:
    grading_shape: str  # thm_1_1 | thm_5_3 | thm_5_4 | other
    gc_zero: bool
    gn_weight_half_only: bool
    jet_order: int
    balanced: bool
    kappa: int
    pseudoconvex: bool
    nondegenerate: bool
    rotations_real_part_zero: bool
    dichotomy: list

    def to_json(self) -> dict:
        return {
            "grading_shape": self.grading_shape,
            "gc_zero": self.gc_zero,
            "gn_weight_half_only": self.gn_weight_half_only,
            "jet_order": self.jet_order,
            "balanced": self.balanced,
            "kappa_M": self.kappa,
            "pseudoconvex": self.pseudoconvex,
            "nondegenerate": self.nondegenerate,
            "rotations_real_part_zero": self.rotations_real_part_zero,
            "dichotomy": self.dichotomy,
        }


def grading_shape(report, model, pseudoconvex: bool, nondegenerate: bool) -> str:
    nz = report.nonzero_dims()
    mu = model.mu
    kappa = sum(1 for m in mu if m == HALF)
    ones = report.dim(-1) == 1 and report.dim(1) == 1
    homogeneous = len(set(mu)) == 1
    if model.sos is not None and ones:
        if homogeneous and mu[0] < HALF and set(nz) == {-1, 0, 1}:
            return "thm_5_3"
        half = Fraction(1, 2)
        if (
            any(m < HALF for m in mu)
            and set(nz) <= {-1, -half, 0, half, 1}
            and report.dim(-half) == 2 * kappa
            and report.dim(half) == 2 * kappa
        ):
            return "thm_5_4"
    allowed = {Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1)} | {-m for m in mu}
    if pseudoconvex and nondegenerate and set(nz) <= allowed:
        return "thm_1_1"
    return "other"


def structure_verdict(report, model, levi=None, nondegenerate=None) -> StructureVerdict:
    if levi is None:
        levi = pseudoconvexity(model)
    if nondegenerate is None:
        nondegenerate = holomorphic_nondegeneracy(model) is None
    bal = balance_info(model)
    g0 = classify_g0(report.components[Fraction(0)].basis, model)
    return StructureVerdict(
        grading_shape=grading_shape(report, model, levi.pseudoconvex, nondegenerate),
        gc_zero=not report.has_gc,
        gn_weight_half_only=all(
            c.degree == HALF for c in report.intermediate() if c.dim
        ),
        jet_order=2 if bal.balanced else 1,
        balanced=bal.balanced,
        kappa=bal.kappa,
        pseudoconvex=levi.pseudoconvex,
        nondegenerate=nondegenerate,
        rotations_real_part_zero=g0.ok and not g0.unsupported,
        dichotomy=gn_dichotomy(model),
    )
