"""Model hypersurfaces Im w = P(z, zb) and their structural predicates."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import GaussRat, pair_weighted_length, rat, rat_str, weighted_length
from .linalg import principal_minors, rank
from .ring import (
    HoloPoly,
    MixedPoly,
    RealPoly,
    pluriharmonic_terms,
    wirtinger,
)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Violation:
    kind: str  # weights | dimension | reality | pluriharmonic | inhomogeneous | zero
    detail: str
    monomial: str | None = None

    def to_json(self) -> dict:
        out = {"kind": self.kind, "detail": self.detail}
        if self.monomial is not None:
            out["monomial"] = self.monomial
        return out


class ModelValidationError(ValueError):
    def __init__(self, violations: Sequence[Violation]):
        self.violations = list(violations)
        super().__init__("; ".join(f"{v.kind}: {v.detail}" for v in self.violations))


@dataclass(frozen=True)
class Model:
    n: int
    mu: tuple
    P: RealPoly
    sos: tuple | None = None  # the holomorphic Q_j when built as a sum of squares
    name: str | None = None

    @property
    def provenance(self) -> str:
        return "sum_of_squares" if self.sos is not None else "generic"

    def to_json(self) -> dict:
        out = {"n": self.n, "mu": [rat_str(m) for m in self.mu]}
        if self.sos is not None:
            out["sos"] = {"mu": [rat_str(m) for m in self.mu], "Q": [q.to_text() for q in self.sos]}
        out["P"] = {
            "text": self.P.to_text(),
            "terms": [
                {"alpha": list(a), "beta": list(b), **c.to_json()} for (a, b), c in self.P.monomials()
            ],
        }
        return out


def _mono(n, key) -> str:
    return MixedPoly(n, {tuple(key) + (0,) * (2 * n + 1 - len(key)): 1}).to_text()


def check_weights(mu: Sequence) -> list:
    out = []
    mu = [rat(m) for m in mu]
    for j, m in enumerate(mu):
        if not 0 < m <= HALF:
            out.append(Violation("weights", f"mu_{j + 1} = {rat_str(m)} is not in (0, 1/2]"))
    for j in range(len(mu) - 1):
        if mu[j] < mu[j + 1]:
            out.append(Violation("weights", f"mu_{j + 1} < mu_{j + 2}: weights must be nonincreasing"))
    return out


def check_model(mu: Sequence, P) -> list:
    """Every reason (mu, P) fails to define a model; empty when valid."""
    mu = tuple(rat(m) for m in mu)
    out = check_weights(mu)
    if isinstance(P, RealPoly):
        P = P.to_mixed()
    n = P.n
    if len(mu) != n:
        return out + [Violation("dimension", f"{len(mu)} weights for {n} variables")]
    if P.is_zero():
        out.append(Violation("zero", "P is identically zero"))
        return out
    if not P.u_free():
        out.append(Violation("dimension", "P must not depend on u"))
        return out
    for key in pluriharmonic_terms(P):
        out.append(Violation("pluriharmonic", "pluriharmonic term present", _mono(n, key)))
    conj = P.conj()
    for key, c in P.sorted_items():
        if conj.coeff(key) != c:
            out.append(Violation("reality", "coefficient is not conjugate to its mirror", _mono(n, key)))
    for key, _ in P.sorted_items():
        d = pair_weighted_length(key[:n], key[n:2 * n], mu)
        if d != 1:
            out.append(Violation("inhomogeneous", f"weighted degree {rat_str(d)} != 1", _mono(n, key)))
    return out


def validate(mu: Sequence, P, *, sos=None, name=None) -> Model:
    """Build a Model, raising ModelValidationError listing every violation."""
    violations = check_model(mu, P)
    if violations:
        raise ModelValidationError(violations)
    if not isinstance(P, RealPoly):
        P = P.to_real()
    return Model(P.n, tuple(rat(m) for m in mu), P, tuple(sos) if sos is not None else None, name)


def build_sos(mu: Sequence, Q: Sequence[HoloPoly], name=None) -> Model:
    """Model with P = sum |Q_j|^2; each Q_j must be weighted homogeneous of degree 1/2."""
    mu = tuple(rat(m) for m in mu)
    if not Q:
        raise ModelValidationError([Violation("zero", "empty list of squares")])
    problems = []
    for idx, q in enumerate(Q):
        if not isinstance(q, HoloPoly):
            raise TypeError("sum-of-squares entries must be HoloPoly")
        if not q.w_free():
            problems.append(Violation("inhomogeneous", f"Q_{idx + 1} involves w"))
            continue
        if q.is_zero():
            problems.append(Violation("zero", f"Q_{idx + 1} is zero"))
            continue
        for d in sorted(q.weighted_degrees(mu)):
            if d != HALF:
                problems.append(Violation("inhomogeneous", f"Q_{idx + 1} has weighted degree {rat_str(d)} != 1/2"))
    if problems:
        raise ModelValidationError(problems)
    n = Q[0].n
    P = MixedPoly.zero(n)
    for q in Q:
        m = q.to_mixed()
        P = P + m * m.conj()
    return validate(mu, P.to_real(), sos=Q, name=name)


# ---------------------------------------------------------------------------
# Levi form and pseudoconvexity


def levi_form(P: RealPoly) -> list:
    """Matrix of d^2 P / dz_j dzb_k (as u-free MixedPolys)."""
    n = P.n
    first = [wirtinger(P, j) for j in range(n)]
    return [[wirtinger(first[j], k, conjugated=True) for k in range(n)] for j in range(n)]


@dataclass
class LeviVerdict:
    status: str  # psd_certified | psd_sampled | not_psd | unknown
    samples_checked: int = 0
    tolerance: float = 0.0
    witness: dict | None = None

    @property
    def pseudoconvex(self) -> bool:
        return self.status in ("psd_certified", "psd_sampled")

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "samples_checked": self.samples_checked,
            "tolerance": self.tolerance,
            "witness": self.witness,
        }


def evaluate_matrix(mat, point):
    return [[entry.evaluate(point) for entry in row] for row in mat]


def sample_points(n: int, budget: int, seed: int) -> list:
    """Coordinate-axis points first, then seeded low-height Gaussian rationals."""
    pts = []
    for v in (GaussRat(1), GaussRat(0, 1), GaussRat(-1), GaussRat(0, -1)):
        for j in range(n):
            pts.append(tuple(v if k == j else GaussRat() for k in range(n)))
    rng = random.Random(seed)

    def coord():
        return GaussRat(
            Fraction(rng.randint(-16, 16), rng.randint(1, 16)),
            Fraction(rng.randint(-16, 16), rng.randint(1, 16)),
        )

    for _ in range(budget):
        pts.append(tuple(coord() for _ in range(n)))
    return pts


def psd_violation(mat):
    """First principal minor that is negative (or non-real), else None."""
    for idx, det in principal_minors(mat):
        if det.im or det.re < 0:
            return idx, det
    return None


def pseudoconvexity(model: Model, sample_budget: int = 64, seed: int = 0) -> LeviVerdict:
    if model.sos is not None:
        return LeviVerdict("psd_certified", 0, 0.0)
    L = levi_form(model.P)
    checked = 0
    for pt in sample_points(model.n, sample_budget, seed):
        checked += 1
        bad = psd_violation(evaluate_matrix(L, pt))
        if bad is not None:
            idx, det = bad
            witness = {
                "point": [c.to_json() for c in pt],
                "minor": [i + 1 for i in idx],
                "value": det.to_json(),
            }
            return LeviVerdict("not_psd", checked, 0.0, witness)
    return LeviVerdict("psd_sampled", checked, 0.0)


# ---------------------------------------------------------------------------
# balance and diagonal monomials


@dataclass(frozen=True)
class BalanceInfo:
    balanced: bool
    kappa: int

    def to_json(self) -> dict:
        return {"balanced": self.balanced, "kappa_M": self.kappa}


def balance_info(model: Model) -> BalanceInfo:
    """kappa = #{mu_j = 1/2}; balanced iff every monomial has |a|_mu = |b|_mu = 1/2."""
    balanced = all(
        weighted_length(a, model.mu) == HALF and weighted_length(b, model.mu) == HALF
        for (a, b), _ in model.P.monomials()
    )
    return BalanceInfo(balanced, sum(1 for m in model.mu if m == HALF))


def diagonal_condition(model: Model):
    """Index (0-based) of the first j lacking a diagonal monomial supported on z_1..z_j, else None."""
    diag = [a for (a, b), c in model.P.monomials() if a == b]
    for j in range(model.n):
        if not any(a[j] and not any(a[j + 1:]) for a in diag):
            return j
    return None


def diagonal_span_rank(model: Model) -> int:
    vecs = [[2 * x for x in a] for (a, b), _ in model.P.monomials() if a == b]
    return rank(vecs, model.n) if vecs else 0


def leading_block(model: Model) -> int | None:
    """kappa if P = sum_{j<kappa} |z_j|^2 + Q(z_{kappa+1}, ...) in the given coordinates, else None."""
    kappa = sum(1 for m in model.mu if m == HALF)
    n = model.n
    if kappa == 0:
        return 0
    rest = model.P
    for j in range(kappa):
        rest = rest - RealPoly.abs2_var(n, j)
    for key, _ in rest.items():
        if any(key[j] or key[n + j] for j in range(kappa)):
            return None
    return kappa


def holomorphic_nondegeneracy(model: Model, degree_cap=1):
    """Search for a nonzero holomorphic field X of weighted degree <= cap with X(Im w - P) = 0 on M.

    Returns ``None`` if none exists up to the cap, else a witness VField.
    """
    from .solver import complex_tangency_kernel, extended_menu

    cap = rat(degree_cap)
    for d in extended_menu(model.mu, upper=cap):
        basis = complex_tangency_kernel(model, d)
        if basis:
            return basis[0]
    return None
