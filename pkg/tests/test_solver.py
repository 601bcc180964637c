import cmath
import random
from fractions import Fraction
from functools import reduce
from math import gcd

import numpy as np
import pytest

from crsym.arith import GaussRat
from crsym.fields import VField, bracket, euler_field, graded_degree, numeric_residual, tangency
from crsym.ring import HoloPoly
from crsym.solver import (
    ansatz,
    build_system,
    degree_menu,
    extended_menu,
    field_from_vector,
    full_grading,
    solve_graded,
)
from crsym.zoo import ZOO

from conftest import holo, zoo

half, quarter, third = Fraction(1, 2), Fraction(1, 4), Fraction(1, 3)


def F(*xs):
    return [Fraction(x) for x in xs]


def test_degree_menu():
    assert degree_menu([half]) == F(-1, "-1/2", 0, "1/2", 1)
    assert degree_menu([half, quarter]) == F(-1, "-1/2", "-1/4", 0, "1/4", "1/2", "3/4", 1)
    assert degree_menu([third]) == F(-1, "-1/3", 0, "1/3", "2/3", 1)


def test_extended_menu_covers_menu():
    mu = [half, quarter]
    assert set(degree_menu(mu)) <= set(extended_menu(mu))
    assert Fraction(-3, 4) in extended_menu(mu)


def test_ansatz_examples():
    assert ansatz(zoo("hyperquadric1"), -1) == {0: [], 1: [((0,), 0)]}
    assert ansatz(zoo("hyperquadric1"), -half) == {0: [((0,), 0)], 1: [((1,), 0)]}
    assert ansatz(zoo("sos_quartic_1var"), -half) == {0: [], 1: [((2,), 0)]}


def test_solve_graded_examples():
    m = zoo("hyperquadric1")
    (W,) = solve_graded(m, -1)
    assert W.field == VField.from_slots(1, {1: HoloPoly.constant(1, 1)})
    basis = [b.field for b in solve_graded(m, -half)]
    assert basis == [
        VField.from_slots(1, {0: holo("i", 1), 1: holo("2 z1", 1)}),
        VField.from_slots(1, {0: holo("1", 1), 1: holo("2 i z1", 1)}),
    ]
    (g1,) = solve_graded(zoo("sos_quartic_1var"), 1)
    assert g1.field == VField.from_slots(1, {0: holo("z1 w", 1), 1: holo("2 w^2", 1)})


@pytest.mark.parametrize(
    "name, dims",
    [
        ("hyperquadric1", {-1: 1, "-1/2": 2, 0: 2, "1/2": 2, 1: 1}),
        ("sos_quartic_1var", {-1: 1, 0: 2, 1: 1}),
        ("sos_1_4", {-1: 1, "-1/2": 2, 0: 3, "1/2": 2, 1: 1}),
    ],
)
def test_full_grading_examples(name, dims):
    r = full_grading(zoo(name))
    assert r.nonzero_dims() == {Fraction(k): v for k, v in dims.items()}


def float_kernel_dim(model, d, rng):
    """dim of the real kernel, from float residuals at random points of M and SVD rank."""
    slots = ansatz(model, d)
    n = model.n
    cols = []
    for slot, monos in slots.items():
        for alpha, m in monos:
            for c in (GaussRat(1), GaussRat(0, 1)):
                X = VField.from_slots(n, {slot: HoloPoly.monomial(n, alpha, m, c)})
                cols.append(X)
    if not cols:
        return 0
    pts = []
    for _ in range(2 * len(cols) + 10):
        z = [cmath.rect(rng.uniform(0.2, 1.0), rng.uniform(0, 6.3)) for _ in range(n)]
        pts.append((z, rng.uniform(-1, 1)))
    A = np.array([[numeric_residual(X, model.P, z, u) for X in cols] for z, u in pts])
    s = np.linalg.svd(A, compute_uv=False)
    rank = int((s > 1e-9 * max(1.0, s[0])).sum())
    return len(cols) - rank


@pytest.mark.parametrize("entry", ZOO, ids=lambda z: z.name)
def test_dims_match_float_oracle(entry):
    m = entry.model()
    rng = random.Random(11)
    r = full_grading(m)
    for d in degree_menu(m.mu):
        assert r.dim(d) == float_kernel_dim(m, d, rng), d


@pytest.mark.parametrize("entry", ZOO, ids=lambda z: z.name)
def test_basis_is_sound_and_homogeneous(entry):
    m = entry.model()
    E = euler_field(m.mu)
    for d, X in full_grading(m).all_fields():
        assert tangency(X, m).is_zero()
        assert graded_degree(X, m.mu) == d
        Y = bracket(E, X)
        assert Y == X.scale(d)


def test_basis_normalisation():
    m = zoo("sos_1_4")
    for d in degree_menu(m.mu):
        system = build_system(m, d)
        for X in solve_graded(m, d):
            vec = []
            for slot, key, part in [(u[0], u[1] + (u[2],), u[3]) for u in system.unknowns]:
                c = X.field.coefficients()[slot].coeff(key)
                vec.append(c.re if part == "re" else c.im)
            nz = [v for v in vec if v]
            assert all(v.denominator == 1 for v in vec)
            assert nz[0] > 0
            assert reduce(gcd, [int(v) for v in nz]) == 1


def test_field_from_vector_roundtrip():
    m = zoo("hyperquadric1")
    system = build_system(m, -half)
    X = field_from_vector(m, system.unknowns, [1, 0, 0, 2])
    assert X == VField.from_slots(1, {0: holo("1", 1), 1: holo("2 i z1", 1)})
    assert tangency(X, m).is_zero()


def test_debug_extended_menu_finds_nothing_off_menu():
    for name in ("hyperquadric1", "sos_1_4", "nonbalanced_quartic"):
        r = full_grading(zoo(name), debug_extended_menu=True)
        assert r.off_menu == {}


def test_rigid_dims():
    r = full_grading(zoo("hyperquadric1"))
    assert [c.rigid_dim for c in r.components.values()] == [1, 2, 1, 0, 0]
    assert not r.has_gc and r.has_gn and r.gn_weights == [half]
    deg = full_grading(zoo("degenerate_hq1_n2"))
    assert deg.has_gc
