from fractions import Fraction

import pytest

from crsym.arith import GaussRat
from crsym.fields import (
    InhomogeneousError,
    VField,
    bracket,
    euler_field,
    graded_degree,
    half_weight_field,
    imaginary_euler_field,
    integrated_half_weight_field,
    is_rigid,
    known_fields,
    numeric_residual,
    tangency,
    third_symmetry,
    translation_w,
)
from crsym.model import balance_info, leading_block
from crsym.ring import HoloPoly
from crsym.zoo import ZOO

from conftest import holo, mixed, zoo

half, quarter = Fraction(1, 2), Fraction(1, 4)
I = GaussRat(0, 1)


def field(n, **slots):
    """field(2, z1="w", w="z1^2") with names z1..zn and w."""
    out = {}
    for name, text in slots.items():
        slot = n if name == "w" else int(name[1:]) - 1
        out[slot] = holo(text, n)
    return VField.from_slots(n, out)


@pytest.mark.parametrize("entry", ZOO, ids=lambda z: z.name)
def test_universal_symmetries(entry):
    m = entry.model()
    assert tangency(translation_w(m.n), m).is_zero()
    assert tangency(euler_field(m.mu), m).is_zero()


def test_tangency_of_dz1_on_hyperquadric():
    m = zoo("hyperquadric1")
    assert tangency(field(1, z1="1"), m) == mixed("-z1 - zb1")


def test_bracket_examples():
    mu = (half,)
    E, W = euler_field(mu), translation_w(1)
    assert bracket(E, W) == W.scale(-1)
    assert bracket(E, E).is_zero()
    # [d/dw, (1/2) w^2 d/dw + 2 mu w z d/dz] = w d/dw + 2 mu z d/dz, differentiated by hand
    Y = field(1, z1="w z1", w="1/2 w^2")
    assert bracket(W, Y) == field(1, z1="z1", w="w")


def test_bracket_antisymmetric():
    X = field(2, z1="w + z2^2", w="z1 z2")
    Y = field(2, z2="i z1", w="w^2")
    assert bracket(X, Y) == -bracket(Y, X)


def test_euler_acts_by_degree():
    m = zoo("sos_1_4")
    E = euler_field(m.mu)
    for name, X in known_fields(m).items():
        d = graded_degree(X, m.mu)
        assert bracket(E, X) == X.scale(d), name


def test_is_rigid():
    assert is_rigid(field(1, z1="i z1"))
    assert not is_rigid(euler_field((half,)))
    assert is_rigid(field(1, z1="1"))


def test_graded_degree():
    mu = (half, quarter)
    assert graded_degree(translation_w(2), mu) == -1
    assert graded_degree(field(2, z1="1"), mu) == -half
    assert graded_degree(field(2, z2="1"), mu) == -quarter
    assert graded_degree(VField.zero(2), mu) is None
    with pytest.raises(InhomogeneousError):
        graded_degree(field(1, z1="1 + w"), (half,))


def test_known_field_examples():
    h = known_fields(zoo("hyperquadric1"))
    assert h["half_z1_a1"] == field(1, z1="1", w="2 i z1")
    assert h["E"] == euler_field((half,))
    q = known_fields(zoo("sos_quartic_1var"))
    assert q["third"] == field(1, z1="1/4 z1 w", w="1/2 w^2")


@pytest.mark.parametrize("entry", ZOO, ids=lambda z: z.name)
def test_known_fields_are_tangent(entry):
    m = entry.model()
    block = leading_block(m) or 0
    for name, X in known_fields(m).items():
        if name.startswith("half_") and int(name.split("_z")[1].split("_")[0]) > block:
            continue
        if name == "third" and m.sos is None:
            continue
        if name in ("E_imag", "third") and not _balanced(m):
            continue
        assert tangency(X, m).is_zero(), name


def _balanced(m):
    return balance_info(m).balanced


def test_doubled_third_symmetry_is_not_tangent():
    # coefficient 2 in front of the z-part breaks tangency
    for name in ("sos_quartic_1var", "hyperquadric1", "sos_quartic_2var"):
        m = zoo(name)
        good = third_symmetry(m.mu)
        z_part = good - VField.from_slots(m.n, {m.n: good.g})
        doubled = good + z_part
        assert tangency(good, m).is_zero()
        assert not tangency(doubled, m).is_zero()
        # [d/dw, doubled] is not a symmetry either
        assert not tangency(bracket(translation_w(m.n), doubled), m).is_zero()


def test_integrated_half_weight_needs_coefficient_four():
    m = zoo("sos_1_4")
    for a in (GaussRat(1), I):
        X = integrated_half_weight_field(m.mu, 0, a)
        assert tangency(X, m).is_zero()
        # same field with 2i in the middle term
        n = m.n
        zj = HoloPoly.var(n, 0)
        mid = {k: (zj * HoloPoly.var(n, k)).scale(GaussRat(0, 2) * a.conj() * m.mu[k]) for k in range(n)}
        weak = X - VField.from_slots(n, mid)
        assert not tangency(weak, m).is_zero()


def test_half_weight_bracket_closes():
    m = zoo("hyperquadric1")
    A = half_weight_field(m.mu, 0, GaussRat(1))
    B = half_weight_field(m.mu, 0, I)
    # w-slot: A(2 z1) - B(2i z1) = 2 - (-2)
    assert bracket(A, B) == translation_w(1).scale(4)
    # z-slot: -A(i z1 / 2) = -i/2, w-slot: E_imag(2i z1) = -z1
    assert bracket(imaginary_euler_field(m.mu), A) == B.scale(-half)


def test_numeric_residual_agrees_with_exact():
    m = zoo("nonbalanced_quartic")
    X = field(1, z1="z1^2 + w", w="3 z1 w")
    z, u = GaussRat(Fraction(1, 3), Fraction(-1, 2)), Fraction(2, 5)
    exact = tangency(X, m).evaluate([z], u)
    approx = numeric_residual(X, m.P, [complex(z)], float(u))
    assert abs(complex(exact) - approx) < 1e-12
    assert complex(exact).imag == 0


def test_text_format():
    X = field(1, z1="1/2 z1 w", w="i")
    assert X.to_text() == "((1/2) z1 w) d/dz1 + ((i)) d/dw"
    assert VField.zero(2).to_text() == "0"
