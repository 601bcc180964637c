from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from crsym.arith import GaussRat, multi_indices
from crsym.fields import VField, bracket, graded_degree, tangency
from crsym.model import validate
from crsym.ring import HoloPoly, MixedPoly, RealPoly, substitute_w, wirtinger

from conftest import zoo

N = 2
MU = (Fraction(1, 2), Fraction(1, 4))
small = st.fractions(min_value=-3, max_value=3, max_denominator=4)
gauss = st.builds(GaussRat, small, small)
nonzero_gauss = gauss.filter(bool)


@st.composite
def holo_polys(draw, max_w=2):
    keys = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, max_w))
    terms = draw(st.dictionaries(keys, gauss, max_size=4))
    return HoloPoly(N, terms)


@st.composite
def mixed_polys(draw):
    keys = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.just(0))
    return MixedPoly(N, draw(st.dictionaries(keys, gauss, max_size=4)))


@st.composite
def real_polys(draw):
    m = draw(mixed_polys())
    return (m + m.conj()).to_real()


@st.composite
def homogeneous_fields(draw, d):
    """Random field of weighted degree d for MU, as a real combination of monomials."""
    slots = {}
    for slot in range(N + 1):
        base = MU[slot] if slot < N else 1
        terms = {}
        for m in range(3):
            target = d + base - m
            for alpha in multi_indices(MU, target) if target >= 0 else []:
                if draw(st.booleans()):
                    terms[alpha + (m,)] = draw(nonzero_gauss)
        slots[slot] = HoloPoly(N, terms)
    return VField.from_slots(N, slots)


degrees = st.sampled_from([Fraction(k, 4) for k in range(-4, 5)])


@given(gauss, gauss, gauss)
def test_gauss_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a * b).conj() == a.conj() * b.conj()
    if a:
        assert a * a.inverse() == GaussRat(1)


@given(holo_polys(), holo_polys(), holo_polys())
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == HoloPoly.zero(N)


@given(real_polys(), real_polys())
def test_reality_preserved(p, q):
    assert isinstance(p * q, RealPoly)
    assert (p * q).to_mixed().is_real()
    assert (p + q.scale(Fraction(-2, 3))).to_mixed().is_real()


@settings(max_examples=40, deadline=None)
@given(holo_polys(), holo_polys(), real_polys())
def test_substitute_w_is_a_homomorphism(h1, h2, P):
    assert substitute_w(h1 * h2, P) == substitute_w(h1, P) * substitute_w(h2, P)
    assert substitute_w(h1 + h2, P) == substitute_w(h1, P) + substitute_w(h2, P)


@given(mixed_polys(), st.integers(0, N - 1), st.integers(0, N - 1))
def test_wirtinger_derivatives_commute(p, j, k):
    a = wirtinger(wirtinger(p, j), k, conjugated=True)
    b = wirtinger(wirtinger(p, k, conjugated=True), j)
    assert a == b
    assert wirtinger(p, j).conj() == wirtinger(p.conj(), j, conjugated=True)


@given(st.sampled_from(["hyperquadric1", "sos_1_4", "sos_quartic_2var", "tube_x1z2", "nonbalanced_quartic"]))
def test_euler_identity(name):
    m = zoo(name)
    P = m.P.to_mixed()
    acc = MixedPoly.zero(m.n)
    for j in range(m.n):
        zj = MixedPoly(m.n, {tuple(1 if i == j else 0 for i in range(2 * m.n)) + (0,): GaussRat(1)})
        acc = acc + (zj * wirtinger(m.P, j) + zj.conj() * wirtinger(m.P, j, conjugated=True)).scale(m.mu[j])
    assert acc == P


def _sos14():
    return zoo("sos_1_4")


@settings(max_examples=40, deadline=None)
@given(degrees, st.data(), small, small)
def test_tangency_real_linear_and_real(d, data, a, b):
    m = _sos14()
    X = data.draw(homogeneous_fields(d))
    Y = data.draw(homogeneous_fields(d))
    tX, tY = tangency(X, m), tangency(Y, m)
    assert tX.is_real()
    assert tangency(X.scale(a) + Y.scale(b), m) == tX.scale(a) + tY.scale(b)


@settings(max_examples=30, deadline=None)
@given(degrees, degrees, degrees, st.data())
def test_jacobi(d1, d2, d3, data):
    X, Y, Z = (data.draw(homogeneous_fields(d)) for d in (d1, d2, d3))
    total = bracket(X, bracket(Y, Z)) + bracket(Y, bracket(Z, X)) + bracket(Z, bracket(X, Y))
    assert total.is_zero()


@settings(max_examples=50, deadline=None)
@given(degrees, degrees, st.data())
def test_bracket_degree_additive(d1, d2, data):
    X = data.draw(homogeneous_fields(d1))
    Y = data.draw(homogeneous_fields(d2))
    Z = bracket(X, Y)
    if not Z.is_zero():
        assert graded_degree(Z, MU) == d1 + d2


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_validate_accepts_sums_of_abs2_monomials(data):
    # sum of |z^alpha|^2 with |alpha|_mu = 1/2 is always a valid model
    mu = (Fraction(1, 2), Fraction(1, 4))
    good = multi_indices(mu, Fraction(1, 2))
    picks = data.draw(st.lists(st.sampled_from(good), min_size=1, max_size=3, unique=True))
    P = RealPoly.zero(2)
    for a in picks:
        P = P + RealPoly(2, {a + a: GaussRat(1)})
    assert validate(mu, P).n == 2
