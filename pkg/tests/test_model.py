from fractions import Fraction

import pytest

from crsym.arith import GaussRat
from crsym.model import (
    Model,
    ModelValidationError,
    balance_info,
    build_sos,
    diagonal_condition,
    diagonal_span_rank,
    evaluate_matrix,
    holomorphic_nondegeneracy,
    leading_block,
    levi_form,
    pseudoconvexity,
    sample_points,
    validate,
)
from crsym.ring import HoloPoly, MixedPoly, RealPoly
from crsym.zoo import ZOO

from conftest import holo, mixed, real, zoo

half, quarter = Fraction(1, 2), Fraction(1, 4)


def kinds(exc):
    return {v.kind for v in exc.value.violations}


def test_validate_examples():
    m = validate([half], real("abs2(z1)"))
    assert isinstance(m, Model) and m.n == 1
    with pytest.raises(ModelValidationError) as info:
        validate([half], mixed("z1^2"))
    assert "pluriharmonic" in kinds(info)
    tube = validate([half, quarter], real("Re(z1)*abs2(z2)"))
    assert tube.n == 2


@pytest.mark.parametrize(
    "mu, P, kind",
    [
        ([half], "abs2(z1) + abs2(z1)^2", "inhomogeneous"),
        ([half, 0], "abs2(z1)", "weights"),
        ([Fraction(3, 4)], "abs2(z1)", "weights"),
        ([half], "0", "zero"),
        ([half], "i z1 zb1", "reality"),
        ([half, half], "abs2(z1) + z1 z2", "pluriharmonic"),
    ],
)
def test_validate_rejects(mu, P, kind):
    with pytest.raises(ModelValidationError) as info:
        validate(mu, mixed(P, n=len(mu)))
    assert kind in kinds(info)


def test_validate_dimension_mismatch():
    with pytest.raises(ModelValidationError) as info:
        validate([half], real("abs2(z1)", n=2))
    assert "dimension" in kinds(info)


@pytest.mark.parametrize("entry", ZOO, ids=lambda z: z.name)
def test_mutated_zoo_models_are_rejected(entry):
    m = entry.model()
    # off-degree real term
    bump = RealPoly.abs2_var(m.n, 0, 3)
    with pytest.raises(ModelValidationError) as info:
        validate(m.mu, m.P + bump)
    assert "inhomogeneous" in kinds(info)
    # pluriharmonic term of the right degree is still rejected
    k = int(1 / m.mu[0])
    harmonic = MixedPoly(m.n, {tuple([k] + [0] * (2 * m.n)): GaussRat(1)})
    with pytest.raises(ModelValidationError) as info:
        validate(m.mu, m.P.to_mixed() + harmonic + harmonic.conj())
    assert "pluriharmonic" in kinds(info)


def test_build_sos():
    m = build_sos([quarter], [holo("z1^2")])
    assert m.P == real("abs2(z1)^2")
    assert m.provenance == "sum_of_squares"
    m = build_sos([half, quarter], [holo("z1", 2), holo("z2^2", 2)])
    assert m.P == real("abs2(z1) + abs2(z2)^2")
    with pytest.raises(ModelValidationError) as info:
        build_sos([half], [HoloPoly.constant(1, 1)])
    assert "inhomogeneous" in kinds(info)


def test_levi_form_examples():
    assert levi_form(real("abs2(z1)")) == [[MixedPoly.constant(1, 1)]]
    assert levi_form(real("abs2(z1)^2")) == [[mixed("4 z1 zb1")]]
    L = levi_form(real("Re(z1)*abs2(z2)"))
    assert L == [[MixedPoly.zero(2), mixed("z2/2", 2)], [mixed("zb2/2", 2), mixed("Re(z1)", 2)]]


def test_levi_form_is_gram_for_sums_of_squares():
    Q = [holo("z1^2", 2), holo("z1 z2", 2), holo("z2^2", 2)]
    m = build_sos([quarter, quarter], Q)
    L = levi_form(m.P)
    for j in range(2):
        for k in range(2):
            gram = MixedPoly.zero(2)
            for q in Q:
                gram = gram + q.diff(j).to_mixed() * q.diff(k).conj_mixed()
            assert L[j][k] == gram


def test_pseudoconvexity_examples():
    assert pseudoconvexity(zoo("sos_1_4")).status == "psd_certified"
    assert pseudoconvexity(zoo("hyperquadric1")).status == "psd_certified"
    v = pseudoconvexity(zoo("tube_x1z2"))
    assert v.status == "not_psd" and not v.pseudoconvex
    assert v.witness["point"] == [{"re": "0", "im": "0"}, {"re": "1", "im": "0"}]
    assert v.witness["minor"] == [1, 2]
    assert v.witness["value"] == {"re": "-1/4", "im": "0"}


def test_not_psd_witness_reproduces_by_hand():
    m = zoo("tube_x1z2")
    v = pseudoconvexity(m)
    z = [GaussRat.from_json(c) for c in v.witness["point"]]
    M = evaluate_matrix(levi_form(m.P), z)
    # 2x2 determinant written out
    det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
    assert M[0][1] == GaussRat(half) and M[1][0] == GaussRat(half)
    assert det == GaussRat(Fraction(-1, 4))


def test_non_sos_pseudoconvex_is_sampled():
    v = pseudoconvexity(zoo("nonbalanced_quartic"), sample_budget=32, seed=3)
    assert v.status == "psd_sampled"
    assert v.samples_checked == 4 + 32


def test_sample_points_deterministic_and_axes_first():
    a = sample_points(2, 10, 7)
    assert a == sample_points(2, 10, 7)
    assert a != sample_points(2, 10, 8)
    assert a[0] == (GaussRat(1), GaussRat(0))
    assert len(a) == 8 + 10
    for pt in a:
        for c in pt:
            for part in (c.re, c.im):
                assert abs(part.numerator) <= 16 and part.denominator <= 16


def test_nondegeneracy():
    X = holomorphic_nondegeneracy(zoo("degenerate_hq1_n2"))
    assert X is not None
    assert X.f[1] == HoloPoly.constant(2, 1) and X.f[0].is_zero() and X.g.is_zero()
    assert holomorphic_nondegeneracy(zoo("hyperquadric1")) is None
    assert holomorphic_nondegeneracy(zoo("sos_quartic_2var")) is None


def test_balance_info():
    b = balance_info(zoo("sos_1_4"))
    assert b.balanced and b.kappa == 1
    assert not balance_info(zoo("tube_x1z2")).balanced
    b = balance_info(zoo("sos_quartic_1var"))
    assert b.balanced and b.kappa == 0


def test_diagonal_condition():
    assert diagonal_condition(zoo("sos_1_4")) is None
    assert diagonal_condition(zoo("tube_x1z2")) == 0
    assert diagonal_condition(validate([quarter, quarter], real("abs2(z1 z2)"))) == 0


@pytest.mark.parametrize("entry", ZOO, ids=lambda z: z.name)
def test_diagonal_condition_implies_full_span(entry):
    m = entry.model()
    if diagonal_condition(m) is None:
        assert diagonal_span_rank(m) == m.n


def test_leading_block():
    assert leading_block(zoo("sos_1_4")) == 1
    assert leading_block(zoo("hyperquadric2")) == 2
    assert leading_block(zoo("sos_quartic_1var")) == 0
