from fractions import Fraction

import pytest

from crsym.arith import (
    DimensionError,
    GaussRat,
    gauss_str,
    lcm_denominators,
    multi_indices,
    pair_weighted_length,
    rat,
    rat_str,
    weighted_length,
)

half, quarter = Fraction(1, 2), Fraction(1, 4)


@pytest.mark.parametrize(
    "alpha, mu, expected",
    [
        ((0, 0, 0), (half, quarter, 1), 0),
        ((1, 1), (half, half), 1),
        ((1, 2), (half, quarter), 1),
    ],
)
def test_weighted_length(alpha, mu, expected):
    assert weighted_length(alpha, mu) == expected


def test_weighted_length_mismatch():
    with pytest.raises(DimensionError):
        weighted_length((1, 0), (half,))


@pytest.mark.parametrize(
    "alpha, beta, mu, expected",
    [
        ((1,), (1,), (half,), 1),
        ((2, 0), (0, 2), (quarter, quarter), 1),
        ((0,), (0,), (half,), 0),
    ],
)
def test_pair_weighted_length(alpha, beta, mu, expected):
    assert pair_weighted_length(alpha, beta, mu) == expected


def test_gauss_basics():
    assert GaussRat(1, 2).conj() == GaussRat(1, -2)
    assert GaussRat(0, 1) * GaussRat(0, 1) == GaussRat(-1)
    assert GaussRat(2).inverse() == GaussRat(half)
    z = GaussRat(Fraction(3, 5), Fraction(-7, 2))
    assert z * z.inverse() == GaussRat(1)
    assert z.abs2() == Fraction(9, 25) + Fraction(49, 4)
    with pytest.raises(ZeroDivisionError):
        GaussRat(0).inverse()


def test_gauss_mixes_with_rationals():
    assert GaussRat(1, 1) + 1 == GaussRat(2, 1)
    assert 2 - GaussRat(0, 1) == GaussRat(2, -1)
    assert GaussRat(0, 1) ** 3 == GaussRat(0, -1)
    assert complex(GaussRat(half, -1)) == complex(0.5, -1)


def test_gauss_json_roundtrip():
    z = GaussRat(Fraction(-3, 7), Fraction(5, 2))
    assert GaussRat.from_json(z.to_json()) == z
    assert z.to_json() == {"re": "-3/7", "im": "5/2"}


@pytest.mark.parametrize(
    "c, text",
    [
        (GaussRat(half), "1/2"),
        (GaussRat(0, -3), "-3 i"),
        (GaussRat(half, Fraction(3, 4)), "1/2 + 3/4 i"),
        (GaussRat(0, 1), "i"),
        (GaussRat(0), "0"),
    ],
)
def test_gauss_str(c, text):
    assert gauss_str(c) == text


def test_rat_parsing():
    assert rat("3/4") == Fraction(3, 4)
    assert rat(2) == 2
    assert rat_str(Fraction(-5, 3)) == "-5/3"
    assert rat_str(Fraction(4)) == "4"


def test_multi_indices_enumerates_exactly():
    mu = (half, quarter)
    got = multi_indices(mu, 1)
    assert got == sorted(got)
    assert set(got) == {(2, 0), (1, 2), (0, 4)}
    assert multi_indices(mu, Fraction(-1, 4)) == []
    assert multi_indices(mu, 0) == [(0, 0)]


def test_lcm_denominators():
    assert lcm_denominators([half, Fraction(1, 3), Fraction(5, 4)]) == 12
