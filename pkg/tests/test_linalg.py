from fractions import Fraction

from crsym.arith import GaussRat
from crsym.linalg import express, gauss_det, nullspace, principal_minors, rank, reduced_pivots
from crsym.upoly import UPoly, char_poly, count_real_roots, poly_gcd, squarefree_part

g = GaussRat


def test_nullspace_is_primitive_and_annihilates():
    rows = [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, Fraction(1, 2), 0]]
    ker = nullspace(rows, 4)
    assert len(ker) == 4 - rank(rows, 4) == 2
    for v in ker:
        assert all(isinstance(x, int) for x in v)
        assert next(x for x in v if x) > 0
        for r in rows:
            assert sum(Fraction(a) * b for a, b in zip(r, v)) == 0


def test_reduced_pivots_canonical():
    a = reduced_pivots([[2, 4, 0], [0, 3, 3]], 3)
    b = reduced_pivots([[0, 1, 1], [1, 3, 1]], 3)
    assert a == b


def test_express():
    basis = [[1, 0, 1], [0, 1, 1]]
    assert express(basis, [2, 3, 5]) == [2, 3]
    assert express(basis, [1, 1, 0]) is None


def test_gauss_det_and_minors():
    M = [[g(0), g(Fraction(1, 2))], [g(Fraction(1, 2)), g(0)]]
    assert gauss_det(M) == g(Fraction(-1, 4))
    minors = list(principal_minors(M))
    assert minors[-1][1] == g(Fraction(-1, 4))
    assert gauss_det([[g(1), g(0, 1)], [g(0, -1), g(1)]]) == g(0)


def test_char_poly():
    # t^2 - trace t + det
    A = [[g(1), g(2)], [g(3), g(4)]]
    assert char_poly(A) == UPoly([g(-2), g(-5), g(1)])


def test_squarefree_and_sturm():
    p = UPoly([g(-1), g(0), g(1)]) * UPoly([g(-1), g(0), g(1)])  # (t^2 - 1)^2
    s = squarefree_part(p)
    assert s.degree == 2
    assert count_real_roots(s) == 2
    assert count_real_roots(UPoly([g(1), g(0), g(1)])) == 0
    assert poly_gcd(p, p.derivative()).degree == 2
