import pytest
import sympy

from cyclopqr.binary import (
    binary_coefficient,
    binary_dense,
    lam_leung_support,
    signs_alternate,
)
from cyclopqr.errors import InvalidArgument
from cyclopqr.poly import DensePoly

X = sympy.Symbol("x")


def sympy_phi(n):
    return [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, X), X).all_coeffs())]


def test_support_3_5():
    s = lam_leung_support(3, 5)
    assert s.plus_support.tolist() == [0, 3, 5, 8]
    assert s.minus_support.tolist() == [1, 4, 7]
    assert (s.p_q_star, s.q_p_star) == (2, 2)


def test_support_3_7_plus_count():
    s = lam_leung_support(3, 7)
    assert (s.p_q_star, s.q_p_star) == (5, 1)
    assert s.plus_support.size == 5


@pytest.mark.parametrize("p, q", [(3, 5), (3, 7), (5, 7), (7, 11), (11, 13), (13, 101), (3, 997)])
def test_counts_and_disjointness(p, q):
    s = lam_leung_support(p, q)
    assert s.plus_support.size == s.p_q_star * s.q_p_star
    assert s.minus_support.size == (q - s.p_q_star) * (p - s.q_p_star)
    assert s.plus_support.size - s.minus_support.size == 1
    assert not set(s.plus_support.tolist()) & set(s.minus_support.tolist())
    assert s.exponents.min() == 0 and s.exponents.max() == (p - 1) * (q - 1)
    assert binary_coefficient(s, (p - 1) * (q - 1)) == 1


@pytest.mark.parametrize("m, expected", [(0, 1), (4, -1), (-2, 0), (2, 0), (8, 1), (9, 0)])
def test_binary_coefficient(m, expected):
    assert binary_coefficient(lam_leung_support(3, 5), m) == expected


def test_dense_3_5():
    d = binary_dense(lam_leung_support(3, 5))
    assert d.tolist() == [1, -1, 0, 1, -1, 1, 0, -1, 1]
    assert d[0] == 1 and d[d.degree] == 1
    assert signs_alternate(d)


@pytest.mark.parametrize("p, q", [(3, 5), (5, 7), (7, 19), (11, 31), (17, 23), (3, 101)])
def test_dense_matches_sympy(p, q):
    assert binary_dense(lam_leung_support(p, q)).tolist() == sympy_phi(p * q)


def test_signs_alternate_detects_failure():
    assert not signs_alternate(DensePoly.from_list([1, 1, -1]))
    assert not signs_alternate(DensePoly.from_list([-1, 1]))


@pytest.mark.parametrize("p, q", [(5, 3), (3, 3), (2, 5), (3, 9), (4, 7)])
def test_invalid_pairs(p, q):
    with pytest.raises(InvalidArgument):
        lam_leung_support(p, q)


def test_support_is_immutable():
    s = lam_leung_support(3, 5)
    with pytest.raises(ValueError):
        s.exponents[0] = 7
