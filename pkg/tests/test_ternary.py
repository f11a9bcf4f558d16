import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cyclopqr.binary import lam_leung_support
from cyclopqr.errors import InvalidArgument, ResourceLimitError
from cyclopqr.ternary import (
    TernaryTriple,
    classify_classes,
    height,
    max_partial_sum,
    ternary_all_coefficients,
    ternary_coefficient,
    zero_sum_residual,
)

X = sympy.Symbol("x")

# Phi_105 as printed by sympy.cyclotomic_poly(105), ascending
PHI_105 = [1, 1, 1, 0, 0, -1, -1, -2, -1, -1, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, -1, 0, -1, 0, -1,
           0, -1, 0, -1, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, -1, -1, -2, -1, -1, 0, 0, 1, 1, 1]


def sympy_phi(n):
    return [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, X), X).all_coeffs())]


@pytest.fixture(scope="module")
def t357():
    t = TernaryTriple.of(3, 5, 7)
    return t, t.support()


def test_frozen_phi_105_matches_sympy():
    assert sympy_phi(105) == PHI_105


def test_triple_constants():
    t = TernaryTriple.of(3, 5, 7)
    assert (t.q_p_star, t.r_p_star, t.p_q_star, t.q_bar_p, t.phi) == (2, 1, 2, 2, 48)


@pytest.mark.parametrize("args", [(5, 3, 7), (3, 5, 5), (3, 9, 11), (2, 3, 5), (3, 5, 1)])
def test_triple_validation(args):
    with pytest.raises(InvalidArgument):
        TernaryTriple.of(*args)


@pytest.mark.parametrize("i, expected", [(0, 1), (7, -2), (48, 1), (-1, 0), (49, 0)])
def test_single_coefficient(t357, i, expected):
    assert ternary_coefficient(*t357, i) == expected


def test_all_coefficients_105(t357):
    c = ternary_all_coefficients(*t357)
    assert c.tolist() == PHI_105
    assert c.coefficients.dtype == np.int32
    assert c.height() == 2


def test_palindromic_cross_check(t357):
    c = ternary_all_coefficients(*t357).tolist()
    assert c == c[::-1]


def test_mismatched_support(t357):
    t, _ = t357
    with pytest.raises(InvalidArgument):
        ternary_coefficient(t, lam_leung_support(3, 7), 0)


@pytest.mark.parametrize("triple", [(3, 5, 11), (5, 7, 11), (3, 7, 11), (5, 11, 13), (7, 11, 13),
                                    (3, 5, 101), (11, 13, 17), (13, 19, 23)])
def test_all_coefficients_match_sympy(triple):
    t = TernaryTriple.of(*triple)
    assert ternary_all_coefficients(t, t.support()).tolist() == sympy_phi(t.n)


@pytest.mark.parametrize("triple", [(3, 5, 7), (3, 5, 11), (5, 7, 11), (3, 11, 13), (7, 11, 17)])
def test_fast_path_equals_reference(triple):
    t = TernaryTriple.of(*triple)
    s = t.support()
    fast = ternary_all_coefficients(t, s).tolist()
    assert fast == [ternary_coefficient(t, s, i) for i in range(t.phi + 1)]


def test_height_reports(t357):
    rep = height(*t357, with_partial_sums=True)
    assert (rep.height, rep.witness_exponent) == (2, 7)
    assert rep.partial_sum_max >= 2
    t = TernaryTriple.of(3, 5, 11)
    assert height(t, t.support()).height <= 2
    t = TernaryTriple.of(5, 7, 11)
    assert height(t, t.support()).height <= 3


def test_resource_cap(t357, monkeypatch):
    with pytest.raises(ResourceLimitError):
        ternary_all_coefficients(*t357, max_degree=47)
    monkeypatch.setenv("CYCLO_MAX_DEGREE", "10")
    with pytest.raises(ResourceLimitError):
        ternary_all_coefficients(*t357)


def test_zero_sum_residual_exhaustive(t357):
    assert all(zero_sum_residual(*t357, i) == 0 for i in range(-30, 60))


@settings(max_examples=100)
@given(st.integers(-10**9, 10**9))
def test_zero_sum_residual_random(i):
    t = TernaryTriple.of(5, 7, 11)
    assert zero_sum_residual(t, t.support(), i) == 0


def _partial_sum_brute(t, s):
    # direct double loop over residues and every integer cut point
    best = 0
    pairs = list(zip(s.exponents.tolist(), s.signs.tolist()))
    ctx = t.chi_context()
    from cyclopqr.chi import chi
    for i in range(t.p * t.q):
        for j in range(-1, s.degree + 2):
            total = sum(d * chi(ctx, m * t.r, i) for m, d in pairs if m >= j)
            best = max(best, abs(total))
    return best


@pytest.mark.parametrize("triple", [(3, 5, 7), (3, 7, 11), (5, 7, 11)])
def test_max_partial_sum_against_brute_force(triple):
    t = TernaryTriple.of(*triple)
    s = t.support()
    assert max_partial_sum(t, s) == _partial_sum_brute(t, s)
    assert max_partial_sum(t, s) >= height(t, s).height


def test_classes_below_support(t357):
    part = classify_classes(*t357, i=7, j=-1)
    assert not part.special
    assert len(part.plain) + len(part.null_) == 3


def test_class_partition_is_exhaustive(t357):
    t, s = t357
    for i in range(t.p * t.q):
        for j in range(-1, 10):
            part = classify_classes(t, s, i, j)
            assert part.special | part.plain | part.null_ == {0, 1, 2}
            assert len(part.special) + len(part.plain) + len(part.null_) == 3


def test_class_witnesses_respect_definition(t357):
    t, s = t357
    part = classify_classes(t, s, i=7, j=4)
    for v, w in part.witnesses.items():
        for _, m in w["upper"]:
            assert m >= 4
        for _, m in w["lower"]:
            assert m < 4
        assert (v in part.special) == bool(w["upper"] and w["lower"])


def test_special_class_exists_somewhere():
    t = TernaryTriple.of(7, 11, 13)
    s = t.support()
    found = any(classify_classes(t, s, i, j).special
                for i in range(0, t.p * t.q, 3) for j in range(0, s.degree, 5))
    assert found
