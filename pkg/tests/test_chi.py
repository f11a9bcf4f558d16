import itertools

import pytest
from hypothesis import given, strategies as st

from cyclopqr.chi import ChiContext, chi, chi_array, chi_windows
from cyclopqr.errors import InvalidArgument
from cyclopqr.ternary import TernaryTriple, shift_relation_holds

CTX = ChiContext(3, 5)


@pytest.mark.parametrize("n, i, expected", [(0, 6, 1), (0, 1, -1), (0, 10, 0), (0, 5, 1), (0, 4, 0)])
def test_chi_examples(n, i, expected):
    assert chi(CTX, n, i) == expected


def test_windows_3_5():
    plus, minus = chi_windows(CTX, 0)
    assert plus.residues() == {5, 6, 7}
    assert minus.residues() == {0, 1, 2}
    _, minus13 = chi_windows(CTX, 13)
    assert 0 in minus13
    assert minus13.residues() == {13, 14, 0}


@pytest.mark.parametrize("p, q", [(3, 5), (3, 7), (5, 7), (7, 11)])
def test_windows_agree_with_case_table_exhaustively(p, q):
    ctx = ChiContext(p, q)
    for n in range(ctx.pq):
        plus, minus = chi_windows(ctx, n)
        assert len(plus.residues()) == len(minus.residues()) == p
        assert not plus.residues() & minus.residues()
        for i in range(ctx.pq):
            ref = chi(ctx, n, i)
            assert ref == (1 if i in plus else -1 if i in minus else 0)
            assert ref == int(chi_array(ctx, n, i))


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), st.integers(-50, 50), st.integers(-50, 50))
def test_periodicity(n, i, a, b):
    ctx = ChiContext(5, 7)
    assert chi(ctx, n + a * ctx.pq, i + b * ctx.pq) == chi(ctx, n, i)


def test_shift_relation_exhaustive_3_5_7():
    t = TernaryTriple.of(3, 5, 7)
    pq = t.p * t.q
    for m, i in itertools.product(range(-2 * pq, 2 * pq), range(pq)):
        assert shift_relation_holds(t, m, i)


@given(st.sampled_from([(5, 7, 11), (7, 11, 13), (11, 13, 101), (3, 17, 19)]),
       st.integers(-10**4, 10**4), st.integers(-10**4, 10**4))
def test_shift_relation_random(triple, m, i):
    assert shift_relation_holds(TernaryTriple.of(*triple), m, i)


def test_context_validation():
    with pytest.raises(InvalidArgument):
        ChiContext(5, 3)
    with pytest.raises(InvalidArgument):
        ChiContext(3, 5, r_p_star=3)
    assert ChiContext.for_triple(3, 5, 7).r_p_star == 1
