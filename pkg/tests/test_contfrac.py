from math import gcd

import pytest
from hypothesis import given, strategies as st

from plumbkit.contfrac import LensSpace, evaluate, expand, parse_fraction, parse_lens_list


@pytest.mark.parametrize(
    "p,q,chain",
    [(9, 2, (5, 2)), (64, 23, (3, 5, 3, 2)), (2, 1, (2,)), (4, 3, (2, 2, 2)), (55, 21, (3, 3, 3, 3))],
)
def test_expand_and_evaluate(p, q, chain):
    assert expand(p, q) == chain
    assert evaluate(chain) == (p, q)


def test_round_trip_exhaustive():
    for p in range(2, 2001):
        for q in range(1, p):
            if gcd(p, q) == 1:
                c = expand(p, q)
                assert min(c) >= 2
                assert evaluate(c) == (p, q)


def test_reversal_gives_inverse_residue():
    for p in range(2, 300):
        for q in range(1, p):
            if gcd(p, q) == 1:
                L = LensSpace(p, q)
                assert evaluate(expand(p, q)[::-1]) == (p, L.qbar)


@given(st.integers(2, 10**30).flatmap(lambda p: st.tuples(st.just(p), st.integers(1, p - 1))))
def test_round_trip_big(pq):
    p, q = pq
    if gcd(p, q) == 1:
        assert evaluate(expand(p, q)) == (p, q)


@pytest.mark.parametrize("p,q", [(4, 2), (3, 3), (3, 0), (1, 1)])
def test_invalid_lens(p, q):
    with pytest.raises(ValueError):
        LensSpace(p, q)


def test_evaluate_rejects_ones():
    with pytest.raises(ValueError):
        evaluate([3, 1, 2])
    with pytest.raises(ValueError):
        evaluate([])


def test_parsing():
    assert parse_fraction(" 9/2 ") == LensSpace(9, 2)
    assert parse_lens_list("4/1,4/1") == [LensSpace(4, 1)] * 2
    assert LensSpace(9, 2).reversed == LensSpace(9, 7)
    for bad in ["9", "9/x", "9/2/1"]:
        with pytest.raises(ValueError):
            parse_fraction(bad)
