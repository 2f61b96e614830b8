from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from covering2d.errors import DomainError
from covering2d.lattice import ReducedTriple, Triple, equivalent, member, reduce, reduced_triples

from oracles import s_set


@st.composite
def triples(draw, rmax=40):
    r = draw(st.integers(1, rmax))
    return Triple(draw(st.integers(-3 * r, 3 * r)), draw(st.integers(-3 * r, 3 * r)), r)


def test_reduce_examples():
    assert reduce(Triple(1, 0, 2)) == ReducedTriple(1, 2, 2)
    assert reduce(Triple(2, 4, 8)) == ReducedTriple(1, 2, 4)
    assert reduce(Triple(0, 0, 5)) == ReducedTriple(1, 1, 1)


def test_reduce_preserves_sets_exhaustively():
    for r in range(1, 13):
        for u in range(r):
            for v in range(r):
                t = reduce(Triple(u, v, r))
                assert s_set(u, v, r, 3 * r) == s_set(t.u, t.v, t.r, 3 * r), (u, v, r, t)


def test_canonical_forms_are_distinct_sets():
    for r in range(1, 11):
        sets = [frozenset(s_set(t.u, t.v, t.r, 2 * r)) for t in reduced_triples(r)]
        assert len(sets) == len(set(sets))


def test_sets_without_short_form_exist():
    # v must exceed r/u here: no triple with v <= r/u describes this set
    t = reduce(Triple(4, 1, 6))
    assert t == ReducedTriple(2, 5, 6)
    assert not t.short
    target = s_set(4, 1, 6, 18)
    for u in (1, 2, 3, 6):
        for v in range(1, 6 // u + 1):
            if gcd(u, v) == 1:
                assert s_set(u, v, 6, 18) != target


def test_reduced_triple_rejects_noncanonical():
    for bad in [(2, 4, 8), (3, 1, 4), (1, 3, 2), (0, 1, 1)]:
        with pytest.raises(DomainError):
            ReducedTriple(*bad)


def test_modulus_must_be_positive():
    with pytest.raises(DomainError):
        Triple(1, 1, 0)


def test_parse_and_json_round_trip():
    t = Triple.parse(" 3, 1,4")
    assert t == Triple(3, 1, 4) and str(t) == "3,1,4"
    assert Triple.from_json(t.to_json()) == t
    with pytest.raises(DomainError):
        Triple.parse("1,2")


@given(triples())
def test_reduce_idempotent(t):
    once = reduce(t)
    assert reduce(once) == once


@given(triples(rmax=20))
def test_reduce_membership(t):
    red = reduce(t)
    assert equivalent(t, red)
    box = 2 * t.r
    assert s_set(t.u, t.v, t.r, box) == s_set(red.u, red.v, red.r, box)


@given(triples(), st.integers(-200, 200), st.integers(-200, 200))
def test_member_is_periodic(t, m, n):
    assert member(t, m, n) == member(t, m + t.r, n) == member(t, m, n - t.r)


@given(triples(), st.integers(1, 5))
def test_scaling_is_equivalent(t, k):
    assert equivalent(t, Triple(k * t.u, k * t.v, k * t.r))
