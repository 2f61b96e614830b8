import math
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from covering2d.census import (
    CensusReport,
    bounds_explicit,
    bounds_p100,
    bounds_pi,
    bounds_pi100,
    bucket_counts,
    census,
    pi_100,
    pi_ab,
)
from covering2d.errors import DomainError

from oracles import isprime


def brute(a, b, m_max, n_max):
    return [(m, n) for m in range(1, m_max + 1) for n in range(1, n_max + 1) if isprime(abs(a**m - b**n))]


def test_empty_range():
    assert pi_ab(2, 3, 0).count == 0
    assert census(2, 3, bounds_explicit(0, 5)).count == 0


def test_bounds():
    b = bounds_pi(2, 3, 100)
    assert (b.m_max, b.n_max) == (100, 63)
    assert 3**63 <= 2**100 < 3**64
    b = bounds_pi100(29, 34)
    d = 28 * 16 / (29 * 34) if False else None
    phi = 28 * 16
    assert b.m_max == math.floor(100 * phi / (29 * 34) * math.log(34))
    assert b.n_max == math.floor(100 * phi / (29 * 34) * math.log(29))
    b = bounds_p100(26, 149, 0.0847)
    assert b.m_max * math.log(26) <= b.params["log_X"] < (b.m_max + 1) * math.log(26)
    with pytest.raises(DomainError):
        bounds_pi100(34, 29)
    with pytest.raises(DomainError):
        bounds_p100(2, 3, 0)
    with pytest.raises(DomainError):
        bounds_explicit(-1, 3)


@pytest.mark.parametrize("a,b,y", [(2, 3, 40), (3, 4, 30), (2, 5, 35), (5, 6, 20), (2, 7, 30)])
def test_census_matches_brute_force(a, b, y):
    bounds = bounds_pi(a, b, y)
    report = census(a, b, bounds)
    assert [(h.m, h.n) for h in report.hits] == brute(a, b, bounds.m_max, bounds.n_max)


@settings(max_examples=40)
@given(st.integers(2, 40), st.integers(2, 40), st.integers(1, 25), st.integers(1, 25))
def test_census_random_rectangles(a, b, m_max, n_max):
    report = census(a, b, bounds_explicit(m_max, n_max))
    assert [(h.m, h.n) for h in report.hits] == brute(a, b, m_max, n_max)
    for h in report.hits:
        value = abs(a**h.m - b**h.n)
        assert isprime(value) and value.bit_length() == h.bits
        assert h.sign == (1 if a**h.m > b**h.n else -1)


@settings(max_examples=30)
@given(st.integers(2, 30), st.integers(2, 30), st.integers(1, 30), st.integers(1, 30))
def test_hits_coprime_to_ab(a, b, m_max, n_max):
    if gcd(a, b) != 1:
        return
    for h in census(a, b, bounds_explicit(m_max, n_max)).hits:
        assert gcd(abs(a**h.m - b**h.n), a * b) == 1


def test_sieve_keeps_small_prime_values():
    # 34 - 29 = 5 and 3 - 2 = 1, 2^2 - 3 = 1, 2^3 - 3 = 5, 3^2 - 2^3 = 1
    assert [(h.m, h.n) for h in census(29, 34, bounds_explicit(3, 3)).hits] == [(1, 1)]
    for bound in (10, 100, 10_000):
        r = census(2, 3, bounds_pi(2, 3, 60), sieve_bound=bound)
        assert r.count == len(brute(2, 3, 60, 37))


def test_monotone_in_y():
    counts = [pi_ab(2, 5, y).count for y in range(0, 80, 10)]
    assert counts == sorted(counts)


def test_buckets_telescope():
    r = bucket_counts(3, 4, 3, width=20)
    assert sum(r.buckets) == pi_ab(3, 4, 60).count
    assert r.buckets[0] == pi_ab(3, 4, 20).count
    assert r.buckets[1] == pi_ab(3, 4, 40).count - pi_ab(3, 4, 20).count
    with pytest.raises(DomainError):
        bucket_counts(2, 3, 0)


def test_worker_count_does_not_change_report():
    bounds = bounds_pi(2, 3, 80)
    assert census(2, 3, bounds, workers=1) == census(2, 3, bounds, workers=2)


def test_obstructed_pairs_only_hit_covering_primes():
    r = pi_100(29, 34)
    assert [abs(29**h.m - 34**h.n) for h in r.hits] == [5]
    for h in census(41, 34, bounds_explicit(40, 40)).hits:
        assert abs(41**h.m - 34**h.n) in (3, 5, 7)


def test_report_json_round_trip():
    r = bucket_counts(2, 3, 2, width=15)
    assert CensusReport.from_json(r.to_json()) == r
    assert r.distinct_count <= r.count


def test_single_bucket_golden():
    assert bucket_counts(2, 7, 1).buckets == (175,)
