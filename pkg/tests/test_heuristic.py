import math
from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from covering2d.errors import DomainError, FactorizationError
from covering2d.heuristic import (
    KappaEstimate,
    PredictionReport,
    eligible_count,
    expected_pair_count,
    first_guess,
    kappa,
    predictions,
    prime_power_sequence,
    q_of_k,
    r_of_k,
    render_decimal,
    round_half_up,
)
from covering2d.numtheory import factorize
from covering2d.orders import mult_order

from oracles import kappa_by_cell_gcd


def test_prime_powers():
    assert prime_power_sequence(1) == [2]
    assert prime_power_sequence(7) == [2, 3, 4, 5, 7, 8, 9]
    assert prime_power_sequence(10) == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]
    assert r_of_k(7) == 2520
    with pytest.raises(DomainError):
        prime_power_sequence(0)


def test_q_of_k():
    assert q_of_k(2, 3, 2) == 7
    assert q_of_k(2, 3, 1) == 1
    assert q_of_k(11, 21, 3) % 5 == 0


def test_kappa_two_three():
    est = kappa(2, 3, 2)
    assert est.kappa == Fraction(7, 6) * Fraction(22, 36)
    assert est.eligible_count == 22 and est.r_k == 6 and est.q_k == 7
    assert est.decimal == "0.713"
    assert KappaEstimate.from_json(est.to_json()) == est


# every cell is struck when all covering primes divide q_k
OBSTRUCTED = {(13, 302)}
PAIRS = [(2, 3), (3, 4), (2, 5), (4, 5), (5, 6), (2, 7), (26, 149), (13, 302), (51, 64)]


@pytest.mark.parametrize("a,b", PAIRS)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_kappa_matches_cell_gcd_oracle(a, b, k):
    est = kappa(a, b, k)
    want, count = kappa_by_cell_gcd(a, b, est.r_k, est.q_k)
    assert est.eligible_count == count
    assert est.kappa == want


@pytest.mark.parametrize("a,b", PAIRS)
def test_kappa_invariants(a, b):
    est = kappa(a, b, 4)
    r, q = est.r_k, est.q_k
    assert 0 <= est.eligible_count <= r * r
    ratio = Fraction(q, int(sympy.totient(q)))
    coprime = sum(1 for m in range(1, r + 1) for n in range(1, r + 1) if gcd(m, n, r) == 1)
    assert est.kappa <= ratio * Fraction(coprime, r * r)
    if (a, b) in OBSTRUCTED:
        assert est.kappa == 0
    else:
        assert est.kappa > 0
    for p, _ in est.q_k_factors:
        assert r % mult_order(a, p) == 0 and r % mult_order(b, p) == 0


def test_kappa_reports_unfactorable():
    with pytest.raises(FactorizationError):
        kappa(2, 3, 7, trial_bound=10, rho_budget=1)


def test_kappa_domain():
    with pytest.raises(DomainError):
        kappa(4, 6, 2)


def test_eligible_count_checks_period():
    with pytest.raises(AssertionError):
        eligible_count(2, 3, 4, [7])


def test_rounding():
    assert render_decimal(Fraction(77, 108)) == "0.713"
    assert render_decimal(Fraction(1, 2), 0) == "1"
    assert render_decimal(Fraction(7465, 10000)) == "0.747"
    assert render_decimal(Fraction(-1, 3)) == "-0.333"
    assert round_half_up(Fraction(5, 2)) == 3
    assert round_half_up(423.5) == 424


def test_expected_pair_count():
    assert expected_pair_count(2, 3, 2**100) == pytest.approx(100**2 * math.log(2) / math.log(3))
    assert expected_pair_count(2, 3, 2**100) == pytest.approx(6309.3, abs=0.05)
    assert expected_pair_count(3, 4, 3**100) == pytest.approx(7924.8, abs=0.05)
    assert expected_pair_count(2, 3, 3) >= 1
    with pytest.raises(DomainError):
        expected_pair_count(2, 3, 2)


@pytest.mark.parametrize("a,b,g1", [(2, 3, 546), (3, 4, 433), (2, 5, 311), (4, 5, 311), (5, 6, 419), (2, 7, 240)])
def test_first_guess(a, b, g1):
    assert int(round_half_up(first_guess(a, b))) == g1


def test_predictions():
    rep = predictions(2, 3, 7)
    assert rep.G1_int == 546
    assert abs(rep.G2_int - 424) <= 1
    phi = 2
    assert rep.c_ab == pytest.approx(2 * 6 * float(rep.kappa_k.kappa) / (phi * math.log(2) * math.log(3)))
    assert rep.expected_primes(2**100) == pytest.approx(rep.c_ab * 100 * math.log(2))
    assert PredictionReport.from_json(rep.to_json()) == rep


@given(st.integers(2, 60), st.integers(2, 60), st.integers(1, 3))
def test_kappa_oracle_random(a, b, k):
    if a == b or gcd(a, b) != 1:
        return
    est = kappa(a, b, k)
    want, _ = kappa_by_cell_gcd(a, b, est.r_k, est.q_k)
    assert est.kappa == want
    assert est.q_k_factors == tuple(factorize(est.q_k).items())
