import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from covering2d.errors import DomainError, FactorizationError
from covering2d.numtheory import (
    carmichael_from_factors,
    crt,
    factorize,
    fast_is_probable_prime,
    iroot,
    is_probable_prime,
    jacobi,
    perfect_power,
    primes_up_to,
    totient,
)


def test_primes_up_to():
    assert primes_up_to(1) == []
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_up_to(10**5) == list(sympy.primerange(2, 10**5 + 1))


def test_is_probable_prime_examples():
    assert is_probable_prime(13)
    assert not is_probable_prime(1)
    assert not is_probable_prime(0)
    assert is_probable_prime(2**64 - 59)
    assert not is_probable_prime(2**64 - 57)
    assert is_probable_prime(2**127 - 1)
    assert not is_probable_prime((2**61 - 1) * (2**89 - 1))


def test_strong_pseudoprimes_rejected():
    # base-2 strong pseudoprimes and a Carmichael number
    for n in (2047, 3277, 4033, 561, 3215031751, 3825123056546413051):
        assert not is_probable_prime(n)
    # 2^64 region: product of two primes near 2^40
    n = sympy.nextprime(2**40) * sympy.nextprime(2**41)
    assert not is_probable_prime(n)


@given(st.integers(0, 10**7))
def test_primality_matches_sympy_small(n):
    assert is_probable_prime(n) == sympy.isprime(n) == fast_is_probable_prime(n)


@given(st.integers(2**64, 2**200))
def test_primality_matches_sympy_large(n):
    assert is_probable_prime(n) == sympy.isprime(n) == fast_is_probable_prime(n)


def test_jacobi():
    for n in range(1, 60, 2):
        for a in range(-20, 20):
            assert jacobi(a, n) == sympy.jacobi_symbol(a % n, n)
    with pytest.raises(DomainError):
        jacobi(3, 4)


@given(st.integers(1, 10**15))
def test_factorize_matches_sympy(n):
    f = factorize(n)
    assert f == dict(sorted(sympy.factorint(n).items()))


def test_factorize_uses_rho_beyond_trial_range():
    p, q = 1_000_003, 998_244_353
    assert factorize(p * q * 12, trial_bound=100) == {2: 2, 3: 1, p: 1, q: 1}
    assert factorize(p**3, trial_bound=100) == {p: 3}


def test_factorize_budget():
    p, q = sympy.nextprime(10**15), sympy.nextprime(3 * 10**15)
    with pytest.raises(FactorizationError) as err:
        factorize(p * q, trial_bound=10, rho_budget=5)
    assert err.value.cofactor == p * q


def test_totient_and_carmichael():
    assert totient(1) == 1
    assert totient(36) == 12
    for n in range(2, 500):
        f = factorize(n)
        assert carmichael_from_factors(f) == sympy.reduced_totient(n)


@given(st.integers(0, 10**40), st.integers(1, 12))
def test_iroot(x, k):
    y = iroot(x, k)
    assert y**k <= x < (y + 1) ** k


@given(st.integers(2, 10**6), st.integers(1, 9))
def test_perfect_power(base, k):
    A, e = perfect_power(base**k)
    assert A**e == base**k and e >= k and e % k == 0


def test_perfect_power_rejects_small():
    with pytest.raises(DomainError):
        perfect_power(1)


@given(st.lists(st.tuples(st.integers(0, 10**6), st.sampled_from([3, 5, 7, 11, 13, 16, 17, 19, 23])),
                min_size=1, max_size=5, unique_by=lambda t: t[1]))
def test_crt(pairs):
    residues, moduli = zip(*pairs)
    x, M = crt(list(residues), list(moduli))
    assert 0 <= x < M
    assert all(x % m == r % m for r, m in pairs)


def test_crt_needs_coprime():
    with pytest.raises(DomainError):
        crt([1, 2], [4, 6])
