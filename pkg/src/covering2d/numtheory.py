"""Integer plumbing: sieving, probable-prime tests, factorization, roots.

Everything here is exact integer arithmetic. The randomized part
(Pollard-Brent) draws from a seeded ``random.Random`` so factorizations are
reproducible run to run.
"""

from __future__ import annotations

import random
from functools import lru_cache
from math import gcd, isqrt, prod

from .errors import DomainError, FactorizationError

try:
    import gmpy2
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    gmpy2 = None

DEFAULT_TRIAL_BOUND = 10**6
DEFAULT_RHO_BUDGET = 200_000
DEFAULT_SEED = 20240501

_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def primes_up_to(n: int) -> list[int]:
    """Primes p <= n by the sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, n + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


@lru_cache(maxsize=8)
def _small_primes(bound: int) -> tuple[int, ...]:
    return tuple(primes_up_to(bound))


def jacobi(a: int, n: int) -> int:
    if n <= 0 or n % 2 == 0:
        raise DomainError(f"jacobi symbol needs odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_prp(n: int, base: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _strong_lucas_prp(n: int) -> bool:
    """Strong Lucas test with Selfridge's parameter choice (method A)."""
    if isqrt(n) ** 2 == n:
        return False
    D = 5
    while True:
        j = jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4

    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    U, V, Qk = 0, 2, 1
    for bit in bin(d)[2:]:
        U = U * V % n
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = P * U + V, D * U + P * V
            if U & 1:
                U += n
            U = (U // 2) % n
            if V & 1:
                V += n
            V = (V // 2) % n
            Qk = Qk * Q % n

    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_probable_prime(n: int) -> bool:
    """Primality test, exact below 2**64 and BPSW above.

    Below 2**64 the Miller-Rabin bases 2..37 are a proven deterministic set.
    Above, a number is accepted when it passes a strong base-2 test and a
    strong Lucas test; no counterexample to that combination is known.
    """
    if n < 2:
        return False
    for p in _MR_BASES_64:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    if n < 1 << 64:
        return all(_strong_prp(n, b) for b in _MR_BASES_64)
    return _strong_prp(n, 2) and _strong_lucas_prp(n)


def fast_is_probable_prime(n: int) -> bool:
    """Same policy as is_probable_prime (BPSW), through GMP when available."""
    if gmpy2 is None:  # pragma: no cover
        return is_probable_prime(n)
    if n < 2:
        return False
    return bool(gmpy2.is_strong_bpsw_prp(gmpy2.mpz(n)))


def _brent(n: int, rng: random.Random, budget: int) -> int | None:
    """One nontrivial factor of composite odd n, or None if the budget runs out."""
    steps = 0
    while steps < budget:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1 and steps < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            steps += r
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def factorize(
    n: int,
    *,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    rho_budget: int = DEFAULT_RHO_BUDGET,
    seed: int = DEFAULT_SEED,
) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}.

    Trial division by primes up to ``trial_bound``, then Pollard-Brent on what
    is left. A cofactor that resists ``rho_budget`` iterations raises
    FactorizationError; nothing is guessed.
    """
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out: dict[int, int] = {}
    for p in _small_primes(trial_bound):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    if n == 1:
        return out
    rng = random.Random(seed)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        root, k = perfect_power(m)
        if k > 1:
            stack.extend([root] * k)
            continue
        f = _brent(m, rng, rho_budget)
        if f is None:
            raise FactorizationError(m)
        stack.extend([f, m // f])
    return dict(sorted(out.items()))


def totient_from_factors(factors: dict[int, int]) -> int:
    return prod((p - 1) * p ** (e - 1) for p, e in factors.items())


def totient(n: int) -> int:
    return totient_from_factors(factorize(n))


def carmichael_from_factors(factors: dict[int, int]) -> int:
    lam = 1
    for p, e in factors.items():
        if p == 2 and e >= 3:
            part = 2 ** (e - 2)
        else:
            part = (p - 1) * p ** (e - 1)
        lam = lam * part // gcd(lam, part)
    return lam


def iroot(x: int, k: int) -> int:
    """floor(x ** (1/k)) for x >= 0, exactly."""
    if x < 0 or k < 1:
        raise DomainError(f"iroot({x}, {k}) undefined")
    if x < 2 or k == 1:
        return x
    if k == 2:
        return isqrt(x)
    y = 1 << -(-x.bit_length() // k)
    while True:
        z = ((k - 1) * y + x // y ** (k - 1)) // k
        if z >= y:
            return y
        y = z


def perfect_power(x: int) -> tuple[int, int]:
    """(A, k) with x == A**k and k maximal; (x, 1) when x is not a perfect power."""
    if x < 2:
        raise DomainError(f"perfect_power needs x >= 2, got {x}")
    for k in range(x.bit_length(), 1, -1):
        root = iroot(x, k)
        if root > 1 and root**k == x:
            return root, k
    return x, 1


def crt(residues: list[int], moduli: list[int]) -> tuple[int, int]:
    """Least nonnegative x with x = r_i mod m_i for pairwise coprime m_i; returns (x, M)."""
    x, M = 0, 1
    for r, m in zip(residues, moduli):
        if gcd(M, m) != 1:
            raise DomainError(f"moduli not coprime: {M} and {m}")
        # x + M*t = r (mod m)
        t = (r - x) * pow(M, -1, m) % m
        x += M * t
        M *= m
    return x % M, M
