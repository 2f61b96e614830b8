"""Prime censuses of |a^m - b^n| over rectangles of exponent pairs.

Pairs (m, n) are counted, not distinct prime values. Candidate cells are first
sieved: for each small prime p not dividing ab, the cells where p divides
a^m - b^n form the solution lattice of p's triple and are struck out, except
cells whose value might be p itself. Survivors are built from running powers
and tested with BPSW.
"""

from __future__ import annotations

import hashlib
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from .errors import DomainError
from .numtheory import fast_is_probable_prime, is_probable_prime, primes_up_to, totient
from .orders import triple_for_prime

__all__ = [
    "CensusBounds", "CensusReport", "Hit", "bounds_explicit", "bounds_p100", "bounds_pi",
    "bounds_pi100", "bucket_counts", "census", "is_probable_prime", "p_100", "pi_100", "pi_ab",
]

DEFAULT_SIEVE_BOUND = 10_000


@dataclass(frozen=True)
class CensusBounds:
    mode: str  # "pi", "pi100", "p100" or "explicit"
    m_max: int
    n_max: int
    params: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {"mode": self.mode, "m_max": self.m_max, "n_max": self.n_max, "params": self.params}

    @classmethod
    def from_json(cls, data: dict) -> "CensusBounds":
        return cls(data["mode"], data["m_max"], data["n_max"], dict(data["params"]))


@dataclass(frozen=True)
class Hit:
    m: int
    n: int
    sign: int  # +1 when a^m > b^n
    bits: int
    digest: str

    def to_json(self) -> list:
        return [self.m, self.n, self.sign, self.bits, self.digest]

    @classmethod
    def from_json(cls, data: list) -> "Hit":
        return cls(*data)


@dataclass(frozen=True)
class CensusReport:
    a: int
    b: int
    bounds: CensusBounds
    pairs_examined: int
    hits: tuple[Hit, ...]
    candidates_tested: int
    buckets: tuple[int, ...] | None = None

    @property
    def count(self) -> int:
        return len(self.hits)

    @property
    def distinct_count(self) -> int:
        return len({h.digest for h in self.hits})

    def to_json(self) -> dict:
        out = {
            "a": self.a, "b": self.b, "bounds": self.bounds.to_json(),
            "pairs_examined": self.pairs_examined, "count": self.count,
            "distinct_count": self.distinct_count, "candidates_tested": self.candidates_tested,
            "hits": [h.to_json() for h in self.hits],
        }
        if self.buckets is not None:
            out["buckets"] = list(self.buckets)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "CensusReport":
        buckets = data.get("buckets")
        return cls(data["a"], data["b"], CensusBounds.from_json(data["bounds"]), data["pairs_examined"],
                   tuple(Hit.from_json(h) for h in data["hits"]), data["candidates_tested"],
                   tuple(buckets) if buckets is not None else None)


def _density(a: int, b: int) -> float:
    return totient(a * b) / (a * b)


def _max_exponent(base: int, cap: int) -> int:
    """Largest n >= 0 with base**n <= cap."""
    n, x = 0, base
    while x <= cap:
        x *= base
        n += 1
    return n


def bounds_pi(a: int, b: int, y: int) -> CensusBounds:
    """m, n >= 1 with a^m, b^n <= a^y."""
    if a < 2 or b < 2:
        raise DomainError(f"need a, b >= 2, got a={a}, b={b}")
    if y <= 0:
        return CensusBounds("pi", 0, 0, {"y": y})
    return CensusBounds("pi", y, _max_exponent(b, a**y), {"y": y})


def bounds_pi100(a: int, b: int) -> CensusBounds:
    """m <= 100 M, n <= 100 N with M = (phi(ab)/ab) log b, N = (phi(ab)/ab) log a."""
    if not b > a >= 2:
        raise DomainError(f"need b > a >= 2, got a={a}, b={b}")
    d = _density(a, b)
    M, N = d * math.log(b), d * math.log(a)
    return CensusBounds("pi100", math.floor(100 * M), math.floor(100 * N), {"M": M, "N": N})


def bounds_p100(a: int, b: int, kappa7: Fraction | float) -> CensusBounds:
    """a^m, b^n <= X where 2ab kappa log X / (phi(ab) log a log b) = 100."""
    if not b > a >= 2:
        raise DomainError(f"need b > a >= 2, got a={a}, b={b}")
    kap = float(kappa7)
    if kap <= 0:
        raise DomainError(f"kappa must be positive, got {kappa7}")
    d = _density(a, b)
    log_x = 100 * d * math.log(a) * math.log(b) / (2 * kap)
    return CensusBounds(
        "p100", math.floor(log_x / math.log(a)), math.floor(log_x / math.log(b)),
        {"kappa7": str(Fraction(kappa7)) if isinstance(kappa7, Fraction) else kap, "log_X": log_x},
    )


def bounds_explicit(m_max: int, n_max: int) -> CensusBounds:
    if m_max < 0 or n_max < 0:
        raise DomainError("bounds must be nonnegative")
    return CensusBounds("explicit", m_max, n_max)


def sieve_mask(a: int, b: int, m_max: int, n_max: int, sieve_bound: int = DEFAULT_SIEVE_BOUND) -> np.ndarray:
    """Boolean (m_max+1) x (n_max+1) array, True where some prime p <= sieve_bound divides a^m - b^n.

    Row/column 0 are unused padding so indices equal exponents.
    """
    hit = np.zeros((m_max + 1, n_max + 1), dtype=bool)
    if m_max == 0 or n_max == 0:
        return hit
    for p in primes_up_to(sieve_bound):
        if (a * b) % p == 0:
            continue
        t = triple_for_prime(p, a, b).triple
        u, s = t.u, t.r // t.u
        if u > m_max:
            continue
        M = np.arange(1, m_max // u + 1)
        rows = M * u
        n0 = (M * t.v - 1) % s + 1
        for off in range(0, n_max, s):
            cols = n0 + off
            keep = cols <= n_max
            hit[rows[keep], cols[keep]] = True
    return hit


def small_value_mask(a: int, b: int, m_max: int, n_max: int, cap: int) -> np.ndarray:
    """Cells where |a^m - b^n| might be <= cap, judged in log space with a wide margin."""
    la, lb = math.log(a), math.log(b)
    lm = np.arange(m_max + 1) * la
    ln_ = np.arange(n_max + 1) * lb
    hi = np.maximum(lm[:, None], ln_[None, :])
    d = np.abs(lm[:, None] - ln_[None, :])
    with np.errstate(divide="ignore"):
        est = hi + np.log1p(-np.exp(-d))
    return (est < math.log(cap) + 2) | (d < 1e-6)


def _value_digest(x: int) -> str:
    return hashlib.blake2b(x.to_bytes((x.bit_length() + 7) // 8 or 1, "big"), digest_size=8).hexdigest()


def _test_rows(a: int, b: int, rows: list[tuple[int, list[int]]], n_max: int) -> list[Hit]:
    bpow = [1] * (n_max + 1)
    for n in range(1, n_max + 1):
        bpow[n] = bpow[n - 1] * b
    hits = []
    for m, ns in rows:
        am = a**m
        for n in ns:
            val = am - bpow[n]
            if val == 0:
                continue
            mag = abs(val)
            if fast_is_probable_prime(mag):
                hits.append(Hit(m, n, 1 if val > 0 else -1, mag.bit_length(), _value_digest(mag)))
    return hits


def census(
    a: int,
    b: int,
    bounds: CensusBounds,
    *,
    sieve_bound: int = DEFAULT_SIEVE_BOUND,
    workers: int = 1,
) -> CensusReport:
    """Count (m, n) in [1, m_max] x [1, n_max] with |a^m - b^n| a probable prime."""
    if a < 2 or b < 2:
        raise DomainError(f"need a, b >= 2, got a={a}, b={b}")
    M, N = bounds.m_max, bounds.n_max
    if M == 0 or N == 0:
        return CensusReport(a, b, bounds, 0, (), 0)
    struck = sieve_mask(a, b, M, N, sieve_bound) if gcd(a, b) == 1 else np.zeros((M + 1, N + 1), bool)
    test = ~struck | small_value_mask(a, b, M, N, sieve_bound)
    test[0, :] = False
    test[:, 0] = False
    rows = [(m, np.flatnonzero(test[m]).tolist()) for m in range(1, M + 1)]
    rows = [(m, ns) for m, ns in rows if ns]
    tested = sum(len(ns) for _, ns in rows)
    if workers > 1 and len(rows) > 1:
        chunks = [rows[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            parts = pool.map(_test_rows, [a] * workers, [b] * workers, chunks, [N] * workers)
            hits = [h for part in parts for h in part]
    else:
        hits = _test_rows(a, b, rows, N)
    hits.sort(key=lambda h: (h.m, h.n))
    return CensusReport(a, b, bounds, M * N, tuple(hits), tested)


def pi_ab(a: int, b: int, y: int, **opts) -> CensusReport:
    return census(a, b, bounds_pi(a, b, y), **opts)


def _min_y_for(a: int, b: int, m: int, n: int) -> int:
    """Least y with a^m <= a^y and b^n <= a^y."""
    bn = b**n
    y = max(m, math.floor(n * math.log(b) / math.log(a)) - 1, 1)
    while a**y < bn:
        y += 1
    while y > m and a ** (y - 1) >= bn:
        y -= 1
    return y


def bucket_counts(a: int, b: int, kmax: int, width: int = 100, **opts) -> CensusReport:
    """One census up to y = width*kmax, split into N_k = pi(width*k) - pi(width*(k-1))."""
    if kmax < 1:
        raise DomainError(f"kmax must be >= 1, got {kmax}")
    report = pi_ab(a, b, width * kmax, **opts)
    buckets = [0] * kmax
    for h in report.hits:
        y = _min_y_for(a, b, h.m, h.n)
        buckets[(y - 1) // width] += 1
    return CensusReport(a, b, report.bounds, report.pairs_examined, report.hits,
                        report.candidates_tested, tuple(buckets))


def pi_100(a: int, b: int, **opts) -> CensusReport:
    return census(a, b, bounds_pi100(a, b), **opts)


def p_100(a: int, b: int, kappa7: Fraction | float, **opts) -> CensusReport:
    return census(a, b, bounds_p100(a, b, kappa7), **opts)
