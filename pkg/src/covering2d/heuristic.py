"""Local-density constant kappa_{a,b}(k) and the predicted prime counts built from it."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

import numpy as np

from .covering import triple_pattern
from .errors import DomainError
from .numtheory import (
    DEFAULT_RHO_BUDGET,
    DEFAULT_SEED,
    DEFAULT_TRIAL_BOUND,
    factorize,
    is_probable_prime,
    perfect_power,
    totient,
    totient_from_factors,
)
from .orders import triple_for_prime

# cells per stripe when counting on the r_k x r_k grid
_STRIPE_CELLS = 1 << 23


def round_half_up(x: Fraction | float, places: int = 0) -> Fraction:
    q = Fraction(x) * 10**places
    return Fraction(math.floor(q + Fraction(1, 2)), 10**places)


def render_decimal(x: Fraction | float, places: int = 3) -> str:
    """Fixed-point rendering with half-up rounding, e.g. 0.7129... -> '0.713'."""
    scaled = math.floor(Fraction(x) * 10**places + Fraction(1, 2))
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**places)
    return f"{sign}{whole}.{frac:0{places}d}" if places else f"{sign}{whole}"


def is_prime_power(x: int) -> bool:
    return x >= 2 and is_probable_prime(perfect_power(x)[0])


def prime_power_sequence(k: int) -> list[int]:
    """The k smallest prime powers: 2, 3, 4, 5, 7, 8, 9, 11, ..."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    out, x = [], 2
    while len(out) < k:
        if is_prime_power(x):
            out.append(x)
        x += 1
    return out


def r_of_k(k: int) -> int:
    return lcm(*prime_power_sequence(k))


def q_of_k(a: int, b: int, k: int) -> int:
    r = r_of_k(k)
    return gcd(a**r - 1, b**r - 1)


@dataclass(frozen=True)
class KappaEstimate:
    a: int
    b: int
    k: int
    prime_powers: tuple[int, ...]
    r_k: int
    q_k: int
    q_k_factors: tuple[tuple[int, int], ...]
    eligible_count: int
    kappa: Fraction

    @property
    def decimal(self) -> str:
        return render_decimal(self.kappa, 3)

    def to_json(self) -> dict:
        return {
            "a": self.a, "b": self.b, "k": self.k,
            "prime_powers": list(self.prime_powers), "r_k": self.r_k,
            "q_k": str(self.q_k), "q_k_factors": [list(pe) for pe in self.q_k_factors],
            "eligible_count": self.eligible_count,
            "kappa": f"{self.kappa.numerator}/{self.kappa.denominator}",
            "kappa_decimal": self.decimal,
        }

    @classmethod
    def from_json(cls, data: dict) -> "KappaEstimate":
        return cls(
            data["a"], data["b"], data["k"], tuple(data["prime_powers"]), data["r_k"],
            int(data["q_k"]), tuple(tuple(pe) for pe in data["q_k_factors"]),
            data["eligible_count"], Fraction(data["kappa"]),
        )


def eligible_count(a: int, b: int, r: int, primes) -> int:
    """#{(m, n) in [1, r]^2 : no listed prime divides a^m - b^n, and gcd(m, n, r) = 1}.

    Each prime contributes its solution lattice; lattices and the gcd condition
    are r-periodic, so residues 0..r-1 stand in for 1..r. Rows are processed
    in stripes to bound memory.
    """
    patterns = []
    for p in primes:
        local = triple_for_prime(p, a, b)
        if r % local.ord_a or r % local.ord_b:
            raise AssertionError(f"ord_{p}({a}) or ord_{p}({b}) does not divide {r}")
        patterns.append(triple_pattern(local.triple))
    idx = np.arange(r)
    g_col = np.gcd(idx, r)
    stripe = max(1, _STRIPE_CELLS // r)
    total = 0
    for start in range(0, r, stripe):
        rows = idx[start:start + stripe]
        ok = np.gcd(np.gcd(rows, r)[:, None], g_col[None, :]) == 1
        for pat in patterns:
            t = pat.shape[0]
            ok &= ~pat[np.ix_(rows % t, idx % t)]
        total += int(ok.sum())
    return total


def kappa(
    a: int,
    b: int,
    k: int,
    *,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    rho_budget: int = DEFAULT_RHO_BUDGET,
    seed: int = DEFAULT_SEED,
) -> KappaEstimate:
    """Exact kappa_{a,b}(k) = q/phi(q) * eligible / r^2 with r = r_k, q = q_k.

    Raises FactorizationError when q_k cannot be fully factored; phi(q_k) is
    never approximated.
    """
    if a < 2 or b < 2 or gcd(a, b) != 1:
        raise DomainError(f"need coprime a, b >= 2, got a={a}, b={b}")
    pps = prime_power_sequence(k)
    r = lcm(*pps)
    q = gcd(a**r - 1, b**r - 1)
    factors = factorize(q, trial_bound=trial_bound, rho_budget=rho_budget, seed=seed)
    count = eligible_count(a, b, r, factors)
    value = Fraction(q, totient_from_factors(factors)) * Fraction(count, r * r)
    return KappaEstimate(a, b, k, tuple(pps), r, q, tuple(factors.items()), count, value)


def expected_pair_count(a: int, b: int, x: int | float) -> float:
    """Main term (log x)^2 / (log a log b) for #{m, n >= 1 : |a^m - b^n| <= x}."""
    if x < max(a, b):
        raise DomainError(f"x must be >= max(a, b) = {max(a, b)}")
    return math.log(x) ** 2 / (math.log(a) * math.log(b))


@dataclass(frozen=True)
class PredictionReport:
    a: int
    b: int
    G1: float
    kappa_k: KappaEstimate
    G2: float
    c_ab: float

    @property
    def G1_int(self) -> int:
        return int(round_half_up(self.G1))

    @property
    def G2_int(self) -> int:
        return int(round_half_up(self.G2))

    def expected_primes(self, x: float) -> float:
        """c_ab * log x, the predicted count of prime |a^m - b^n| <= x."""
        return self.c_ab * math.log(x)

    def to_json(self) -> dict:
        return {
            "a": self.a, "b": self.b, "G1": self.G1, "G1_int": self.G1_int,
            "G2": self.G2, "G2_int": self.G2_int, "c_ab": self.c_ab,
            "kappa": self.kappa_k.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "PredictionReport":
        return cls(data["a"], data["b"], data["G1"], KappaEstimate.from_json(data["kappa"]),
                   data["G2"], data["c_ab"])


def first_guess(a: int, b: int) -> float:
    """200ab / (phi(ab) log b)."""
    return 200 * a * b / (totient(a * b) * math.log(b))


def predictions(a: int, b: int, k: int = 7, **kappa_opts) -> PredictionReport:
    est = kappa(a, b, k, **kappa_opts)
    phi = totient(a * b)
    g1 = 200 * a * b / (phi * math.log(b))
    kap = float(est.kappa)
    g2 = g1 * kap
    c_ab = 2 * a * b * kap / (phi * math.log(a) * math.log(b))
    return PredictionReport(a, b, g1, est, g2, c_ab)
