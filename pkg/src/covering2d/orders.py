"""Multiplicative orders and the two directions between primes and triples.

Forward: a prime p not dividing ab determines the triple whose solution set
is ``{(m, n) : a^m = b^n (mod p)}``. Backward: a reduced triple, a prime
p = 1 (mod r) and an element g of order r give residues a, b mod p realizing
that triple, and CRT over several primes assembles a pair (a, b) with a fixed
divisor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm, prod

from .covering import CoveringSystem
from .errors import DomainError, InsufficientPrimes
from .lattice import ReducedTriple, from_projection
from .numtheory import (
    carmichael_from_factors,
    crt,
    factorize,
    is_probable_prime,
    perfect_power,
    primes_up_to,
)


@dataclass(frozen=True)
class PrimeLocalData:
    p: int
    ord_a: int
    ord_b: int
    triple: ReducedTriple

    def to_json(self) -> dict:
        return {"p": self.p, "ord_a": self.ord_a, "ord_b": self.ord_b, "triple": self.triple.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "PrimeLocalData":
        return cls(data["p"], data["ord_a"], data["ord_b"], ReducedTriple.from_json(data["triple"]))


@dataclass(frozen=True)
class RealizedTriple:
    triple: ReducedTriple
    p: int
    g: int
    a_res: int
    b_res: int

    def to_json(self) -> dict:
        return {"p": self.p, "triple": self.triple.to_json(), "g": self.g,
                "a_res": self.a_res, "b_res": self.b_res}

    @classmethod
    def from_json(cls, data: dict) -> "RealizedTriple":
        return cls(ReducedTriple.from_json(data["triple"]), data["p"], data["g"],
                   data["a_res"], data["b_res"])


@dataclass(frozen=True)
class PairConstruction:
    """CRT output: a, b modulo Q = prod(p_i) plus the per-prime certificate."""

    a: int
    b: int
    Q: int
    primes: tuple[RealizedTriple, ...] = field(default_factory=tuple)

    @property
    def parities(self) -> dict[str, tuple[int, int]]:
        """Parity of each value and of its other representative (value + Q)."""
        return {"a": (self.a % 2, (self.a + self.Q) % 2), "b": (self.b % 2, (self.b + self.Q) % 2)}

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "Q": self.Q, "primes": [rt.to_json() for rt in self.primes]}

    @classmethod
    def from_json(cls, data: dict) -> "PairConstruction":
        return cls(data["a"], data["b"], data["Q"],
                   tuple(RealizedTriple.from_json(x) for x in data["primes"]))


def _order_with_exponent(x: int, q: int, exponent: int, exp_factors: dict[int, int]) -> int:
    d = exponent
    for f, e in exp_factors.items():
        for _ in range(e):
            if pow(x, d // f, q) == 1:
                d //= f
            else:
                break
    return d


def mult_order(x: int, q: int, q_factors: dict[int, int] | None = None) -> int:
    """Least d >= 1 with x^d = 1 (mod q).

    For prime q the group exponent is q - 1. Otherwise it is the Carmichael
    function of q, computed from ``q_factors`` when given, else by factoring q.
    """
    if q < 2:
        raise DomainError(f"modulus must be >= 2, got {q}")
    if gcd(x, q) != 1:
        raise DomainError(f"{x} is not a unit modulo {q}")
    if q_factors is None and is_probable_prime(q):
        exponent = q - 1
    else:
        exponent = carmichael_from_factors(q_factors or factorize(q))
    return _order_with_exponent(x % q, q, exponent, factorize(exponent))


def has_order(g: int, p: int, ell: int, ell_factors: dict[int, int] | None = None) -> bool:
    if pow(g, ell, p) != 1:
        return False
    return all(pow(g, ell // f, p) != 1 for f in (ell_factors or factorize(ell)))


def triple_for_prime(p: int, a: int, b: int) -> PrimeLocalData:
    """Reduced triple describing where p divides a^m - b^n.

    a^m lies in <b> exactly when u = r/gcd(r, s) divides m, and then
    a^(u*M) = b^(v*M) pins n modulo s.
    """
    if (a * b) % p == 0:
        raise DomainError(f"{p} divides ab = {a * b}; it never divides a^m - b^n")
    r = mult_order(a, p)
    s = mult_order(b, p)
    u = r // gcd(r, s)
    target = pow(a, u, p)
    bv = 1
    for v in range(1, s + 1):
        bv = bv * b % p
        if bv == target:
            break
    else:  # pragma: no cover - a^u lies in <b> by construction
        raise AssertionError(f"no v with {a}^{u} = {b}^v mod {p}")
    # lcm(r, s) = u*s; the solution set is {(u*M, n) : n = M*v mod s}
    return PrimeLocalData(p, r, s, from_projection(u, v, s))


def element_of_order(p: int, ell: int) -> int:
    """Least positive residue of multiplicative order ell modulo prime p."""
    if ell < 1 or (p - 1) % ell:
        raise DomainError(f"{ell} does not divide {p} - 1")
    if ell == 1:
        return 1
    ell_factors = factorize(ell)
    for g in range(2, p):
        if has_order(g, p, ell, ell_factors):
            return g
    raise AssertionError("unreachable: the unit group is cyclic")  # pragma: no cover


def elements_of_order(p: int, ell: int) -> list[int]:
    """All phi(ell) residues of order ell modulo p, ascending."""
    if ell < 1 or (p - 1) % ell:
        raise DomainError(f"{ell} does not divide {p} - 1")
    g0 = element_of_order(p, ell)
    return sorted(pow(g0, e, p) for e in range(1, ell + 1) if gcd(e, ell) == 1)


def _realization_exponent(t: ReducedTriple) -> int:
    """Least j >= 1 with j*(v/(v,s)) = 1 mod (r', s) and gcd(j, s) == 1."""
    ell, u, v = t.r, t.u, t.v
    s = ell // u
    d = gcd(v, s)
    r_ = ell // d
    mod = gcd(r_, s)
    target = v // d
    for j in range(1, lcm(mod, s) + 1):
        if (j * target - 1) % mod == 0 and gcd(j, s) == 1:
            return j
    raise AssertionError(f"no realization exponent for {t}")  # pragma: no cover


def realize_triple(t: ReducedTriple, p: int, g: int) -> RealizedTriple:
    """Residues a, b mod p for which p divides a^m - b^n exactly on S(t)."""
    ell = t.r
    if (p - 1) % ell:
        raise DomainError(f"{p} is not 1 mod {ell}")
    if not has_order(g % p, p, ell):
        raise DomainError(f"{g} does not have order {ell} modulo {p}")
    s = ell // t.u
    r_ = ell // gcd(t.v, s)
    j = _realization_exponent(t)
    a_res = pow(g, ell // r_, p)
    b_res = pow(g, j * ell // s, p)
    return RealizedTriple(t, p, g % p, a_res, b_res)


def find_primes_for_triple(t: ReducedTriple, count: int, bound: int) -> list[int]:
    found = [p for p in primes_up_to(bound) if (p - 1) % t.r == 0][:count]
    if len(found) < count:
        raise InsufficientPrimes(found, count, bound)
    return found


def construct_pair(
    cs: CoveringSystem,
    primes: list[int],
    generators: list[int] | None = None,
    odd: tuple[str, ...] = (),
) -> PairConstruction:
    """CRT-assemble (a, b, Q) from one realized triple per prime.

    ``odd`` names coordinates ("a", "b") whose representative should be odd;
    since Q is odd, adding Q flips parity. The default is least positive.
    """
    if len(primes) != len(cs.triples):
        raise DomainError(f"{len(cs.triples)} triples but {len(primes)} primes")
    if len(set(primes)) != len(primes):
        raise DomainError(f"primes must be distinct: {primes}")
    if generators is not None and len(generators) != len(primes):
        raise DomainError("one generator per prime is required")
    realized = []
    for i, (t, p) in enumerate(zip(cs.triples, primes)):
        if not is_probable_prime(p):
            raise DomainError(f"{p} is not prime")
        if (p - 1) % t.r:
            raise DomainError(f"{p} is not 1 mod {t.r} (triple {t})")
        g = generators[i] if generators is not None else element_of_order(p, t.r)
        realized.append(realize_triple(t, p, g))
    a, Q = crt([rt.a_res for rt in realized], list(primes))
    b, _ = crt([rt.b_res for rt in realized], list(primes))
    a = a or Q
    b = b or Q
    for name in odd:
        if name not in ("a", "b"):
            raise DomainError(f"unknown coordinate {name!r}")
    if "a" in odd and a % 2 == 0 and Q % 2:
        a += Q
    if "b" in odd and b % 2 == 0 and Q % 2:
        b += Q
    return PairConstruction(a, b, prod(primes), tuple(realized))


def is_perfect_power(x: int) -> tuple[int, int]:
    """(A, k) with x = A^k and k maximal."""
    return perfect_power(x)
